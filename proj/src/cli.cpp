#include "jp/cli.hpp"

#include "jp/json_io.hpp"
#include "jp/pineiro.hpp"
#include "jp/render.hpp"
#include "jp/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace jp {

namespace {

struct CommonArgs {
    size_t r = 1;
    std::string m, l;
    std::string k = "0";
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--r", args.r, "number of weights r")->required();
    cmd->add_option("--m", args.m, "comma-separated rationals m_1..m_r (p/q form)")
        ->required();
    cmd->add_option("--l", args.l, "comma-separated nonnegative integers l_1..l_r")
        ->required();
    cmd->add_option("--k", args.k, "rational k (p/q form)")->required();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ','))
        out.push_back(tok);
    return out;
}

ParameterSet parse_params(const CommonArgs& args) {
    std::vector<Rational> m;
    for (const auto& t : split_commas(args.m))
        m.push_back(Rational::from_string(t));
    std::vector<long> l;
    for (const auto& t : split_commas(args.l)) {
        const Rational q = Rational::from_string(t);
        l.push_back(q.to_long());
    }
    if (m.size() != args.r || l.size() != args.r)
        throw std::invalid_argument("expected exactly r entries in --m and --l");
    return ParameterSet(std::move(m), std::move(l), Rational::from_string(args.k));
}

std::vector<size_t> parse_ordering(const std::string& s) {
    std::vector<size_t> out;
    for (const auto& t : split_commas(s))
        out.push_back(static_cast<size_t>(Rational::from_string(t).to_long()));
    return out;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* env = std::getenv("JP_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0')
            return static_cast<std::uint64_t>(v);
        throw std::invalid_argument("JP_SEED must be an unsigned integer");
    }
    return fallback;
}

void emit(const ParameterSet& p, const std::string& key, const nlohmann::json& value) {
    nlohmann::json out{{"params", to_json(p)}, {key, value}};
    std::cout << out.dump(2) << "\n";
}

int cmd_poly(const CommonArgs& args, const std::string& route_flag) {
    const ParameterSet p = parse_params(args);
    std::string route = route_flag;
    if (route == "auto")
        route = p.consistent() ? "recursion" : "orthogonality";
    Poly poly;
    if (route == "recursion")
        poly = v0_via_recursion(p);
    else if (route == "rodrigues")
        poly = rodrigues(p);
    else
        poly = p_via_orthogonality(p);
    if (args.format == "json")
        emit(p, "result", nlohmann::json{{"route", route}, {"poly", to_json(poly)}});
    else if (args.format == "latex")
        std::cout << "\\[ " << latex(poly) << " \\]\n";
    else
        std::cout << poly.to_string() << "\n";
    return 0;
}

int cmd_ode(const CommonArgs& args, bool dual) {
    const ParameterSet p = parse_params(args);
    const DiffOperator op = dual ? build_dual_operator(p) : build_annihilator(p);
    if (args.format == "json") {
        emit(p, "result",
             nlohmann::json{{"dual", dual}, {"operator", to_json(op)}});
    } else if (args.format == "latex") {
        std::cout << "\\[ " << latex(op) << " \\]\n";
    } else {
        for (size_t i = 0; i < op.coeffs().size(); ++i)
            std::cout << "c" << i << " = " << op.coeff(i).to_string() << "\n";
    }
    return 0;
}

int cmd_spaces(const CommonArgs& args, const std::string& ordering) {
    const ParameterSet p = parse_params(args);
    const SpaceBasis v = ordering.empty() ? build_V(p)
                                          : build_V(p, parse_ordering(ordering));
    const SpaceBasis u = build_U_from_V(v);
    if (args.format == "json") {
        emit(p, "result", nlohmann::json{{"V", to_json(v)}, {"U", to_json(u)}});
    } else if (args.format == "latex") {
        for (const auto& e : v.elements)
            std::cout << "\\[ " << latex(e) << " \\]\n";
        for (const auto& e : u.elements)
            std::cout << "\\[ " << latex(e) << " \\]\n";
    } else {
        std::cout << "V basis:\n";
        for (const auto& e : v.elements)
            std::cout << "  " << e.to_string() << "\n";
        std::cout << "U basis:\n";
        for (const auto& e : u.elements)
            std::cout << "  " << e.to_string() << "\n";
    }
    return 0;
}

const char* status_text(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::skip:
        return "skip";
    }
    return "?";
}

void print_report_table(const VerificationReport& rep, bool timing) {
    std::cout << rep.params.to_string() << "\n";
    for (const auto& c : rep.checks) {
        std::cout << "  " << status_text(c.status) << "  " << c.name;
        if (!c.detail.empty())
            std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
    }
    if (timing)
        std::cout << "  (" << rep.elapsed_ms << " ms)\n";
}

int cmd_verify(const CommonArgs& args, bool timing) {
    const ParameterSet p = parse_params(args);
    const VerificationReport rep = verify_all(p);
    if (args.format == "json")
        emit(p, "report", to_json(rep, timing));
    else
        print_report_table(rep, timing);
    return rep.all_passed() ? 0 : 1;
}

int cmd_sweep(const SweepSpec& spec, const std::string& format, bool timing) {
    const SweepResult result = sweep(spec);
    if (format == "json") {
        nlohmann::json out{{"report", to_json(result, timing)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& rep : result.reports) {
            std::cout << (rep.all_passed() ? "pass " : "FAIL ")
                      << rep.params.to_string() << "  (" << rep.count(CheckStatus::pass)
                      << " pass, " << rep.count(CheckStatus::fail) << " fail, "
                      << rep.count(CheckStatus::skip) << " skip)";
            if (timing)
                std::cout << " " << rep.elapsed_ms << " ms";
            std::cout << "\n";
            if (!rep.all_passed())
                for (const auto& c : rep.checks)
                    if (c.status == CheckStatus::fail)
                        std::cout << "    FAIL " << c.name << ": " << c.detail << "\n";
        }
        std::cout << "sweep: " << result.reports.size() << " parameter sets ("
                  << result.grid_count << " grid, " << result.spec.generic_count
                  << " generic), " << result.failed_reports() << " failed, seed "
                  << result.spec.seed << "\n";
    }
    return result.failed_reports() == 0 ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Jacobi-Pineiro polynomials and their Fuchsian annihilators, "
                 "in exact rational arithmetic"};
    app.require_subcommand(1);

    CommonArgs poly_args, ode_args, spaces_args, verify_args;
    std::string route = "auto";
    bool dual = false;
    std::string ordering;
    bool timing = false;

    CLI::App* poly = app.add_subcommand("poly", "print the polynomial P_{m,l,k}");
    add_common(poly, poly_args);
    poly->add_option("--route", route, "construction route")
        ->check(CLI::IsMember({"auto", "recursion", "rodrigues", "orthogonality"}));

    CLI::App* ode = app.add_subcommand("ode", "print the annihilating operator");
    add_common(ode, ode_args);
    ode->add_flag("--dual", dual, "print the dual operator instead");

    CLI::App* spaces = app.add_subcommand("spaces", "print the two polynomial spaces");
    add_common(spaces, spaces_args);
    spaces->add_option("--ordering", ordering, "step ordering (comma-separated indices)");

    CLI::App* verify = app.add_subcommand("verify", "run every check for one parameter set");
    add_common(verify, verify_args);
    verify->add_flag("--timing", timing, "include timings in the output");

    SweepSpec spec;
    std::string sweep_format = "text";
    CLI::App* sw = app.add_subcommand("sweep", "verify a whole parameter grid");
    sw->add_option("--r-min", spec.r_min, "smallest r");
    sw->add_option("--r-max", spec.r_max, "largest r");
    sw->add_option("--m-max", spec.m_max, "largest integer weight");
    sw->add_option("--k-max", spec.k_max, "largest k");
    sw->add_option("--generic", spec.generic_count, "number of sampled rational sets");
    sw->add_option("--generic-r-max", spec.generic_r_max, "largest r for sampled sets");
    sw->add_option("--jobs", spec.jobs, "worker threads");
    sw->add_option("--format", sweep_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sw->add_flag("--timing", timing, "include timings in the output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly->parsed())
            return cmd_poly(poly_args, route);
        if (ode->parsed())
            return cmd_ode(ode_args, dual);
        if (spaces->parsed())
            return cmd_spaces(spaces_args, ordering);
        if (verify->parsed())
            return cmd_verify(verify_args, timing);
        if (sw->parsed()) {
            spec.seed = seed_from_env(spec.seed);
            return cmd_sweep(spec, sweep_format, timing);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace jp
