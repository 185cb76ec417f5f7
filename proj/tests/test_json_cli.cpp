#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/cli.hpp"
#include "jp/json_io.hpp"
#include "jp/pineiro.hpp"
#include "jp/render.hpp"

#include <iostream>
#include <sstream>

using namespace jp;

namespace {

Poly from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs)
        v.emplace_back(c);
    return Poly(std::move(v));
}

// run the CLI capturing stdout
struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"jp"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    const int code = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

} // namespace

TEST_CASE("rational and poly wire formats") {
    CHECK(to_json(Rational(3, 4)) == "3/4");
    CHECK(to_json(Rational(5)) == "5");
    const Poly p = from_ints({1, 0, -2}) * Rational(1, 3);
    const auto j = to_json(p);
    CHECK(j.is_array());
    CHECK(j[0] == "1/3");
    CHECK(poly_from_json(j) == p);
}

TEST_CASE("operator and parameter round trips") {
    const ParameterSet p({Rational(5, 3), Rational(2)}, {2, 1}, Rational(7, 2));
    CHECK(to_json(params_from_json(to_json(p))) == to_json(p));

    const DiffOperator dual = build_dual_operator(p);
    CHECK(diffop_from_json(to_json(dual)) == dual);

    const TwistedFunction t = tau(p);
    CHECK(twisted_from_json(to_json(t)) == t);

    const RatFunc f(from_ints({1, 2, 3}), from_ints({0, -1, 1}));
    CHECK(ratfunc_from_json(to_json(f)) == f);
}

TEST_CASE("latex rendering uses explicit fractions") {
    CHECK(latex(Rational(1, 2)) == "\\frac{1}{2}");
    CHECK(latex(Rational(-1, 2)) == "-\\frac{1}{2}");
    CHECK(latex(Rational(3)) == "3");
    CHECK(latex(from_ints({-1, 2}) * Rational(1, 2)) == "x - \\frac{1}{2}");
    const RatFunc f(from_ints({4}), from_ints({0, -1, 1}));
    CHECK(latex(f) == "\\frac{4}{x^{2} - x}");
}

TEST_CASE("cli poly matches the worked example") {
    const CliRun r = run({"poly", "--r", "1", "--m", "2", "--l", "1", "--k", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x - 1/2\n");
}

TEST_CASE("cli poly latex format") {
    const CliRun r = run({"poly", "--r", "1", "--m", "2", "--l", "1", "--k", "2",
                          "--format", "latex"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "\\[ x - \\frac{1}{2} \\]\n");
}

TEST_CASE("cli json output parses back to the same polynomial") {
    const CliRun r = run({"poly", "--r", "2", "--m", "1,1", "--l", "1,0", "--k", "1",
                          "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(params_from_json(j.at("params")).to_string() == "r=2 m=(1,1) l=(1,0) k=1");
    CHECK(poly_from_json(j.at("result").at("poly")) ==
          from_ints({-1, 2}) * Rational(1, 2));
}

TEST_CASE("cli ode emits the dual coefficients") {
    const CliRun r = run({"ode", "--r", "1", "--m", "2", "--l", "1", "--k", "2",
                          "--dual", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const DiffOperator dual = diffop_from_json(j.at("result").at("operator"));
    CHECK(dual == build_dual_operator(
                      ParameterSet({Rational(2)}, {1}, Rational(2))));
}

TEST_CASE("cli verify exit code and report schema") {
    const CliRun r = run({"verify", "--r", "1", "--m", "2", "--l", "1", "--k", "2",
                          "--format", "json"});
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("report").at("all_passed") == true);
    CHECK_FALSE(j.at("report").contains("elapsed_ms")); // timing is opt-in
}

TEST_CASE("cli poly trivial case") {
    const CliRun r = run({"poly", "--r", "2", "--m", "1,1", "--l", "0,0", "--k", "0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("cli usage errors exit with 2") {
    CHECK(run({"poly", "--r", "1", "--m", "2", "--l", "1"}).exit_code == 2); // missing k
    CHECK(run({"poly", "--r", "1", "--m", "2.5", "--l", "1", "--k", "2"}).exit_code ==
          2); // decimals rejected
    CHECK(run({"poly", "--r", "2", "--m", "1,1", "--l", "0,1", "--k", "2"}).exit_code ==
          2); // l must be weakly decreasing
    CHECK(run({"poly", "--r", "2", "--m", "1", "--l", "0", "--k", "2"}).exit_code ==
          2); // wrong list lengths
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({"ode", "--r", "1", "--m", "2", "--l", "1", "--k", "2", "--symbolic"})
              .exit_code == 2); // unknown flag
    // degenerate parameters surface as parameter errors
    CHECK(run({"poly", "--r", "1", "--m", "1/2", "--l", "2", "--k", "1/2",
               "--route", "orthogonality"})
              .exit_code == 2);
}

TEST_CASE("JP_SEED environment variable overrides the sweep seed") {
    setenv("JP_SEED", "4242", 1);
    const CliRun r = run({"sweep", "--r-min", "1", "--r-max", "1", "--m-max", "0",
                          "--k-max", "0", "--generic", "2", "--format", "json"});
    unsetenv("JP_SEED");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("report").at("seed") == 4242);
}

TEST_CASE("cli spaces prints both bases") {
    const CliRun r = run({"spaces", "--r", "1", "--m", "2", "--l", "1", "--k", "2",
                          "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("result").at("V").at("kind") == "first");
    CHECK(j.at("result").at("U").at("kind") == "second");
    CHECK(poly_from_json(j.at("result").at("V").at("elements")[0]) ==
          from_ints({-1, 2}) * Rational(1, 2));
}

TEST_CASE("cli sweep json includes the seed and counts") {
    const CliRun r = run({"sweep", "--r-min", "1", "--r-max", "1", "--m-max", "1",
                          "--k-max", "1", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("report").at("grid_count") == 5);
    CHECK(j.at("report").at("failed_reports") == 0);
    CHECK(j.at("report").contains("seed"));
}
