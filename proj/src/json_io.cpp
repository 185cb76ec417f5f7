#include "jp/json_io.hpp"

namespace jp {

using nlohmann::json;

json to_json(const Rational& q) { return q.to_string(); }

json to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(c.to_string());
    return arr;
}

json to_json(const RatFunc& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const TwistedFunction& f) {
    return json{{"body", to_json(f.body())},
                {"exp_zero", to_json(f.exp_zero())},
                {"exp_one", to_json(f.exp_one())}};
}

json to_json(const DiffOperator& op) {
    json arr = json::array();
    for (const auto& c : op.coeffs())
        arr.push_back(to_json(c));
    return arr;
}

json to_json(const ParameterSet& p) {
    json m = json::array(), l = json::array();
    for (const auto& mi : p.m())
        m.push_back(mi.to_string());
    for (long li : p.l())
        l.push_back(std::to_string(li));
    return json{{"r", p.r()}, {"m", m}, {"l", l}, {"k", p.k().to_string()}};
}

json to_json(const ExponentData& e) {
    const auto arr = [](const std::vector<Rational>& v) {
        json a = json::array();
        for (const auto& q : v)
            a.push_back(q.to_string());
        return a;
    };
    return json{{"infinity_exponents", arr(e.infinity_exponents)},
                {"zero_exponents", arr(e.zero_exponents)},
                {"infinity_falling", arr(e.infinity_falling)},
                {"zero_falling", arr(e.zero_falling)},
                {"seed_exponents", arr(e.seed_exponents)}};
}

json to_json(const SpaceBasis& b) {
    json elems = json::array();
    for (const auto& p : b.elements)
        elems.push_back(to_json(p));
    return json{{"kind", b.kind == SpaceKind::first_type ? "first" : "second"},
                {"elements", elems}};
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skip:
        return "skip";
    }
    return "?";
}

} // namespace

json to_json(const VerificationReport& r, bool include_timing) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json entry{{"name", c.name}, {"status", status_name(c.status)}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    json out{{"params", to_json(r.params)},
             {"checks", checks},
             {"all_passed", r.all_passed()}};
    if (include_timing)
        out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

json to_json(const SweepResult& r, bool include_timing) {
    json reports = json::array();
    for (const auto& rep : r.reports)
        reports.push_back(to_json(rep, include_timing));
    return json{{"grid",
                 {{"r_min", r.spec.r_min},
                  {"r_max", r.spec.r_max},
                  {"m_max", r.spec.m_max},
                  {"k_max", r.spec.k_max}}},
                {"seed", r.spec.seed},
                {"grid_count", r.grid_count},
                {"generic_count", r.spec.generic_count},
                {"failed_reports", r.failed_reports()},
                {"reports", reports}};
}

Rational rational_from_json(const json& j) {
    return Rational::from_string(j.get<std::string>());
}

Poly poly_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& e : j)
        c.push_back(rational_from_json(e));
    return Poly(std::move(c));
}

RatFunc ratfunc_from_json(const json& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

TwistedFunction twisted_from_json(const json& j) {
    return TwistedFunction(poly_from_json(j.at("body")),
                           rational_from_json(j.at("exp_zero")),
                           rational_from_json(j.at("exp_one")));
}

DiffOperator diffop_from_json(const json& j) {
    std::vector<RatFunc> c;
    for (const auto& e : j)
        c.push_back(ratfunc_from_json(e));
    return DiffOperator(std::move(c));
}

ParameterSet params_from_json(const json& j) {
    std::vector<Rational> m;
    for (const auto& e : j.at("m"))
        m.push_back(rational_from_json(e));
    std::vector<long> l;
    for (const auto& e : j.at("l"))
        l.push_back(rational_from_json(e).to_long());
    return ParameterSet(std::move(m), std::move(l), rational_from_json(j.at("k")));
}

} // namespace jp
