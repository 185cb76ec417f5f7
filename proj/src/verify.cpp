#include "jp/verify.hpp"

#include "jp/jacobi.hpp"
#include "jp/linalg.hpp"
#include "jp/wronskian.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace jp {

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail)
            return false;
    return true;
}

size_t VerificationReport::count(CheckStatus s) const {
    size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s)
            ++n;
    return n;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

Poly roots_to_poly(const std::vector<Rational>& roots) {
    Poly f(1);
    for (const auto& root : roots)
        f = f * Poly::linear_root(root);
    return f;
}

std::map<Rational, size_t> to_multiset(const std::vector<Rational>& values) {
    std::map<Rational, size_t> m;
    for (const auto& v : values)
        ++m[v];
    return m;
}

std::string multiset_str(const std::map<Rational, size_t>& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [v, mult] : m)
        for (size_t i = 0; i < mult; ++i) {
            os << (first ? "" : ", ") << v;
            first = false;
        }
    os << "}";
    return os.str();
}

// either a computed polynomial or the degeneracy that stopped it
struct RouteResult {
    std::optional<Poly> value;
    std::string reason;
};

RouteResult run_route(const std::function<Poly()>& f) {
    RouteResult out;
    try {
        out.value = f();
    } catch (const DegenerateParameterError& e) {
        out.reason = e.what();
    }
    return out;
}

} // namespace

VerificationReport verify_all(const ParameterSet& p,
                              std::optional<size_t> corrupt_infinity_falling) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report{p, {}, 0};

    const ExponentData truth = exponent_data(p);
    ExponentData used = truth;
    if (corrupt_infinity_falling) {
        used.infinity_falling.at(*corrupt_infinity_falling) += Rational(1);
    }

    const DiffOperator annihilator = annihilator_from(used.infinity_falling,
                                                      used.zero_falling, p);
    const DiffOperator dual = dual_operator_from(used.infinity_falling, used.zero_falling);

    // the three construction routes (the operators above never use them)
    const RouteResult rec = p.consistent()
                                ? run_route([&] { return v0_via_recursion(p); })
                                : RouteResult{std::nullopt, "requires consistent parameters"};
    const RouteResult orth = run_route([&] { return p_via_orthogonality(p); });
    const RouteResult rodr = run_route([&] { return rodrigues(p); });
    std::vector<std::pair<std::string, const RouteResult*>> routes = {
        {"recursion", &rec}, {"orthogonality", &orth}, {"rodrigues", &rodr}};
    const Poly* any_p = nullptr;
    for (const auto& [name, rr] : routes)
        if (rr->value) {
            any_p = &*rr->value;
            break;
        }

    std::optional<SpaceBasis> v_basis, u_basis;
    std::string space_error;
    if (p.consistent()) {
        try {
            v_basis = build_V(p);
            u_basis = build_U_from_V(*v_basis);
        } catch (const std::exception& e) {
            space_error = e.what();
        }
    }

    const auto add = [&](const std::string& name, CheckStatus st, std::string detail = "") {
        report.checks.push_back({name, st, std::move(detail)});
    };
    const auto add_bool = [&](const std::string& name, bool ok, const std::string& witness) {
        add(name, ok ? CheckStatus::pass : CheckStatus::fail, ok ? "" : witness);
    };
    // runs a check body that returns (ok, witness); exceptions fail the check
    const auto guarded = [&](const std::string& name,
                             const std::function<std::pair<bool, std::string>()>& body) {
        try {
            auto [ok, witness] = body();
            add_bool(name, ok, witness);
        } catch (const std::exception& e) {
            add(name, CheckStatus::fail, e.what());
        }
    };

    // falling-factorial reconstruction of the two exponent polynomials
    guarded("falling-reconstruction-infinity", [&] {
        const Poly lhs = from_falling_coeffs(used.infinity_falling);
        const Poly rhs = roots_to_poly(truth.infinity_exponents);
        return std::make_pair(lhs == rhs, "reconstructed " + lhs.to_string("a") +
                                              " vs " + rhs.to_string("a"));
    });
    guarded("falling-reconstruction-zero", [&] {
        const Poly lhs = from_falling_coeffs(used.zero_falling);
        const Poly rhs = roots_to_poly(truth.zero_exponents);
        return std::make_pair(lhs == rhs, "reconstructed " + lhs.to_string("a") +
                                              " vs " + rhs.to_string("a"));
    });

    guarded("structural-constants", [&] {
        const Rational d0 = roots_to_poly(truth.infinity_exponents).eval(Rational(0));
        std::ostringstream os;
        bool ok = true;
        if (!used.infinity_falling.back().is_one()) {
            ok = false;
            os << "leading infinity coefficient " << used.infinity_falling.back() << "; ";
        }
        if (!used.zero_falling.back().is_one()) {
            ok = false;
            os << "leading zero coefficient " << used.zero_falling.back() << "; ";
        }
        if (!used.zero_falling.front().is_zero()) {
            ok = false;
            os << "constant zero coefficient " << used.zero_falling.front() << "; ";
        }
        if (used.infinity_falling.front() != d0) {
            ok = false;
            os << "constant infinity coefficient " << used.infinity_falling.front()
               << " vs value at zero " << d0;
        }
        return std::make_pair(ok, os.str());
    });

    if (p.r() == 1) {
        guarded("hypergeometric-display", [&] {
            const Poly x(std::vector<Rational>{Rational(0), Rational(1)});
            const Poly xxm1 = x * Poly::linear_root(Rational(1));
            const Rational m1 = p.m_at(1), k = p.k(), l1 = p.l_at(1);
            const Poly c1num = x * (k + m1) - Poly(m1);
            const RatFunc c0(Poly(l1 * (k + m1 + Rational(1) - l1)), xxm1);
            const DiffOperator displayed(
                {c0, RatFunc(-c1num, xxm1), RatFunc(1)});
            return std::make_pair(annihilator == displayed,
                                  "built " + annihilator.to_string() + " vs displayed " +
                                      displayed.to_string());
        });
    } else {
        add("hypergeometric-display", CheckStatus::skip, "only defined for r = 1");
    }

    guarded("commutation-identity", [&] {
        for (size_t i = 0; i <= p.r(); ++i) {
            for (size_t j = 0; j <= p.r(); ++j) {
                const auto bump = [&](size_t idx) {
                    std::vector<long> l = p.l();
                    for (size_t t = 0; t < idx; ++t)
                        ++l[t];
                    return ParameterSet(p.m(), l, p.k() + Rational(1));
                };
                const DiffOperator lhs =
                    step_operator(bump(i), j).compose(step_operator(p, i));
                const DiffOperator rhs =
                    step_operator(bump(j), i).compose(step_operator(p, j));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "pair (" << i << "," << j << "): " << lhs.to_string() << " vs "
                       << rhs.to_string();
                    return std::make_pair(false, os.str());
                }
            }
        }
        return std::make_pair(true, std::string());
    });

    if (p.consistent()) {
        guarded("ordering-independence", [&] {
            const DiffOperator a = product_operator(p, canonical_ordering(p));
            const DiffOperator b = product_operator(p, reversed_ordering(p));
            return std::make_pair(a == b, "canonical " + a.to_string() +
                                              " vs reversed " + b.to_string());
        });
    } else {
        add("ordering-independence", CheckStatus::skip, "requires consistent parameters");
    }

    // construction routes
    for (const auto& [name, rr] : routes) {
        const std::string check = "route-" + name;
        if (rr->value) {
            // recursion must produce a monic polynomial of degree l_1
            const bool ok = rr->value->degree() == p.l_at(1).to_long() &&
                            rr->value->leading().is_one();
            add_bool(check, ok, "produced " + rr->value->to_string());
        } else if (name == "recursion" && p.consistent()) {
            add(check, CheckStatus::fail, rr->reason);
        } else {
            add(check, CheckStatus::skip, rr->reason);
        }
    }

    {
        std::vector<std::pair<std::string, const Poly*>> avail;
        for (const auto& [name, rr] : routes)
            if (rr->value)
                avail.emplace_back(name, &*rr->value);
        if (avail.size() < 2) {
            add("route-agreement", CheckStatus::skip, "fewer than two routes defined");
        } else {
            bool ok = true;
            std::ostringstream os;
            for (size_t i = 1; i < avail.size(); ++i) {
                if (*avail[i].second != *avail[0].second) {
                    ok = false;
                    os << avail[0].first << " gave " << avail[0].second->to_string()
                       << " but " << avail[i].first << " gave "
                       << avail[i].second->to_string();
                    break;
                }
            }
            add_bool("route-agreement", ok, os.str());
        }
    }

    if (p.r() == 1 && any_p != nullptr) {
        try {
            const Poly oracle =
                jacobi_oracle(p.l_at(1).to_long(), -p.k() - Rational(1),
                              -p.m_at(1) - Rational(1));
            add_bool("jacobi-oracle-agreement", oracle == *any_p,
                     "oracle " + oracle.to_string() + " vs " + any_p->to_string());
        } catch (const std::domain_error& e) {
            add("jacobi-oracle-agreement", CheckStatus::skip, e.what());
        }
    } else {
        add("jacobi-oracle-agreement", CheckStatus::skip,
            p.r() == 1 ? "no route produced the polynomial" : "only defined for r = 1");
    }

    if (any_p != nullptr) {
        guarded("annihilation", [&] {
            const RatFunc image = annihilator.apply(*any_p);
            return std::make_pair(image.is_zero(),
                                  "operator sends " + any_p->to_string() + " to " +
                                      image.to_string());
        });
    } else {
        add("annihilation", CheckStatus::skip, "no route produced the polynomial");
    }

    const auto spaces_or_skip = [&](const std::string& name) -> bool {
        if (!p.consistent()) {
            add(name, CheckStatus::skip, "requires consistent parameters");
            return false;
        }
        if (!v_basis || !u_basis) {
            add(name, CheckStatus::fail, space_error);
            return false;
        }
        return true;
    };
    const long kernel_bound =
        p.consistent() ? (p.k() + p.m_prefix(p.r())).to_long() + static_cast<long>(p.r())
                       : 0;

    if (spaces_or_skip("kernel-matches-first-type")) {
        guarded("kernel-matches-first-type", [&] {
            const auto kernel = annihilator.polynomial_kernel(kernel_bound);
            if (kernel.size() != p.r() + 1)
                return std::make_pair(false, "kernel dimension " +
                                                 std::to_string(kernel.size()));
            if (!same_span(kernel, v_basis->elements))
                return std::make_pair(false, std::string("kernel span differs from the first-type space"));
            const SpaceBasis shaped = echelonize_to_shape(SpaceKind::first_type, kernel, p);
            validate_first_type_conditions(shaped);
            return std::make_pair(true, std::string());
        });
    }

    if (spaces_or_skip("kernel-matches-second-type")) {
        guarded("kernel-matches-second-type", [&] {
            const auto kernel = dual.polynomial_kernel(kernel_bound);
            if (kernel.size() != p.r() + 1)
                return std::make_pair(false, "kernel dimension " +
                                                 std::to_string(kernel.size()));
            if (!same_span(kernel, u_basis->elements))
                return std::make_pair(
                    false, std::string("kernel span differs from the second-type space"));
            const SpaceBasis shaped = echelonize_to_shape(SpaceKind::second_type, kernel, p);
            max_vanishing_element(shaped);
            return std::make_pair(true, std::string());
        });
    }

    if (spaces_or_skip("dual-annihilates-second-type")) {
        guarded("dual-annihilates-second-type", [&] {
            for (const auto& u : u_basis->elements) {
                const RatFunc image = dual.apply(u);
                if (!image.is_zero())
                    return std::make_pair(false, "dual operator sends " + u.to_string() +
                                                     " to " + image.to_string());
            }
            return std::make_pair(true, std::string());
        });
    }

    if (spaces_or_skip("duality-roundtrip")) {
        guarded("duality-roundtrip", [&] {
            std::vector<Poly> gens;
            for (size_t skip = 0; skip < u_basis->elements.size(); ++skip) {
                std::vector<Poly> subset;
                for (size_t j = 0; j < u_basis->elements.size(); ++j)
                    if (j != skip)
                        subset.push_back(u_basis->elements[j]);
                gens.push_back(divided_wronskian(SpaceKind::second_type, subset, p));
            }
            return std::make_pair(same_span(gens, v_basis->elements),
                                  "second-type divided Wronskians do not recover the "
                                  "first-type space");
        });
    }

    if (spaces_or_skip("u-wronskian-weight")) {
        guarded("u-wronskian-weight", [&] {
            const Poly w = wronskian(u_basis->elements);
            const Poly t = big_T(p).expand();
            if (w.is_zero() || t.is_zero())
                return std::make_pair(false, "degenerate wronskian " + w.to_string());
            const Poly scaled = t * (w.leading() / t.leading());
            return std::make_pair(w == scaled, "wronskian " + w.to_string() +
                                                   " vs weight " + t.to_string());
        });
    }

    const auto exponent_check = [&](const std::string& name, const DiffOperator& op,
                                    SingularPoint at,
                                    const std::vector<Rational>& expected) {
        guarded(name, [&] {
            const IndicialData data = op.indicial(at);
            const auto want = to_multiset(expected);
            const bool ok = data.residual.degree() == 0 && data.roots == want;
            return std::make_pair(ok, "exponents " + multiset_str(data.roots) +
                                          " (residual " + data.residual.to_string("a") +
                                          ") vs expected " + multiset_str(want));
        });
    };

    std::vector<Rational> at_one{Rational(0)};
    std::vector<Rational> at_infinity;
    for (size_t i = 1; i <= p.r(); ++i)
        at_one.push_back(p.k() + Rational(static_cast<long>(i)));
    for (size_t i = 0; i <= p.r(); ++i)
        at_infinity.push_back(p.k() + p.m_prefix(i) - p.l_at(i) + p.l_at(i + 1) +
                              Rational(static_cast<long>(i)));
    exponent_check("exponents-annihilator-zero", annihilator, SingularPoint::zero,
                   truth.seed_exponents);
    exponent_check("exponents-annihilator-one", annihilator, SingularPoint::one, at_one);
    exponent_check("exponents-annihilator-infinity", annihilator, SingularPoint::infinity,
                   at_infinity);
    exponent_check("exponents-dual-infinity", dual, SingularPoint::infinity,
                   truth.infinity_exponents);
    exponent_check("exponents-dual-zero", dual, SingularPoint::zero, truth.zero_exponents);

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

std::uint64_t ParamSampler::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long ParamSampler::next_long(long lo, long hi) {
    return lo + static_cast<long>(next_u64() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
}

Rational ParamSampler::next_rational() {
    static const long dens[3] = {2, 3, 5};
    const long num = next_long(-4, 4);
    const long den = dens[next_long(0, 2)];
    return Rational(num, den);
}

ParameterSet ParamSampler::next_params(size_t r_min, size_t r_max) {
    const size_t r = static_cast<size_t>(
        next_long(static_cast<long>(r_min), static_cast<long>(r_max)));
    std::vector<long> l(r, 0);
    long cur = next_long(0, 2);
    for (size_t i = r; i-- > 0;) {
        l[i] = cur;
        cur += next_long(0, 2);
    }
    std::vector<Rational> m;
    for (size_t i = 0; i < r; ++i)
        m.push_back(next_rational());
    return ParameterSet(std::move(m), std::move(l), next_rational());
}

std::vector<ParameterSet> enumerate_consistent(size_t r_min, size_t r_max, long m_max,
                                               long k_max) {
    std::vector<ParameterSet> out;
    if (m_max < 0 || k_max < 0)
        return out;
    for (size_t r = r_min; r <= r_max && r >= 1; ++r) {
        std::vector<long> m(r, 0);
        while (true) {
            for (long k = 0; k <= k_max; ++k) {
                // descending l with l_1 <= k and l_s - l_{s+1} <= m_s
                std::vector<long> l(r, 0);
                const std::function<void(size_t)> rec = [&](size_t pos) {
                    if (pos == r) {
                        std::vector<Rational> mq;
                        for (long mi : m)
                            mq.push_back(Rational(mi));
                        out.emplace_back(std::move(mq), l, Rational(k));
                        return;
                    }
                    const long upper = pos == 0 ? k : l[pos - 1];
                    // remaining constraint: l_pos - l_{pos+1} <= m_pos, so
                    // scanning downward keeps the suffix feasible
                    for (long v = 0; v <= upper; ++v) {
                        if (pos > 0 && l[pos - 1] - v > m[pos - 1])
                            continue;
                        l[pos] = v;
                        if (pos == r - 1 && v > m[r - 1])
                            continue;
                        rec(pos + 1);
                    }
                    l[pos] = 0;
                };
                rec(0);
            }
            // odometer over m
            size_t pos = 0;
            while (pos < r && ++m[pos] > m_max) {
                m[pos] = 0;
                ++pos;
            }
            if (pos == r)
                break;
        }
    }
    return out;
}

size_t SweepResult::failed_reports() const {
    size_t n = 0;
    for (const auto& r : reports)
        if (!r.all_passed())
            ++n;
    return n;
}

SweepResult sweep(const SweepSpec& spec) {
    SweepResult out;
    out.spec = spec;
    std::vector<ParameterSet> points =
        enumerate_consistent(spec.r_min, spec.r_max, spec.m_max, spec.k_max);
    out.grid_count = points.size();
    ParamSampler sampler(spec.seed);
    for (size_t i = 0; i < spec.generic_count; ++i)
        points.push_back(sampler.next_params(1, spec.generic_r_max));

    std::vector<std::optional<VerificationReport>> slots(points.size());
    const size_t jobs = std::max<size_t>(1, spec.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < points.size(); ++i)
            slots[i] = verify_all(points[i]);
    } else {
        std::atomic<size_t> cursor{0};
        const auto worker = [&] {
            while (true) {
                const size_t i = cursor.fetch_add(1);
                if (i >= points.size())
                    break;
                slots[i] = verify_all(points[i]);
            }
        };
        std::vector<std::thread> pool;
        for (size_t t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    out.reports.reserve(slots.size());
    for (auto& s : slots)
        out.reports.push_back(std::move(*s));
    return out;
}

} // namespace jp
