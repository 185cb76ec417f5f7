#include "jp/pineiro.hpp"

#include "jp/linalg.hpp"
#include "jp/wronskian.hpp"

#include <algorithm>
#include <iostream>
#include <mutex>
#include <sstream>

namespace jp {

namespace {

const Poly kX(std::vector<Rational>{Rational(0), Rational(1)});
const Poly kXm1(std::vector<Rational>{Rational(-1), Rational(1)});

std::string degenerate_msg(const ParameterSet& p, const std::string& what) {
    return what + " at " + p.to_string();
}

} // namespace

DiffOperator step_operator(const ParameterSet& p, size_t i) {
    if (i > p.r())
        throw std::invalid_argument("step_operator: index out of range");
    const Rational c = p.k() + p.m_prefix(i) - p.l_at(i) + p.l_at(i + 1) +
                       Rational(static_cast<long>(i));
    // x(x-1) d - c (x-1) - k - 1
    const Poly order1 = kX * kXm1;
    const Poly order0 = kXm1 * (-c) - Poly(p.k() + Rational(1));
    return DiffOperator({RatFunc(order0), RatFunc(order1)});
}

std::vector<size_t> canonical_ordering(const ParameterSet& p) {
    if (!p.consistent())
        throw DegenerateParameterError(
            degenerate_msg(p, "step ordering requires consistent parameters"));
    std::vector<size_t> ord;
    for (size_t i = 1; i <= p.r(); ++i) {
        const long reps = (p.l_at(i) - p.l_at(i + 1)).to_long();
        ord.insert(ord.end(), static_cast<size_t>(reps), i);
    }
    const long zeros = (p.k() - p.l_at(1)).to_long();
    ord.insert(ord.end(), static_cast<size_t>(zeros), 0);
    return ord;
}

std::vector<size_t> reversed_ordering(const ParameterSet& p) {
    std::vector<size_t> ord = canonical_ordering(p);
    std::reverse(ord.begin(), ord.end());
    return ord;
}

DiffOperator product_operator(const ParameterSet& p, const std::vector<size_t>& ordering) {
    if (!p.consistent())
        throw DegenerateParameterError(
            degenerate_msg(p, "product operator requires consistent parameters"));
    // the ordering must contain 0 exactly k - l_1 times and each i
    // exactly l_i - l_{i+1} times
    std::vector<long> counts(p.r() + 1, 0);
    for (size_t idx : ordering) {
        if (idx > p.r())
            throw std::invalid_argument("product_operator: step index out of range");
        ++counts[idx];
    }
    if (Rational(counts[0]) != p.k() - p.l_at(1))
        throw std::invalid_argument("product_operator: wrong number of 0-steps");
    for (size_t i = 1; i <= p.r(); ++i)
        if (Rational(counts[i]) != p.l_at(i) - p.l_at(i + 1))
            throw std::invalid_argument("product_operator: wrong multiplicity of step " +
                                        std::to_string(i));

    DiffOperator acc = DiffOperator::identity();
    std::vector<long> partial(p.r(), 0);
    for (size_t s = 0; s < ordering.size(); ++s) {
        const ParameterSet intermediate(p.m(), partial, Rational(static_cast<long>(s)));
        acc = step_operator(intermediate, ordering[s]).compose(acc);
        for (size_t t = 0; t < ordering[s]; ++t)
            ++partial[t];
    }
    return acc;
}

Poly v0_via_recursion(const ParameterSet& p) {
    const DiffOperator op = product_operator(p, canonical_ordering(p));
    const RatFunc raw = op.apply(Poly(1));
    const Poly poly = raw.as_poly(); // step operators have polynomial coefficients
    if (poly.degree() != p.l_at(1).to_long())
        throw DegenerateParameterError(
            degenerate_msg(p, "recursion result dropped below degree l_1"));
    return poly.monic();
}

Poly p_via_orthogonality(const ParameterSet& p) {
    const long deg = p.l_at(1).to_long();
    if (deg == 0)
        return Poly(1);

    // Moments of x^s relative to the group reference, by the ratio
    // recurrence  M(a+1)/M(a) = (a+1)/(a+1-k)  for the weight
    // x^a (1-x)^(-k-1) on [0,1]. Within group g every needed moment is
    // an integer shift of the base exponent beta_g, so each condition
    // divides by the base moment and becomes exactly rational.
    Mat rows;
    Vec rhs;
    for (size_t g = 1; g <= p.r(); ++g) {
        const long count = (p.l_at(g) - p.l_at(g + 1)).to_long();
        if (count == 0)
            continue;
        const Rational beta = -(p.m_prefix(g) + Rational(static_cast<long>(g)));
        const long top = deg + count - 1;
        std::vector<Rational> ratio(static_cast<size_t>(top) + 1);
        ratio[0] = Rational(1);
        for (long s = 0; s < top; ++s) {
            const Rational num = beta + Rational(s + 1);
            const Rational den = num - p.k();
            if (den.is_zero()) {
                std::ostringstream os;
                os << "moment ratio pole in group " << g << " at shift " << s;
                throw DegenerateParameterError(degenerate_msg(p, os.str()));
            }
            ratio[static_cast<size_t>(s) + 1] = ratio[static_cast<size_t>(s)] * num / den;
        }
        for (long t = 0; t < count; ++t) {
            Vec row(static_cast<size_t>(deg), Rational(0));
            for (long j = 0; j < deg; ++j)
                row[static_cast<size_t>(j)] = ratio[static_cast<size_t>(t + j)];
            rows.push_back(std::move(row));
            rhs.push_back(-ratio[static_cast<size_t>(t + deg)]);
        }
    }

    const LinearSolution sol = solve_linear(rows, rhs);
    if (!sol.consistent || sol.rank != static_cast<size_t>(deg))
        throw DegenerateParameterError(
            degenerate_msg(p, "singular orthogonality system"));
    std::vector<Rational> coeffs = sol.particular;
    coeffs.push_back(Rational(1));
    return Poly(std::move(coeffs));
}

Poly rodrigues(const ParameterSet& p) {
    // Nested construction: start from x^(l_1-l_2-m_1-1) (x-1)^(l_1-k-1),
    // alternate multiplication by x^(l_g-l_{g+1}-m_g-1) with
    // (l_g - l_{g+1})-fold differentiation, then clear the residual
    // twist with the prefactor x^(m_1+...+m_r+r) (x-1)^(k+1).
    TwistedFunction f(Poly(1),
                      p.l_at(1) - p.l_at(2) - p.m_at(1) - Rational(1),
                      p.l_at(1) - p.k() - Rational(1));
    for (size_t g = 1; g <= p.r(); ++g) {
        if (g >= 2) {
            const TwistedFunction factor(
                Poly(1), p.l_at(g) - p.l_at(g + 1) - p.m_at(g) - Rational(1), Rational(0));
            f = f * factor;
        }
        const long steps = (p.l_at(g) - p.l_at(g + 1)).to_long();
        for (long s = 0; s < steps; ++s) {
            f = f.derivative();
            if (f.is_zero())
                throw DegenerateParameterError(
                    degenerate_msg(p, "rodrigues chain vanished"));
        }
    }
    const TwistedFunction prefactor(Poly(1), p.m_prefix(p.r()) + Rational(static_cast<long>(p.r())),
                                    p.k() + Rational(1));
    static std::once_flag note;
    std::call_once(note, [] {
        std::cerr << "note: rodrigues prefactor uses x^(sum(m)+r), the exponent "
                     "that makes the output a polynomial\n";
    });
    const TwistedFunction result = f * prefactor;
    if (!result.is_polynomial())
        throw DegenerateParameterError(
            degenerate_msg(p, "rodrigues result is not a polynomial"));
    const Poly expanded = result.expand();
    if (expanded.degree() != p.l_at(1).to_long())
        throw DegenerateParameterError(
            degenerate_msg(p, "rodrigues result has wrong degree"));
    return expanded.monic();
}

DiffOperator dual_operator_from(const std::vector<Rational>& infinity_falling,
                                const std::vector<Rational>& zero_falling) {
    if (infinity_falling.size() != zero_falling.size() || infinity_falling.size() < 2)
        throw std::invalid_argument("dual_operator_from: bad coefficient lists");
    const size_t order = infinity_falling.size() - 1; // r+1
    std::vector<RatFunc> coeffs;
    coeffs.reserve(order + 1);
    for (size_t i = 0; i <= order; ++i) {
        const Poly num = kX * infinity_falling[i] - Poly(zero_falling[i]);
        const Poly den = Poly::monomial(Rational(1), order - i) * kXm1;
        coeffs.emplace_back(num, den);
    }
    return DiffOperator(std::move(coeffs));
}

DiffOperator build_dual_operator(const ParameterSet& p) {
    const ExponentData e = exponent_data(p);
    return dual_operator_from(e.infinity_falling, e.zero_falling);
}

DiffOperator annihilator_from(const std::vector<Rational>& infinity_falling,
                              const std::vector<Rational>& zero_falling,
                              const ParameterSet& p) {
    const DiffOperator dual = dual_operator_from(infinity_falling, zero_falling);
    const Rational sign = (p.r() % 2 == 0) ? Rational(-1) : Rational(1); // (-1)^(r+1)
    return dual.formal_adjoint().gauge_conjugate(tau(p)) * sign;
}

DiffOperator build_annihilator(const ParameterSet& p) {
    const ExponentData e = exponent_data(p);
    return annihilator_from(e.infinity_falling, e.zero_falling, p);
}

TwistedFunction tau(const ParameterSet& p) {
    return TwistedFunction(Poly(1), p.m_prefix(p.r()), p.k());
}

TwistedFunction big_T(const ParameterSet& p) {
    Rational weighted(0);
    for (size_t i = 1; i <= p.r(); ++i)
        weighted += p.m_at(i) * Rational(static_cast<long>(i));
    return TwistedFunction(Poly(1), weighted, p.k());
}

std::vector<TwistedFunction> weights_T(const ParameterSet& p) {
    std::vector<TwistedFunction> out;
    out.reserve(p.r());
    out.emplace_back(Poly(1), p.m_at(1), p.k());
    for (size_t i = 2; i <= p.r(); ++i)
        out.emplace_back(Poly(1), p.m_at(i), Rational(0));
    return out;
}

Poly divided_wronskian(SpaceKind kind, const std::vector<Poly>& fs, const ParameterSet& p) {
    if (fs.size() != p.r())
        throw std::invalid_argument("divided_wronskian: expected exactly r inputs");
    const Poly w = wronskian(fs);
    if (w.is_zero())
        return Poly();
    // weight divisor: prod T_i^(r-i) for the first-type side,
    // prod T_j^(j-1) for the second-type side
    TwistedFunction divisor = TwistedFunction::one();
    const auto ts = weights_T(p);
    for (size_t i = 1; i < p.r(); ++i) {
        const long e = (kind == SpaceKind::first_type) ? static_cast<long>(p.r() - i)
                                                       : static_cast<long>(i);
        const TwistedFunction& t = (kind == SpaceKind::first_type) ? ts[i - 1] : ts[i];
        for (long q = 0; q < e; ++q)
            divisor = divisor * t;
    }
    if (!divisor.is_polynomial())
        throw DegenerateParameterError(
            degenerate_msg(p, "divided wronskian weights are not polynomial"));
    const Poly d = divisor.expand();
    auto [q, rem] = w.divmod(d);
    if (!rem.is_zero())
        throw DegenerateParameterError(
            degenerate_msg(p, "divided wronskian division is not exact"));
    return q;
}

ShapeSpec shape_spec(SpaceKind kind, const ParameterSet& p) {
    const ExponentData e = exponent_data(p);
    ShapeSpec out;
    for (size_t i = 0; i <= p.r(); ++i) {
        if (kind == SpaceKind::first_type) {
            out.valuation_exponents.push_back(e.seed_exponents[i].to_long());
            out.cofactor_degrees.push_back((p.k() - p.l_at(i) + p.l_at(i + 1)).to_long());
        } else {
            out.valuation_exponents.push_back(e.zero_exponents[i].to_long());
            out.cofactor_degrees.push_back(
                (p.l_at(p.r() - i) - p.l_at(p.r() - i + 1)).to_long());
        }
    }
    return out;
}

SpaceBasis echelonize_to_shape(SpaceKind kind, const std::vector<Poly>& gens,
                               const ParameterSet& p) {
    const ShapeSpec spec = shape_spec(kind, p);
    const size_t dim = p.r() + 1;

    // reduced echelon by leading term: strictly increasing degrees,
    // monic pivots, pivot degrees eliminated from the other rows.
    // Reversing coefficients turns this into the valuation echelon
    // canonical_span already computes.
    size_t width = 0;
    for (const auto& g : gens)
        width = std::max(width, static_cast<size_t>(g.degree() + 1));
    std::vector<Poly> reversed;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        std::vector<Rational> c(width);
        for (size_t i = 0; i < width; ++i)
            c[i] = g.coeff(width - 1 - i);
        reversed.push_back(Poly(std::move(c)));
    }
    reversed = canonical_span(reversed);
    if (reversed.size() != dim)
        throw DegenerateParameterError(degenerate_msg(p, "space has wrong dimension"));
    std::vector<Poly> echelon; // increasing degree
    for (size_t i = reversed.size(); i-- > 0;) {
        std::vector<Rational> c(width);
        for (size_t j = 0; j < width; ++j)
            c[j] = reversed[i].coeff(width - 1 - j);
        echelon.push_back(Poly(std::move(c)));
    }
    for (size_t i = 0; i < dim; ++i) {
        const long want = spec.valuation_exponents[i] + spec.cofactor_degrees[i];
        if (echelon[i].degree() != want) {
            std::ostringstream os;
            os << "basis degree " << echelon[i].degree() << " at position " << i
               << " does not match expected " << want;
            throw DegenerateParameterError(degenerate_msg(p, os.str()));
        }
    }

    // element i: a monic-degree combination of echelon[0..i] divisible
    // by x^valuation_exponents[i]; free coordinates resolved to zero
    std::vector<Poly> elements;
    for (size_t i = 0; i < dim; ++i) {
        const size_t val = static_cast<size_t>(spec.valuation_exponents[i]);
        if (val == 0 || i == 0) {
            if (echelon[i].valuation() < val)
                throw DegenerateParameterError(
                    degenerate_msg(p, "shape element misses its valuation"));
            elements.push_back(echelon[i]);
            continue;
        }
        Mat rows(val, Vec(i, Rational(0)));
        Vec rhs(val, Rational(0));
        for (size_t t = 0; t < val; ++t) {
            for (size_t j = 0; j < i; ++j)
                rows[t][j] = echelon[j].coeff(t);
            rhs[t] = -echelon[i].coeff(t);
        }
        const LinearSolution sol = solve_linear(rows, rhs);
        if (!sol.consistent) {
            std::ostringstream os;
            os << "no basis element with valuation " << val << " at position " << i;
            throw DegenerateParameterError(degenerate_msg(p, os.str()));
        }
        Poly g = echelon[i];
        for (size_t j = 0; j < i; ++j)
            g += echelon[j] * sol.particular[j];
        if (g.valuation() < val)
            throw DegenerateParameterError(
                degenerate_msg(p, "shape element misses its valuation"));
        elements.push_back(std::move(g));
    }
    return SpaceBasis{kind, std::move(elements), p};
}

void validate_first_type_conditions(const SpaceBasis& v) {
    // any element vanishing at 1 must vanish to order at least k+1
    const ParameterSet& p = v.params;
    const long k = p.k().to_long();
    Mat row(1, Vec(v.elements.size()));
    for (size_t j = 0; j < v.elements.size(); ++j)
        row[0][j] = v.elements[j].eval(Rational(1));
    for (const auto& combo : kernel_basis(row)) {
        Poly q;
        for (size_t j = 0; j < combo.size(); ++j)
            q += v.elements[j] * combo[j];
        if (q.is_zero())
            continue;
        if (static_cast<long>(q.root_multiplicity(Rational(1))) < k + 1)
            throw DegenerateParameterError(degenerate_msg(
                p, "first-type vanishing condition fails for " + q.to_string()));
    }
}

SpaceBasis build_V(const ParameterSet& p, const std::vector<size_t>& ordering) {
    const ExponentData e = exponent_data(p);
    const DiffOperator op = product_operator(p, ordering);
    std::vector<Poly> images;
    images.reserve(p.r() + 1);
    for (size_t i = 0; i <= p.r(); ++i) {
        const Poly seed = Poly::monomial(Rational(1), static_cast<size_t>(
                                                          e.seed_exponents[i].to_long()));
        images.push_back(op.apply(seed).as_poly());
    }
    SpaceBasis v = echelonize_to_shape(SpaceKind::first_type, images, p);
    validate_first_type_conditions(v);
    return v;
}

SpaceBasis build_V(const ParameterSet& p) { return build_V(p, canonical_ordering(p)); }

SpaceBasis build_U_from_V(const SpaceBasis& v) {
    if (v.kind != SpaceKind::first_type)
        throw std::invalid_argument("build_U_from_V: expected a first-type basis");
    const ParameterSet& p = v.params;
    std::vector<Poly> gens;
    // divided Wronskians of the r-element subsets of the basis
    for (size_t skip = 0; skip < v.elements.size(); ++skip) {
        std::vector<Poly> subset;
        for (size_t j = 0; j < v.elements.size(); ++j)
            if (j != skip)
                subset.push_back(v.elements[j]);
        gens.push_back(divided_wronskian(SpaceKind::first_type, subset, p));
    }
    SpaceBasis u = echelonize_to_shape(SpaceKind::second_type, gens, p);
    max_vanishing_element(u); // second-type condition: throws if absent
    return u;
}

Poly max_vanishing_element(const SpaceBasis& u) {
    const ParameterSet& p = u.params;
    const long target = p.k().to_long() + static_cast<long>(p.r());
    const size_t dim = u.elements.size();

    // combos vanishing at 1 to order >= target
    Mat rows(static_cast<size_t>(target), Vec(dim, Rational(0)));
    std::vector<Poly> derivs = u.elements;
    for (long t = 0; t < target; ++t) {
        for (size_t j = 0; j < dim; ++j)
            rows[static_cast<size_t>(t)][j] = derivs[j].eval(Rational(1));
        for (auto& d : derivs)
            d = d.derivative();
    }
    for (const auto& combo : kernel_basis(rows)) {
        Poly q;
        for (size_t j = 0; j < dim; ++j)
            q += u.elements[j] * combo[j];
        if (!q.is_zero() &&
            static_cast<long>(q.root_multiplicity(Rational(1))) == target)
            return q.monic();
    }
    throw DegenerateParameterError(degenerate_msg(
        p, "no element vanishing at 1 to order exactly k+r"));
}

} // namespace jp
