#include "jp/diffop.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace jp {

namespace {

std::vector<std::vector<Rational>> binomial_table(size_t n) {
    std::vector<std::vector<Rational>> b(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        b[i].assign(i + 1, Rational(1));
        for (size_t j = 1; j < i; ++j)
            b[i][j] = b[i - 1][j - 1] + b[i - 1][j];
    }
    return b;
}

// alpha (alpha-1) ... (alpha-i+1)
Poly falling_factorial(size_t i) {
    Poly p(1);
    for (size_t t = 0; t < i; ++t)
        p = p * Poly::linear_root(Rational(static_cast<long>(t)));
    return p;
}

} // namespace

void DiffOperator::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    std::vector<RatFunc> r(std::max(c_.size(), o.c_.size()), RatFunc(0));
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        r[i] += o.c_[i];
    return DiffOperator(std::move(r));
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
    return *this + (o * Rational(-1));
}

DiffOperator DiffOperator::operator*(const Rational& s) const {
    if (s.is_zero())
        return DiffOperator();
    std::vector<RatFunc> r = c_;
    for (auto& f : r)
        f *= RatFunc(s);
    return DiffOperator(std::move(r));
}

RatFunc DiffOperator::apply(const Poly& f) const {
    RatFunc acc(0);
    Poly d = f;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero() && !d.is_zero())
            acc += c_[i] * RatFunc(d);
        d = d.derivative();
    }
    return acc;
}

ScaledTwisted DiffOperator::apply(const TwistedFunction& f) const {
    ScaledTwisted out;
    if (is_zero() || f.is_zero())
        return out;
    const size_t n = c_.size() - 1;
    const Poly x(std::vector<Rational>{Rational(0), Rational(1)});
    const Poly xm1(std::vector<Rational>{Rational(-1), Rational(1)});
    const Poly xxm1 = x * xm1;

    // unnormalized derivative bodies: f^(t) = body_t x^(a-t) (x-1)^(b-t)
    std::vector<Poly> bodies(n + 1);
    bodies[0] = f.body();
    for (size_t t = 0; t < n; ++t) {
        const Rational a = f.exp_zero() - Rational(static_cast<long>(t));
        const Rational b = f.exp_one() - Rational(static_cast<long>(t));
        bodies[t + 1] = xxm1 * bodies[t].derivative() + (xm1 * a + x * b) * bodies[t];
    }

    // sum c_i body_i (x(x-1))^(n-i), all over the common twist
    // x^(a-n) (x-1)^(b-n)
    RatFunc s(0);
    Poly pw(1);
    for (size_t i = n + 1; i-- > 0;) {
        if (!c_[i].is_zero())
            s += c_[i] * RatFunc(bodies[i] * pw);
        pw = pw * xxm1;
    }
    if (s.is_zero())
        return out;

    TwistedFunction num(s.num(), f.exp_zero() - Rational(static_cast<long>(n)),
                        f.exp_one() - Rational(static_cast<long>(n)));
    // push powers of x and x-1 in the denominator into the exponents
    Poly den = s.den();
    const size_t v0 = den.valuation();
    Rational e0 = num.exp_zero(), e1 = num.exp_one();
    if (v0 > 0) {
        den = Poly(std::vector<Rational>(den.coeffs().begin() + static_cast<long>(v0),
                                         den.coeffs().end()));
        e0 -= Rational(static_cast<long>(v0));
    }
    while (den.eval(Rational(1)).is_zero()) {
        den = den.div_exact(xm1);
        e1 -= Rational(1);
    }
    out.value = TwistedFunction(num.body(), e0, e1);
    out.denom = den; // still monic: only monic factors were removed
    // keep body and denominator coprime
    const Poly g = poly_gcd(out.value.body(), out.denom);
    if (g.degree() > 0) {
        out.value = TwistedFunction(out.value.body().div_exact(g), out.value.exp_zero(),
                                    out.value.exp_one());
        out.denom = out.denom.div_exact(g);
    }
    return out;
}

DiffOperator DiffOperator::compose(const DiffOperator& o) const {
    if (is_zero() || o.is_zero())
        return DiffOperator();
    const size_t n1 = c_.size() - 1, n2 = o.c_.size() - 1;
    const auto binom = binomial_table(n1);
    std::vector<RatFunc> r(n1 + n2 + 1, RatFunc(0));
    // derivatives of the right factor's coefficients up to order n1
    std::vector<std::vector<RatFunc>> derivs(n2 + 1);
    for (size_t j = 0; j <= n2; ++j) {
        derivs[j].resize(n1 + 1);
        derivs[j][0] = o.c_[j];
        for (size_t t = 1; t <= n1; ++t)
            derivs[j][t] = derivs[j][t - 1].derivative();
    }
    for (size_t i = 0; i <= n1; ++i) {
        if (c_[i].is_zero())
            continue;
        for (size_t j = 0; j <= n2; ++j) {
            if (o.c_[j].is_zero())
                continue;
            // d^i . c  =  sum_u binom(i,u) c^(i-u) d^u
            for (size_t u = 0; u <= i; ++u) {
                const RatFunc& dv = derivs[j][i - u];
                if (dv.is_zero())
                    continue;
                r[u + j] += c_[i] * RatFunc(Poly(binom[i][u])) * dv;
            }
        }
    }
    return DiffOperator(std::move(r));
}

DiffOperator DiffOperator::formal_adjoint() const {
    if (is_zero())
        return DiffOperator();
    const size_t n = c_.size() - 1;
    const auto binom = binomial_table(n);
    std::vector<RatFunc> r(n + 1, RatFunc(0));
    for (size_t i = 0; i <= n; ++i) {
        if (c_[i].is_zero())
            continue;
        // (-1)^i d^i . c_i = sum_u (-1)^i binom(i,u) c_i^(i-u) d^u
        std::vector<RatFunc> derivs(i + 1);
        derivs[i] = c_[i];
        for (size_t t = i; t-- > 0;)
            derivs[t] = derivs[t + 1].derivative();
        // derivs[u] now holds c_i^(i-u)
        for (size_t u = 0; u <= i; ++u) {
            RatFunc term = RatFunc(Poly(binom[i][u])) * derivs[u];
            if (i % 2 == 1)
                term = -term;
            r[u] += term;
        }
    }
    return DiffOperator(std::move(r));
}

DiffOperator DiffOperator::gauge_conjugate(const TwistedFunction& g) const {
    if (g.is_zero())
        throw std::domain_error("gauge_conjugate: zero gauge function");
    if (is_zero())
        return DiffOperator();
    // g d g^{-1} = d - g'/g, and conjugation is an algebra map, so
    // substitute d -> d - w and keep the coefficients on the left.
    const RatFunc w = g.log_derivative();
    const DiffOperator shifted({-w, RatFunc(1)});
    DiffOperator acc = DiffOperator::mul_op(c_.back());
    for (size_t i = c_.size() - 1; i-- > 0;)
        acc = acc.compose(shifted) + DiffOperator::mul_op(c_[i]);
    return acc;
}

DiffOperator::Cleared DiffOperator::cleared() const {
    Cleared out;
    out.multiplier = Poly(1);
    for (const auto& f : c_)
        if (!f.is_zero())
            out.multiplier = poly_lcm(out.multiplier, f.den());
    out.coeffs.reserve(c_.size());
    for (const auto& f : c_)
        out.coeffs.push_back(f.num() * out.multiplier.div_exact(f.den()));
    return out;
}

Poly DiffOperator::apply_cleared(const Poly& f) const {
    const Cleared cl = cleared();
    Poly acc;
    Poly d = f;
    for (size_t i = 0; i < cl.coeffs.size(); ++i) {
        if (!cl.coeffs[i].is_zero() && !d.is_zero())
            acc += cl.coeffs[i] * d;
        d = d.derivative();
    }
    return acc;
}

IndicialData DiffOperator::indicial(SingularPoint at) const {
    if (is_zero())
        throw std::domain_error("indicial: zero operator");
    const size_t n = c_.size() - 1;
    const long minus_inf = std::numeric_limits<long>::min() / 2;

    // weight_i = ord_i - i at a finite point, deg_i - i at infinity;
    // the indicial polynomial collects the extremal-weight terms
    std::vector<long> weight(n + 1, minus_inf);
    for (size_t i = 0; i <= n; ++i) {
        if (c_[i].is_zero())
            continue;
        switch (at) {
        case SingularPoint::zero:
            weight[i] = -(c_[i].order_at(Rational(0)) - static_cast<long>(i));
            break;
        case SingularPoint::one:
            weight[i] = -(c_[i].order_at(Rational(1)) - static_cast<long>(i));
            break;
        case SingularPoint::infinity:
            weight[i] = c_[i].inf_degree() - static_cast<long>(i);
            break;
        }
    }
    long best = minus_inf;
    for (size_t i = 0; i <= n; ++i)
        best = std::max(best, weight[i]);
    if (weight[n] != best)
        throw std::domain_error("indicial: irregular singular point");

    IndicialData out;
    for (size_t i = 0; i <= n; ++i) {
        if (weight[i] != best)
            continue;
        Rational lead;
        switch (at) {
        case SingularPoint::zero:
            lead = c_[i].laurent_lead(Rational(0));
            break;
        case SingularPoint::one:
            lead = c_[i].laurent_lead(Rational(1));
            break;
        case SingularPoint::infinity:
            lead = c_[i].inf_lead();
            break;
        }
        out.indicial += falling_factorial(i) * lead;
    }
    RationalRoots rr = rational_roots(out.indicial);
    out.roots = std::move(rr.roots);
    out.residual = std::move(rr.residual);
    return out;
}

std::vector<Poly> DiffOperator::polynomial_kernel(long degree_bound) const {
    if (degree_bound < 0)
        throw std::invalid_argument("polynomial_kernel: negative degree bound");
    if (is_zero())
        throw std::domain_error("polynomial_kernel: zero operator");
    const Cleared cl = cleared();
    const size_t cols = static_cast<size_t>(degree_bound) + 1;

    // image of each monomial under the cleared operator
    std::vector<Poly> images(cols);
    size_t width = 1;
    for (size_t j = 0; j < cols; ++j) {
        Poly mono = Poly::monomial(Rational(1), j);
        Poly img;
        for (size_t i = 0; i < cl.coeffs.size(); ++i) {
            if (!cl.coeffs[i].is_zero() && !mono.is_zero())
                img += cl.coeffs[i] * mono;
            mono = mono.derivative();
        }
        width = std::max(width, static_cast<size_t>(img.degree() + 1));
        images[j] = std::move(img);
    }
    Mat m(width, Vec(cols, Rational(0)));
    for (size_t j = 0; j < cols; ++j)
        for (size_t t = 0; t < width; ++t)
            m[t][j] = images[j].coeff(t);

    std::vector<Poly> gens;
    for (const auto& v : kernel_basis(m))
        gens.push_back(Poly(v));
    return canonical_span(gens);
}

std::string DiffOperator::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "[" << c_[i].to_string(var) << "]";
        if (i == 1)
            os << " D";
        else if (i > 1)
            os << " D^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffOperator& op) {
    return os << op.to_string();
}

} // namespace jp
