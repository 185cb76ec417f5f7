#include "jp/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace jp {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::monomial(const Rational& c, size_t e) {
    if (c.is_zero())
        return Poly();
    std::vector<Rational> v(e + 1, Rational(0));
    v[e] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& root) {
    return Poly(std::vector<Rational>{-root, Rational(1)});
}

Rational Poly::leading() const {
    return c_.empty() ? Rational(0) : c_.back();
}

size_t Poly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return i;
    return 0;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Rational& s) {
    if (s.is_zero())
        return Poly();
    Poly r(a);
    for (auto& c : r.c_)
        c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("Poly: division by the zero polynomial");
    Poly rem(*this);
    const long dd = divisor.degree();
    if (degree() < dd)
        return {Poly(), rem};
    std::vector<Rational> q(static_cast<size_t>(degree() - dd) + 1, Rational(0));
    const Rational lead_inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const size_t shift = static_cast<size_t>(rem.degree() - dd);
        const Rational f = rem.leading() * lead_inv;
        q[shift] = f;
        // rem -= f * x^shift * divisor
        for (size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[i + shift] -= f * divisor.c_[i];
        rem.trim();
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::div_exact(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw std::domain_error("Poly: division is not exact");
    return q;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

Poly Poly::shifted(const Rational& shift) const {
    // Horner: p(x + s) accumulated as acc = acc*(x + s) + c_i
    Poly acc;
    const Poly x_plus_s(std::vector<Rational>{shift, Rational(1)});
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x_plus_s + Poly(c_[i]);
    return acc;
}

size_t Poly::root_multiplicity(const Rational& a) const {
    if (is_zero())
        return 0;
    if (a.is_zero())
        return valuation();
    size_t mult = 0;
    Poly p(*this);
    const Poly lin = Poly::linear_root(a);
    while (p.eval(a).is_zero()) {
        p = p.div_exact(lin);
        ++mult;
    }
    return mult;
}

Poly Poly::monic() const {
    if (is_zero())
        return *this;
    return *this * leading().inverse();
}

Poly Poly::pivot_normalized() const {
    if (is_zero())
        return *this;
    return *this * c_[valuation()].inverse();
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero())
            continue;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a.is_one();
        if (i == 0) {
            os << a.to_string();
        } else {
            if (!unit)
                os << a.to_string() << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    return (a * b).div_exact(poly_gcd(a, b)).monic();
}

namespace {

// positive divisors via trial division; plenty for the coefficient
// sizes this project produces
std::vector<mpz_class> divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> small, big;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                big.push_back(n / d);
        }
    }
    small.insert(small.end(), big.rbegin(), big.rend());
    return small;
}

} // namespace

RationalRoots rational_roots(const Poly& p) {
    RationalRoots out;
    out.scale = Rational(1);
    out.residual = Poly(1);
    if (p.is_zero())
        throw std::domain_error("rational_roots: zero polynomial");

    Poly work = p;
    const size_t val = work.valuation();
    if (val > 0) {
        out.roots[Rational(0)] = val;
        std::vector<Rational> shifted(work.coeffs().begin() + static_cast<long>(val),
                                      work.coeffs().end());
        work = Poly(std::move(shifted));
    }
    out.scale = work.leading();
    work = work.monic();
    if (work.degree() == 0) {
        return out;
    }

    // clear denominators to a primitive integer polynomial
    mpz_class den_lcm = 1;
    for (const auto& c : work.coeffs())
        den_lcm = lcm(den_lcm, c.den());
    std::vector<mpz_class> ic;
    ic.reserve(work.coeffs().size());
    for (const auto& c : work.coeffs())
        ic.push_back(c.num() * (den_lcm / c.den()));

    const auto ps = divisors(ic.front());
    const auto qs = divisors(ic.back());
    std::vector<Rational> candidates;
    for (const auto& pn : ps)
        for (const auto& qd : qs) {
            candidates.push_back(Rational(pn, qd));
            candidates.push_back(Rational(-pn, qd));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& cand : candidates) {
        while (work.degree() > 0 && work.eval(cand).is_zero()) {
            work = work.div_exact(Poly::linear_root(cand));
            ++out.roots[cand];
        }
        if (work.degree() == 0)
            break;
    }
    out.residual = work.monic();
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
}

} // namespace jp
