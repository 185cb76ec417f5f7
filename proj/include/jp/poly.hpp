#ifndef JP_POLY_HPP
#define JP_POLY_HPP

#include "jp/rational.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jp {

// Dense univariate polynomial over Rational, coefficients stored
// lowest degree first. The zero polynomial has an empty coefficient
// list; otherwise the leading coefficient is nonzero.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    // c * x^e
    static Poly monomial(const Rational& c, size_t e);
    // x - root
    static Poly linear_root(const Rational& root);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const;
    // multiplicity of the root x = 0; valuation of the zero polynomial is 0
    size_t valuation() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend Poly operator*(const Poly& a, const Rational& s);
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // quotient and remainder with deg(rem) < deg(divisor); throws on zero divisor
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    // exact division; throws if the remainder is nonzero
    Poly div_exact(const Poly& divisor) const;

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    // p(x + shift), exact Taylor shift via Horner
    Poly shifted(const Rational& shift) const;
    // multiplicity of the root x = a
    size_t root_multiplicity(const Rational& a) const;

    Poly monic() const;
    // scales so the lowest nonzero coefficient is 1
    Poly pivot_normalized() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// monic gcd; gcd(0, 0) = 0
Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);

// all rational roots with multiplicities, plus the remaining factor
// (monic, no rational roots) and the constant scale such that
// p = scale * residual * prod (x - root)^mult
struct RationalRoots {
    std::map<Rational, size_t> roots;
    Poly residual;
    Rational scale;
};
RationalRoots rational_roots(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace jp

#endif
