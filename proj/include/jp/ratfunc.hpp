#ifndef JP_RATFUNC_HPP
#define JP_RATFUNC_HPP

#include "jp/poly.hpp"

#include <iosfwd>
#include <string>

namespace jp {

// Reduced quotient of two polynomials: gcd(num, den) = 1 and the
// denominator is monic. Equality is plain field equality.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly(1)) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly(1)) {}
    RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly(1)) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // valid only when is_polynomial()
    Poly as_poly() const;

    // degree at infinity: deg num - deg den (the zero function gets a
    // large negative sentinel)
    long inf_degree() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const;

    // order of vanishing at x = a (negative for a pole)
    long order_at(const Rational& a) const;
    // coefficient of (x-a)^{order_at(a)} in the Laurent expansion at a
    Rational laurent_lead(const Rational& a) const;
    // leading coefficient ratio (behaviour at infinity)
    Rational inf_lead() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void reduce();
    Poly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

} // namespace jp

#endif
