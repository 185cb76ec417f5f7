#ifndef JP_TWISTED_HPP
#define JP_TWISTED_HPP

#include "jp/poly.hpp"
#include "jp/ratfunc.hpp"

#include <iosfwd>
#include <string>

namespace jp {

// body(x) * x^exp_zero * (x-1)^exp_one with rational exponents: the
// smallest class closed under d/dx that contains all the weights used
// here. Canonical: body(0) != 0 and body(1) != 0 (maximal integer powers
// of x and x-1 are absorbed into the exponents), so equality is
// memberwise. The zero function has body 0 and both exponents 0.
class TwistedFunction {
  public:
    TwistedFunction() : body_(), exp_zero_(0), exp_one_(0) {}
    TwistedFunction(Poly body, Rational exp_zero, Rational exp_one);
    static TwistedFunction from_poly(const Poly& p) {
        return TwistedFunction(p, Rational(0), Rational(0));
    }
    static TwistedFunction one() { return from_poly(Poly(1)); }

    const Poly& body() const { return body_; }
    const Rational& exp_zero() const { return exp_zero_; }
    const Rational& exp_one() const { return exp_one_; }
    bool is_zero() const { return body_.is_zero(); }

    TwistedFunction derivative() const;

    friend TwistedFunction operator*(const TwistedFunction& a, const TwistedFunction& b);
    TwistedFunction operator*(const Rational& s) const;

    // defined only when the exponents differ by integers
    friend TwistedFunction operator+(const TwistedFunction& a, const TwistedFunction& b);
    TwistedFunction operator-() const;
    friend TwistedFunction operator-(const TwistedFunction& a, const TwistedFunction& b) {
        return a + (-b);
    }

    // reciprocal; requires a constant body
    TwistedFunction inverse() const;

    friend bool operator==(const TwistedFunction& a, const TwistedFunction& b) {
        return a.body_ == b.body_ && a.exp_zero_ == b.exp_zero_ && a.exp_one_ == b.exp_one_;
    }
    friend bool operator!=(const TwistedFunction& a, const TwistedFunction& b) {
        return !(a == b);
    }

    bool is_polynomial() const;
    Poly expand() const;  // valid when is_polynomial()

    // logarithmic derivative f'/f, always a rational function
    RatFunc log_derivative() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    Poly body_;
    Rational exp_zero_, exp_one_;
};

std::ostream& operator<<(std::ostream& os, const TwistedFunction& f);

} // namespace jp

#endif
