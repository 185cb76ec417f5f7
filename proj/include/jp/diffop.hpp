#ifndef JP_DIFFOP_HPP
#define JP_DIFFOP_HPP

#include "jp/linalg.hpp"
#include "jp/poly.hpp"
#include "jp/ratfunc.hpp"
#include "jp/twisted.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace jp {

// Result of applying an operator to a twisted function: value / denom,
// with denom monic, coprime to the body and nonvanishing at 0 and 1.
struct ScaledTwisted {
    TwistedFunction value;
    Poly denom = Poly(1);

    bool is_zero() const { return value.is_zero(); }
    friend bool operator==(const ScaledTwisted& a, const ScaledTwisted& b) {
        return a.value == b.value && a.denom == b.denom;
    }
};

enum class SingularPoint { zero, one, infinity };

// Indicial (characteristic-exponent) data of an operator at one of the
// three marked points. Exponents at infinity follow the x^alpha
// convention, so a polynomial solution of degree d contributes the
// exponent d.
struct IndicialData {
    Poly indicial;                        // polynomial in the exponent variable
    std::map<Rational, size_t> roots;     // rational roots with multiplicity
    Poly residual;                        // monic factor with no rational roots
};

// Linear differential operator sum c_i(x) d^i/dx^i in canonical form:
// derivatives on the right, coefficient list indexed by derivative
// order, leading coefficient nonzero. The zero operator has an empty
// list and order -1.
class DiffOperator {
  public:
    DiffOperator() = default;
    explicit DiffOperator(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DiffOperator identity() { return DiffOperator({RatFunc(1)}); }
    static DiffOperator derivative_op() { return DiffOperator({RatFunc(0), RatFunc(1)}); }
    // multiplication by a rational function
    static DiffOperator mul_op(const RatFunc& f) { return DiffOperator({f}); }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    RatFunc coeff(size_t i) const { return i < c_.size() ? c_[i] : RatFunc(0); }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    DiffOperator operator*(const Rational& s) const;

    // exact sum c_i f^(i)
    RatFunc apply(const Poly& f) const;
    ScaledTwisted apply(const TwistedFunction& f) const;

    // this after o (composition as maps: (this o o) f = this(o(f)))
    DiffOperator compose(const DiffOperator& o) const;

    // sum (-1)^i d^i . c_i, re-expanded to canonical form
    DiffOperator formal_adjoint() const;

    // g . L . g^{-1}; coefficients stay rational because g'/g is rational
    DiffOperator gauge_conjugate(const TwistedFunction& g) const;

    // common denominator Q and polynomial coefficients of Q*L
    struct Cleared {
        Poly multiplier;
        std::vector<Poly> coeffs;
    };
    Cleared cleared() const;
    // (Q*L) f: same kernel as L, avoids rational-function arithmetic
    Poly apply_cleared(const Poly& f) const;

    IndicialData indicial(SingularPoint at) const;

    // basis of { p : deg p <= degree_bound, L p = 0 }, echelonized by
    // valuation at x = 0
    std::vector<Poly> polynomial_kernel(long degree_bound) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<RatFunc> c_;
};

std::ostream& operator<<(std::ostream& os, const DiffOperator& op);

} // namespace jp

#endif
