#ifndef JP_PARAMS_HPP
#define JP_PARAMS_HPP

#include "jp/poly.hpp"
#include "jp/rational.hpp"

#include <string>
#include <vector>

namespace jp {

// The tuple (m, l, k): r rational weights m_1..m_r, a weakly decreasing
// list of nonnegative integers l_1..l_r, and a rational k, with the
// boundary conventions l_0 = k and l_{r+1} = 0.
class ParameterSet {
  public:
    ParameterSet(std::vector<Rational> m, std::vector<long> l, Rational k);

    size_t r() const { return m_.size(); }
    const std::vector<Rational>& m() const { return m_; }
    const std::vector<long>& l() const { return l_; }
    const Rational& k() const { return k_; }

    // m_i for i = 1..r
    const Rational& m_at(size_t i) const { return m_.at(i - 1); }
    // l_i for i = 0..r+1 (returns k at i = 0, 0 at i = r+1)
    Rational l_at(size_t i) const;

    // sum of m_s for s = 1..i
    Rational m_prefix(size_t i) const;
    // sum of m_s for s = i..r
    Rational m_suffix(size_t i) const;

    // all of m, k nonnegative integers with k >= l_1 and
    // l_s - l_{s+1} <= m_s for every s
    bool consistent() const { return consistent_; }

    std::string to_string() const;

  private:
    std::vector<Rational> m_;
    std::vector<long> l_;
    Rational k_;
    bool consistent_;
};

// The derived exponent numbers of a parameter set:
//   infinity_exponents[i]  exponents at infinity of the dual operator
//   zero_exponents[i]      exponents at zero of the dual operator
//   infinity_falling, zero_falling   falling-factorial coefficients of
//       the monic polynomials with those root lists (one entry longer)
//   seed_exponents[i]      valuations i + m_1 + ... + m_i of the seed space
struct ExponentData {
    std::vector<Rational> infinity_exponents;
    std::vector<Rational> zero_exponents;
    std::vector<Rational> infinity_falling;
    std::vector<Rational> zero_falling;
    std::vector<Rational> seed_exponents;
};

ExponentData exponent_data(const ParameterSet& p);

// Coefficients F_0..F_n with f = F_0 + sum_{i>=1} F_i a(a-1)...(a-i+1),
// computed by forward differences: F_i = Delta^i f(0) / i!.
std::vector<Rational> falling_factorial_coeffs(const Poly& f);

// sum F_i a(a-1)...(a-i+1) as a polynomial (inverse of the above)
Poly from_falling_coeffs(const std::vector<Rational>& coeffs);

} // namespace jp

#endif
