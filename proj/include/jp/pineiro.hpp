#ifndef JP_PINEIRO_HPP
#define JP_PINEIRO_HPP

#include "jp/diffop.hpp"
#include "jp/params.hpp"
#include "jp/poly.hpp"
#include "jp/twisted.hpp"

#include <stdexcept>
#include <vector>

namespace jp {

// Raised when a construction is undefined at the given parameters
// (degree drop, singular linear system, pole in a moment ratio, ...).
// Never swallowed: callers either surface it or record a skip.
class DegenerateParameterError : public std::runtime_error {
  public:
    explicit DegenerateParameterError(const std::string& what)
        : std::runtime_error(what) {}
};

enum class SpaceKind { first_type, second_type };

// Ordered polynomial basis of one of the two distinguished
// (r+1)-dimensional spaces, in canonical shape: element i has degree
// valuation_exponent(i) + cofactor_degree(i) exactly and is divisible
// by x^valuation_exponent(i).
struct SpaceBasis {
    SpaceKind kind;
    std::vector<Poly> elements;
    ParameterSet params;
};

// x(x-1) d/dx - (k + m_1 + ... + m_i - l_i + l_{i+1} + i)(x-1) - k - 1
DiffOperator step_operator(const ParameterSet& p, size_t i);

// step indices with multiplicities: 0 appears k - l_1 times, i appears
// l_i - l_{i+1} times; steps for i in increasing order, zeros last
std::vector<size_t> canonical_ordering(const ParameterSet& p);
// zeros first, then decreasing i; distinct from the canonical ordering
// whenever the multiset allows it
std::vector<size_t> reversed_ordering(const ParameterSet& p);

// the order-k composition of step operators along the given ordering,
// rebuilding the intermediate parameter sets step by step
DiffOperator product_operator(const ParameterSet& p, const std::vector<size_t>& ordering);

// the three routes to the same monic polynomial of degree l_1
Poly v0_via_recursion(const ParameterSet& p);
Poly p_via_orthogonality(const ParameterSet& p);
Poly rodrigues(const ParameterSet& p);

// monic operator of order r+1 whose coefficients are
// (A_i x - B_i) / (x^{r+1-i} (x-1)) with the given falling-factorial
// coefficient lists (exactly r+2 entries each)
DiffOperator dual_operator_from(const std::vector<Rational>& infinity_falling,
                                const std::vector<Rational>& zero_falling);
DiffOperator build_dual_operator(const ParameterSet& p);

// order r+1, leading coefficient one: twisted conjugation of the formal
// adjoint of the dual operator
DiffOperator annihilator_from(const std::vector<Rational>& infinity_falling,
                              const std::vector<Rational>& zero_falling,
                              const ParameterSet& p);
DiffOperator build_annihilator(const ParameterSet& p);

// the gauge function (x-1)^k x^{m_1+...+m_r}
TwistedFunction tau(const ParameterSet& p);
// (x-1)^k x^{1 m_1 + 2 m_2 + ... + r m_r}
TwistedFunction big_T(const ParameterSet& p);
// (T_1, ..., T_r) with T_1 = (x-1)^k x^{m_1} and T_i = x^{m_i}
std::vector<TwistedFunction> weights_T(const ParameterSet& p);

// Wronskian of exactly r polynomials divided by the weight product of
// the given side; the division must be exact
Poly divided_wronskian(SpaceKind kind, const std::vector<Poly>& fs, const ParameterSet& p);

// expected shape data for either basis
struct ShapeSpec {
    std::vector<long> valuation_exponents;
    std::vector<long> cofactor_degrees;
};
ShapeSpec shape_spec(SpaceKind kind, const ParameterSet& p);

// canonical shape basis of span(gens); throws DegenerateParameterError
// when the span does not fit the shape
SpaceBasis echelonize_to_shape(SpaceKind kind, const std::vector<Poly>& gens,
                               const ParameterSet& p);

// both defining conditions of a first-type space beyond the shape:
// throws when an element vanishing at 1 has multiplicity below k+1
void validate_first_type_conditions(const SpaceBasis& v);

SpaceBasis build_V(const ParameterSet& p, const std::vector<size_t>& ordering);
SpaceBasis build_V(const ParameterSet& p);
SpaceBasis build_U_from_V(const SpaceBasis& v);

// the element of U vanishing at x = 1 to order exactly k + r
Poly max_vanishing_element(const SpaceBasis& u);

} // namespace jp

#endif
