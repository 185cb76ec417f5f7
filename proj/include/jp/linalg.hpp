#ifndef JP_LINALG_HPP
#define JP_LINALG_HPP

#include "jp/poly.hpp"
#include "jp/rational.hpp"

#include <vector>

namespace jp {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Outcome of exact Gaussian elimination on A x = rhs. Inconsistency is
// reported, never thrown; the solution set is the affine subspace
// particular + span(kernel) when consistent.
struct LinearSolution {
    size_t rank = 0;
    bool consistent = true;
    Vec particular;   // empty when inconsistent
    Mat kernel;       // canonical basis, first nonzero entry of each vector is 1
};

LinearSolution solve_linear(const Mat& a, const Vec& rhs);

// kernel of A only (same canonical form as LinearSolution::kernel)
Mat kernel_basis(const Mat& a);

// Canonical form of the span of a set of polynomials: reduced echelon by
// valuation at x = 0 (strictly increasing pivot degrees, each pivot
// coefficient 1, pivots eliminated from all other rows). Two spans are
// equal iff their canonical forms are identical.
std::vector<Poly> canonical_span(const std::vector<Poly>& gens);

bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b);

} // namespace jp

#endif
