#ifndef JP_WRONSKIAN_HPP
#define JP_WRONSKIAN_HPP

#include "jp/poly.hpp"
#include "jp/twisted.hpp"

#include <vector>

namespace jp {

// Wronskian: determinant of the matrix whose row t (t = 0..s-1) holds
// the t-th derivatives of the inputs.
Poly wronskian(const std::vector<Poly>& fs);
TwistedFunction wronskian(const std::vector<TwistedFunction>& fs);

} // namespace jp

#endif
