#ifndef JP_RENDER_HPP
#define JP_RENDER_HPP

#include "jp/diffop.hpp"
#include "jp/poly.hpp"
#include "jp/ratfunc.hpp"

#include <string>

namespace jp {

// Display-math LaTeX with an explicit \frac for every rational.
std::string latex(const Rational& q);
std::string latex(const Poly& p, const std::string& var = "x");
std::string latex(const RatFunc& f, const std::string& var = "x");
std::string latex(const DiffOperator& op, const std::string& var = "x");

} // namespace jp

#endif
