#ifndef JP_JACOBI_HPP
#define JP_JACOBI_HPP

#include "jp/poly.hpp"
#include "jp/rational.hpp"

namespace jp {

// Monic Jacobi polynomial of degree n for the weight x^beta (1-x)^alpha
// on [0,1], built from the classical three-term recurrence alone. Kept
// independent of every other construction in this project so it can
// serve as an oracle for them. Throws std::domain_error when a
// recurrence coefficient is singular at these parameters.
Poly jacobi_oracle(long n, const Rational& alpha, const Rational& beta);

} // namespace jp

#endif
