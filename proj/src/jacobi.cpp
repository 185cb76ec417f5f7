#include "jp/jacobi.hpp"

#include <stdexcept>

namespace jp {

namespace {

Rational checked_div(const Rational& num, const Rational& den, long n) {
    if (den.is_zero())
        throw std::domain_error("jacobi_oracle: singular recurrence coefficient at n=" +
                                std::to_string(n));
    return num / den;
}

// recurrence for monic Jacobi on [-1,1] with weight (1-t)^alpha (1+t)^beta:
//   pi_{n+1} = (t - a_n) pi_n - b_n pi_{n-1}
// with the n = 0, 1 cases in their cancelled forms so removable
// singularities do not divide by zero
Rational a_coeff(long n, const Rational& al, const Rational& be) {
    if (n == 0)
        return checked_div(be - al, al + be + Rational(2), 0);
    const Rational s = al + be + Rational(2 * n);
    return checked_div(be * be - al * al, s * (s + Rational(2)), n);
}

Rational b_coeff(long n, const Rational& al, const Rational& be) {
    if (n == 1) {
        const Rational s = al + be + Rational(2);
        return checked_div(Rational(4) * (al + Rational(1)) * (be + Rational(1)),
                           s * s * (s + Rational(1)), 1);
    }
    const Rational s = al + be + Rational(2 * n);
    const Rational nn(n);
    return checked_div(Rational(4) * nn * (nn + al) * (nn + be) * (nn + al + be),
                       s * s * (s + Rational(1)) * (s - Rational(1)), n);
}

} // namespace

Poly jacobi_oracle(long n, const Rational& alpha, const Rational& beta) {
    if (n < 0)
        throw std::invalid_argument("jacobi_oracle: negative degree");
    // substitute t = 2x - 1 to move to [0,1]; monic in x needs the
    // rescaled recurrence p_{n+1} = (x - (1+a_n)/2) p_n - (b_n/4) p_{n-1}
    Poly prev;       // p_{-1} = 0
    Poly cur(1);     // p_0 = 1
    for (long i = 0; i < n; ++i) {
        const Rational shift = (Rational(1) + a_coeff(i, alpha, beta)) / Rational(2);
        Poly next = Poly::linear_root(shift) * cur;
        if (i > 0)
            next -= prev * (b_coeff(i, alpha, beta) / Rational(4));
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace jp
