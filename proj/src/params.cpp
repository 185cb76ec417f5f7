#include "jp/params.hpp"

#include <sstream>
#include <stdexcept>

namespace jp {

ParameterSet::ParameterSet(std::vector<Rational> m, std::vector<long> l, Rational k)
    : m_(std::move(m)), l_(std::move(l)), k_(std::move(k)) {
    if (m_.empty())
        throw std::invalid_argument("ParameterSet: r must be positive");
    if (l_.size() != m_.size())
        throw std::invalid_argument("ParameterSet: m and l must have the same length");
    for (size_t i = 0; i < l_.size(); ++i) {
        if (l_[i] < 0)
            throw std::invalid_argument("ParameterSet: l entries must be nonnegative");
        if (i + 1 < l_.size() && l_[i] < l_[i + 1])
            throw std::invalid_argument("ParameterSet: l must be weakly decreasing");
    }
    consistent_ = k_.is_nonneg_integer() && k_ >= Rational(l_[0]);
    for (size_t s = 1; s <= r() && consistent_; ++s) {
        if (!m_[s - 1].is_nonneg_integer() ||
            l_at(s) - l_at(s + 1) > m_[s - 1])
            consistent_ = false;
    }
}

Rational ParameterSet::l_at(size_t i) const {
    if (i == 0)
        return k_;
    if (i == r() + 1)
        return Rational(0);
    return Rational(l_.at(i - 1));
}

Rational ParameterSet::m_prefix(size_t i) const {
    Rational s(0);
    for (size_t j = 1; j <= i; ++j)
        s += m_at(j);
    return s;
}

Rational ParameterSet::m_suffix(size_t i) const {
    Rational s(0);
    for (size_t j = i; j <= r(); ++j)
        s += m_at(j);
    return s;
}

std::string ParameterSet::to_string() const {
    std::ostringstream os;
    os << "r=" << r() << " m=(";
    for (size_t i = 0; i < m_.size(); ++i)
        os << (i ? "," : "") << m_[i];
    os << ") l=(";
    for (size_t i = 0; i < l_.size(); ++i)
        os << (i ? "," : "") << l_[i];
    os << ") k=" << k_;
    return os.str();
}

ExponentData exponent_data(const ParameterSet& p) {
    const size_t r = p.r();
    ExponentData out;
    out.infinity_exponents.reserve(r + 1);
    out.zero_exponents.reserve(r + 1);
    out.seed_exponents.reserve(r + 1);
    for (size_t i = 0; i <= r; ++i) {
        const Rational tail = p.m_suffix(r + 1 - i); // sum of the last i weights
        const Rational ii(static_cast<long>(i));
        out.infinity_exponents.push_back(tail - p.l_at(r - i + 1) + p.l_at(r - i) + ii);
        out.zero_exponents.push_back(tail + ii);
        out.seed_exponents.push_back(p.m_prefix(i) + ii);
    }
    const auto root_poly = [](const std::vector<Rational>& roots) {
        Poly f(1);
        for (const auto& root : roots)
            f = f * Poly::linear_root(root);
        return f;
    };
    out.infinity_falling = falling_factorial_coeffs(root_poly(out.infinity_exponents));
    out.zero_falling = falling_factorial_coeffs(root_poly(out.zero_exponents));
    return out;
}

std::vector<Rational> falling_factorial_coeffs(const Poly& f) {
    const long n = std::max<long>(f.degree(), 0);
    // forward difference table on values f(0), f(1), ..., f(n)
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        row.push_back(f.eval(Rational(i)));
    std::vector<Rational> out;
    out.reserve(row.size());
    Rational factorial(1);
    for (size_t i = 0; i < static_cast<size_t>(n) + 1; ++i) {
        if (i > 0)
            factorial *= Rational(static_cast<long>(i));
        out.push_back(row[0] / factorial);
        for (size_t j = 0; j + 1 < row.size() - i; ++j)
            row[j] = row[j + 1] - row[j];
    }
    return out;
}

Poly from_falling_coeffs(const std::vector<Rational>& coeffs) {
    Poly acc;
    Poly ff(1);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0)
            ff = ff * Poly::linear_root(Rational(static_cast<long>(i) - 1));
        acc += ff * coeffs[i];
    }
    return acc;
}

} // namespace jp
