#include "jp/rational.hpp"

#include <cctype>
#include <ostream>

namespace jp {

Rational Rational::from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("Rational: empty string");
    // Validate by hand: mpq_set_str is permissive about whitespace and bases.
    const auto is_int = [](const std::string& t) {
        if (t.empty())
            return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s))
            throw std::invalid_argument("Rational: bad literal '" + s + "'");
        return Rational(mpz_class(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("Rational: bad literal '" + s + "'");
    mpz_class d(den);
    if (d == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    return Rational(mpz_class(num), d);
}

long Rational::to_long() const {
    if (!is_integer())
        throw std::domain_error("Rational: " + to_string() + " is not an integer");
    mpz_class n = num();
    if (!n.fits_slong_p())
        throw std::domain_error("Rational: integer out of long range");
    return n.get_si();
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    if (is_zero()) {
        if (e < 0)
            throw std::domain_error("Rational: 0 to a negative power");
        return Rational(0);
    }
    const unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

std::string Rational::to_string() const {
    if (is_integer())
        return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
}

} // namespace jp
