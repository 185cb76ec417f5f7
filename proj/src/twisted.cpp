#include "jp/twisted.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace jp {

TwistedFunction::TwistedFunction(Poly body, Rational exp_zero, Rational exp_one)
    : body_(std::move(body)), exp_zero_(std::move(exp_zero)), exp_one_(std::move(exp_one)) {
    normalize();
}

void TwistedFunction::normalize() {
    if (body_.is_zero()) {
        exp_zero_ = Rational(0);
        exp_one_ = Rational(0);
        return;
    }
    const size_t v0 = body_.valuation();
    if (v0 > 0) {
        std::vector<Rational> c(body_.coeffs().begin() + static_cast<long>(v0),
                                body_.coeffs().end());
        body_ = Poly(std::move(c));
        exp_zero_ += Rational(static_cast<long>(v0));
    }
    const Poly lin = Poly::linear_root(Rational(1));
    while (body_.eval(Rational(1)).is_zero()) {
        body_ = body_.div_exact(lin);
        exp_one_ += Rational(1);
    }
}

TwistedFunction TwistedFunction::derivative() const {
    if (is_zero())
        return TwistedFunction();
    // d/dx [x^a (x-1)^b p] = x^{a-1}(x-1)^{b-1} [x(x-1)p' + (a(x-1) + bx)p]
    const Poly x(std::vector<Rational>{Rational(0), Rational(1)});
    const Poly xm1(std::vector<Rational>{Rational(-1), Rational(1)});
    Poly nb = x * xm1 * body_.derivative() + (xm1 * exp_zero_ + x * exp_one_) * body_;
    return TwistedFunction(std::move(nb), exp_zero_ - Rational(1), exp_one_ - Rational(1));
}

TwistedFunction operator*(const TwistedFunction& a, const TwistedFunction& b) {
    if (a.is_zero() || b.is_zero())
        return TwistedFunction();
    return TwistedFunction(a.body_ * b.body_, a.exp_zero_ + b.exp_zero_,
                           a.exp_one_ + b.exp_one_);
}

TwistedFunction TwistedFunction::operator*(const Rational& s) const {
    if (s.is_zero())
        return TwistedFunction();
    return TwistedFunction(body_ * s, exp_zero_, exp_one_);
}

TwistedFunction operator+(const TwistedFunction& a, const TwistedFunction& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const Rational d0 = a.exp_zero_ - b.exp_zero_;
    const Rational d1 = a.exp_one_ - b.exp_one_;
    if (!d0.is_integer() || !d1.is_integer())
        throw std::domain_error("TwistedFunction: sum with incompatible exponents");
    // rebase both on the smaller exponent pair
    const Rational e0 = std::min(a.exp_zero_, b.exp_zero_);
    const Rational e1 = std::min(a.exp_one_, b.exp_one_);
    const auto lift = [&](const TwistedFunction& f) {
        Poly p = f.body_;
        long s0 = (f.exp_zero_ - e0).to_long();
        long s1 = (f.exp_one_ - e1).to_long();
        if (s0 > 0)
            p = p * Poly::monomial(Rational(1), static_cast<size_t>(s0));
        const Poly xm1(std::vector<Rational>{Rational(-1), Rational(1)});
        for (long i = 0; i < s1; ++i)
            p = p * xm1;
        return p;
    };
    return TwistedFunction(lift(a) + lift(b), e0, e1);
}

TwistedFunction TwistedFunction::operator-() const {
    if (is_zero())
        return *this;
    return TwistedFunction(-body_, exp_zero_, exp_one_);
}

TwistedFunction TwistedFunction::inverse() const {
    if (is_zero())
        throw std::domain_error("TwistedFunction: inverse of zero");
    if (body_.degree() != 0)
        throw std::domain_error("TwistedFunction: inverse needs a constant body");
    return TwistedFunction(Poly(body_.leading().inverse()), -exp_zero_, -exp_one_);
}

bool TwistedFunction::is_polynomial() const {
    if (is_zero())
        return true;
    return exp_zero_.is_nonneg_integer() && exp_one_.is_nonneg_integer();
}

Poly TwistedFunction::expand() const {
    if (!is_polynomial())
        throw std::domain_error("TwistedFunction: not a polynomial");
    if (is_zero())
        return Poly();
    Poly p = body_ * Poly::monomial(Rational(1), static_cast<size_t>(exp_zero_.to_long()));
    const Poly xm1(std::vector<Rational>{Rational(-1), Rational(1)});
    const long s1 = exp_one_.to_long();
    for (long i = 0; i < s1; ++i)
        p = p * xm1;
    return p;
}

RatFunc TwistedFunction::log_derivative() const {
    if (is_zero())
        throw std::domain_error("TwistedFunction: log derivative of zero");
    const Poly x(std::vector<Rational>{Rational(0), Rational(1)});
    const Poly xm1(std::vector<Rational>{Rational(-1), Rational(1)});
    RatFunc out(body_.derivative(), body_);
    out += RatFunc(Poly(exp_zero_), x);
    out += RatFunc(Poly(exp_one_), xm1);
    return out;
}

std::string TwistedFunction::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    os << "(" << body_.to_string(var) << ")";
    if (!exp_zero_.is_zero())
        os << " * " << var << "^(" << exp_zero_ << ")";
    if (!exp_one_.is_zero())
        os << " * (" << var << "-1)^(" << exp_one_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TwistedFunction& f) {
    return os << f.to_string();
}

} // namespace jp
