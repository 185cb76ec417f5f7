#include "jp/ratfunc.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace jp {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Poly RatFunc::as_poly() const {
    if (!is_polynomial())
        throw std::domain_error("RatFunc: not a polynomial");
    return num_;
}

long RatFunc::inf_degree() const {
    if (is_zero())
        return std::numeric_limits<long>::min() / 2;
    return num_.degree() - den_.degree();
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero())
        throw std::domain_error("RatFunc: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

RatFunc RatFunc::derivative() const {
    // (n/d)' = (n'd - nd')/d^2; reduce() clears the common square factor
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

long RatFunc::order_at(const Rational& a) const {
    if (is_zero())
        throw std::domain_error("RatFunc: order of the zero function");
    return static_cast<long>(num_.root_multiplicity(a)) -
           static_cast<long>(den_.root_multiplicity(a));
}

Rational RatFunc::laurent_lead(const Rational& a) const {
    if (is_zero())
        throw std::domain_error("RatFunc: Laurent coefficient of zero");
    const Poly lin = Poly::linear_root(a);
    Poly n = num_, d = den_;
    while (n.eval(a).is_zero())
        n = n.div_exact(lin);
    while (d.eval(a).is_zero())
        d = d.div_exact(lin);
    return n.eval(a) / d.eval(a);
}

Rational RatFunc::inf_lead() const {
    if (is_zero())
        throw std::domain_error("RatFunc: leading coefficient of zero");
    return num_.leading() / den_.leading();
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial())
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    return os << f.to_string();
}

} // namespace jp
