#include "jp/render.hpp"

#include <sstream>

namespace jp {

std::string latex(const Rational& q) {
    if (q.is_integer())
        return q.num().get_str();
    std::ostringstream os;
    if (q.sign() < 0)
        os << "-";
    os << "\\frac{" << q.num().get_str().substr(q.sign() < 0 ? 1 : 0) << "}{"
       << q.den().get_str() << "}";
    return os.str();
}

std::string latex(const Poly& p, const std::string& var) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational c = p.coeff(i);
        if (c.is_zero())
            continue;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << latex(a);
        } else {
            if (!a.is_one())
                os << latex(a) << " ";
            os << var;
            if (i > 1)
                os << "^{" << i << "}";
        }
    }
    return os.str();
}

std::string latex(const RatFunc& f, const std::string& var) {
    if (f.is_polynomial())
        return latex(f.num(), var);
    return "\\frac{" + latex(f.num(), var) + "}{" + latex(f.den(), var) + "}";
}

std::string latex(const DiffOperator& op, const std::string& var) {
    if (op.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = op.coeffs().size(); i-- > 0;) {
        const RatFunc& c = op.coeff(i);
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "\\left(" << latex(c, var) << "\\right)";
        if (i == 1)
            os << " \\frac{d}{d" << var << "}";
        else if (i > 1)
            os << " \\frac{d^{" << i << "}}{d" << var << "^{" << i << "}}";
    }
    return os.str();
}

} // namespace jp
