#include "hartogs/rational_function.hpp"

#include <stdexcept>

namespace hartogs {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    const Rational scale = Rational(1) / den_.leading();
    num_ *= scale;
    den_ *= scale;
}

Rational RationalFunction::constant_value() const {
    if (!is_constant())
        throw std::logic_error("RationalFunction: not a constant");
    return num_.coeff(0);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero())
        throw std::domain_error("RationalFunction: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::pow(unsigned e) const {
    RationalFunction acc(Rational(1));
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1u)
            acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

RationalFunction RationalFunction::derivative() const {
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    Polynomial d = den_ * den_;
    return RationalFunction(std::move(n), std::move(d));
}

Rational RationalFunction::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d.is_zero())
        throw std::domain_error("RationalFunction: pole at evaluation point");
    return num_(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_ == Polynomial(Rational(1)))
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction ratfun_normalize(Polynomial num, Polynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

} // namespace hartogs
