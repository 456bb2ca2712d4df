#include "hartogs/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hartogs {

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero())
        coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(std::size_t deg, Rational coeff) {
    Polynomial p;
    if (!coeff.is_zero()) {
        p.coeffs_.assign(deg + 1, Rational(0));
        p.coeffs_[deg] = std::move(coeff);
    }
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational Polynomial::leading() const {
    if (is_zero())
        throw std::logic_error("Polynomial: leading coefficient of zero polynomial");
    return coeffs_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    Rational power(1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= power;
        power *= c;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return {};
    return *this * (Rational(1) / leading());
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw std::domain_error("Polynomial: division by zero polynomial");
    Polynomial rem = a;
    if (a.degree() < b.degree())
        return {Polynomial(), rem};
    std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
    const Rational lead_inv = Rational(1) / b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = rem.degree() - b.degree();
        const Rational factor = rem.leading() * lead_inv;
        q[shift] = factor;
        rem -= monomial(shift, factor) * b;
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? Polynomial() : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        Rational shown = c;
        if (first) {
            if (c.sign() < 0) {
                out << "-";
                shown = -c;
            }
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            shown = abs(c);
        }
        const bool unit = shown == Rational(1);
        if (i == 0 || !unit)
            out << shown.to_string();
        if (i > 0) {
            if (!unit)
                out << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

} // namespace hartogs
