#pragma once

#include <string>

#include "hartogs/polynomial.hpp"

namespace hartogs {

/// Univariate rational function num/den over Rational, kept in canonical
/// form: gcd(num, den) = 1 and den monic (den = 1 for polynomials).
/// Equality of rational functions is equality of the canonical
/// representation, never decided by sampling.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(Rational constant)
        : num_(std::move(constant)), den_(Rational(1)) {}
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(const RationalFunction& a);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(unsigned e) const;

    /// Formal derivative (quotient rule).
    RationalFunction derivative() const;

    /// Exact evaluation; throws if the denominator vanishes at x.
    Rational operator()(const Rational& x) const;

    /// Floating-point evaluation (no pole detection beyond IEEE division).
    double eval_double(double x) const {
        return num_.eval_double(x) / den_.eval_double(x);
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// Canonical form of num/den; throws std::domain_error on zero denominator.
RationalFunction ratfun_normalize(Polynomial num, Polynomial den);

} // namespace hartogs
