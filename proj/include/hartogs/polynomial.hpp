#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hartogs/rational.hpp"

namespace hartogs {

/// Dense univariate polynomial over Rational. Coefficients are stored
/// low degree first; the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list). degree() is -1 for zero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(std::size_t deg, Rational coeff = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational leading() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(const Polynomial& a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Formal derivative d/dx.
    Polynomial derivative() const;

    /// Exact evaluation (Horner).
    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    /// p(c*x): scales the coefficient of x^i by c^i.
    Polynomial scale_argument(const Rational& c) const;

    Polynomial monic() const;

    /// Euclidean division: returns (quotient, remainder) with
    /// a = q*b + r, deg r < deg b. Throws on zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    /// Monic gcd; gcd(0,0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace hartogs
