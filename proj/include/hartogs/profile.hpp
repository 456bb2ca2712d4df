#pragma once

#include <vector>

#include "hartogs/domain.hpp"
#include "hartogs/rational_function.hpp"

namespace hartogs {

/// Fiber dimension m >= 1 and twist exponent s > -C_Omega of the Hartogs
/// domain over a base: {(z, zeta) : ||zeta||^2 < K(z)^{-s}}.
struct HartogsParams {
    unsigned m = 1;
    Rational s;
};

/// Validated constructor; throws on m = 0 or inadmissible s.
HartogsParams make_params(const StructuralData& data, unsigned m, Rational s);

/// Radial part of the Hartogs Bergman kernel in the variable y = 1/(1-t):
/// R(t) = y^{m+1} P(y) with P(y) = sum_j A_j y^j, A_j = c_j(s) (j+m)!,
/// where the c_j come from expanding F_Omega(s x) in the Pochhammer basis.
/// c_coeffs and a_coeffs always carry n+1 entries (n = base dimension),
/// zero-padded; deg P = n exactly when s != 0.
struct RadialProfile {
    unsigned m = 1;
    Rational s;
    std::vector<Rational> c_coeffs; // c_0..c_n
    std::vector<Rational> a_coeffs; // A_0..A_n
    Polynomial p_poly;              // P(y)
    Rational big_a;                 // A = m*s + 1

    unsigned base_dim() const { return static_cast<unsigned>(a_coeffs.size()) - 1; }
};

/// Builds the profile; throws on inadmissible s and asserts
/// R(0) = P(1) > 0. Since P(1) = m! F_Omega(s m), the assertion can
/// fire for m >= 2 at admissible negative s (e.g. ball:n, m = 2,
/// s = -1/(2(n+1)) gives P(1) = 0 exactly); such pairs define no
/// metric and are rejected with std::domain_error.
RadialProfile build_profile(const StructuralData& data, const HartogsParams& params);

/// Logarithmic derivative p(t) = R'(t)/R(t) expressed in y:
/// (m+1) y + y^2 P'(y)/P(y), canonical form.
RationalFunction p_of_y(const RadialProfile& profile);

/// p at t = 0 (y = 1): (m+1) + P'(1)/P(1). Throws when P(1) = 0.
Rational p_at_zero(const RadialProfile& profile);

/// Floating-point diagonal kernel value K^A / pi^m * R(t) with
/// t = k_base^s * norm_sq_zeta; throws when t >= 1 (outside the domain).
double kernel_value(const RadialProfile& profile, double k_base, double norm_sq_zeta);

/// The z-independent factor of the metric determinant, as an exact
/// rational function of y:
///   (A + s t(y) p(y))^n * p(y)^{m-1} * (p(y) + t(y) p_t(y)),
/// with t(y) = (y-1)/y and p_t = y^2 dp/dy.
RationalFunction det_formula(const RadialProfile& profile);

} // namespace hartogs
