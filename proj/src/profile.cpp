#include "hartogs/profile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hartogs/pochhammer.hpp"

namespace hartogs {

HartogsParams make_params(const StructuralData& data, unsigned m, Rational s) {
    if (m == 0)
        throw std::invalid_argument("fiber dimension m must be >= 1");
    if (!validate_s(data, s))
        throw std::domain_error("inadmissible s = " + s.to_string() +
                                " (requires s > -C_Omega = " + (-data.c_omega).to_string() + ")");
    return HartogsParams{m, std::move(s)};
}

RadialProfile build_profile(const StructuralData& data, const HartogsParams& params) {
    if (params.m == 0)
        throw std::invalid_argument("fiber dimension m must be >= 1");
    if (!validate_s(data, params.s))
        throw std::domain_error("inadmissible s = " + params.s.to_string() +
                                " (requires s > -C_Omega = " + (-data.c_omega).to_string() +
                                ")");

    RadialProfile profile;
    profile.m = params.m;
    profile.s = params.s;
    profile.big_a = Rational(static_cast<long>(params.m)) * params.s + Rational(1);

    const unsigned n = data.dim;
    profile.c_coeffs = to_pochhammer(data.f_omega.scale_argument(params.s));
    profile.c_coeffs.resize(n + 1, Rational(0));

    profile.a_coeffs.reserve(n + 1);
    for (unsigned j = 0; j <= n; ++j)
        profile.a_coeffs.push_back(profile.c_coeffs[j] *
                                   Rational(factorial(j + params.m)));
    profile.p_poly = Polynomial(profile.a_coeffs);

    // R(0) = P(1) = m! F(s m) must be positive for the profile to come
    // from a kernel. s > -C_Omega alone does not guarantee this once
    // m >= 2: sufficiently negative s pushes the zero-section value
    // R(0) to zero and below, and no metric exists there.
    if (!(profile.p_poly(Rational(1)) > Rational(0)))
        throw std::domain_error("degenerate profile: R(0) = P(1) <= 0 at m = " +
                                std::to_string(params.m) + ", s = " + params.s.to_string() +
                                "; the kernel formula defines no metric for this pair");
    return profile;
}

RationalFunction p_of_y(const RadialProfile& profile) {
    if (profile.p_poly.is_zero())
        throw std::domain_error("p_of_y: zero radial polynomial");
    const Polynomial y = Polynomial::monomial(1);
    const Polynomial y2 = Polynomial::monomial(2);
    const Rational m_plus_1(static_cast<long>(profile.m) + 1);
    return RationalFunction(y * m_plus_1 * profile.p_poly + y2 * profile.p_poly.derivative(),
                            profile.p_poly);
}

Rational p_at_zero(const RadialProfile& profile) {
    const Rational p1 = profile.p_poly(Rational(1));
    if (p1.is_zero())
        throw std::domain_error("p_at_zero: P(1) = 0, profile inadmissible");
    return Rational(static_cast<long>(profile.m) + 1) +
           profile.p_poly.derivative()(Rational(1)) / p1;
}

double kernel_value(const RadialProfile& profile, double k_base, double norm_sq_zeta) {
    if (!(k_base > 0.0) || !std::isfinite(k_base))
        throw std::invalid_argument("kernel_value: base kernel value must be positive");
    if (norm_sq_zeta < 0.0)
        throw std::invalid_argument("kernel_value: ||zeta||^2 must be nonnegative");
    const double t = std::pow(k_base, profile.s.to_double()) * norm_sq_zeta;
    if (t >= 1.0)
        throw std::domain_error("kernel_value: point outside domain (t >= 1)");
    double radial = 0.0;
    for (std::size_t j = 0; j < profile.a_coeffs.size(); ++j)
        radial += profile.a_coeffs[j].to_double() *
                  std::pow(1.0 - t, -static_cast<double>(j + profile.m + 1));
    return std::pow(k_base, profile.big_a.to_double()) /
           std::pow(std::numbers::pi, static_cast<double>(profile.m)) * radial;
}

RationalFunction det_formula(const RadialProfile& profile) {
    const unsigned n = profile.base_dim();
    const Polynomial y = Polynomial::monomial(1);

    const RationalFunction p = p_of_y(profile);
    // t = (y-1)/y; p_t = dp/dt = y^2 dp/dy.
    const RationalFunction t(Polynomial({Rational(-1), Rational(1)}), y);
    const RationalFunction p_t = RationalFunction(Polynomial::monomial(2)) * p.derivative();

    const RationalFunction horizontal =
        (RationalFunction(profile.big_a) + RationalFunction(profile.s) * t * p).pow(n);
    const RationalFunction vertical = p.pow(profile.m - 1) * (p + t * p_t);
    return horizontal * vertical;
}

} // namespace hartogs
