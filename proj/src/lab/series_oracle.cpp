#include "hartogs/lab/series_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hartogs::lab {

namespace {

constexpr double kPi = std::numbers::pi;

/// sum_{a >= 0} x^a / B(a+1, beta), x in [0, 1). Term ratio is
/// x (a+1+beta)/(a+1), which decreases to x; once it is below
/// (1+x)/2 < 1 the tail is geometrically dominated.
double inner_sum(double x, double beta) {
    if (x == 0.0)
        return beta; // only a = 0 survives: 1/B(1, beta) = beta
    const double lx = std::log(x);
    const double lg_beta = std::lgamma(beta);
    const double r_bar = 0.5 * (1.0 + x);
    double total = 0.0;
    for (unsigned long a = 0; a < 100000; ++a) {
        const double term =
            std::exp(std::lgamma(a + 1.0 + beta) - std::lgamma(a + 1.0) - lg_beta + a * lx);
        total += term;
        const double ratio = x * (a + 1.0 + beta) / (a + 1.0);
        if (ratio < r_bar && term * r_bar / (1.0 - r_bar) < 1e-14 * total)
            return total;
    }
    throw std::logic_error("series oracle: inner sum failed to converge");
}

} // namespace

double series_kernel_disc(const Rational& s, double z_abs2, double zeta_abs2) {
    if (s.sign() < 0)
        throw std::domain_error("series oracle: requires s >= 0");
    if (!(z_abs2 >= 0.0 && z_abs2 < 1.0) || !(zeta_abs2 >= 0.0))
        throw std::invalid_argument("series oracle: point outside the disc bundle");

    const double sd = s.to_double();
    // t = K_D(z)^s |zeta|^2 with K_D = 1/(pi (1-|z|^2)^2).
    const double one_minus = 1.0 - z_abs2;
    const double t = std::pow(kPi * one_minus * one_minus, -sd) * zeta_abs2;
    if (t > 0.5 + 1e-12)
        throw std::domain_error("series oracle: t > 1/2, truncation unsound");

    const double lpi = std::log(kPi);
    double total = 0.0;
    double prev = 0.0;
    for (unsigned long b = 0; b < 100000; ++b) {
        const double beta = 2.0 * sd * (b + 1.0) + 1.0;
        // 1/N_{a,b} = (b+1) pi^{-2} pi^{-s(b+1)} / B(a+1, beta)
        const double scale =
            (b + 1.0) * std::exp(-2.0 * lpi - sd * (b + 1.0) * lpi);
        const double pow_u = b == 0 ? 1.0 : std::pow(zeta_abs2, static_cast<double>(b));
        const double term = scale * pow_u * inner_sum(z_abs2, beta);
        total += term;
        if (zeta_abs2 == 0.0)
            return total; // only b = 0 contributes
        // Outer ratio tends to t <= 1/2; once it drops below 0.8 the
        // rest is bounded by a geometric tail.
        if (b >= 2 && prev > 0.0) {
            const double ratio = term / prev;
            if (ratio < 0.8 && term * ratio / (1.0 - ratio) < 1e-12 * total)
                return total;
        }
        prev = term;
    }
    throw std::logic_error("series oracle: outer sum failed to converge");
}

} // namespace hartogs::lab
