#pragma once

#include "hartogs/rational.hpp"

namespace hartogs::lab {

/// Diagonal Bergman kernel of the Hartogs domain over the disc with a
/// one-dimensional fiber, summed monomial by monomial:
///   K(z, zeta) = sum_{a,b >= 0} |z|^{2a} |zeta|^{2b} / N_{a,b},
///   N_{a,b} = pi^2 pi^{s(b+1)} / (b+1) * B(a+1, 2s(b+1)+1),
/// where N_{a,b} is the squared L^2 norm of z^a zeta^b over the domain
/// (fiber integral first, then a Beta integral over the disc).
///
/// Independent of the closed-form evaluator: the only shared input is
/// the parameter s. Restricted to s >= 0 (for s < 0 the fibers are
/// unbounded and the monomials are not square integrable) and to
/// t = K_D(z)^s |zeta|^2 <= 1/2, which keeps the outer tail geometric
/// with ratio about t; both violations throw std::domain_error.
/// Truncation error is driven below 1e-10 relative.
double series_kernel_disc(const Rational& s, double z_abs2, double zeta_abs2);

} // namespace hartogs::lab
