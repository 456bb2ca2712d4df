#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hartogs/domain.hpp"

namespace hartogs::lab {

using Complex = std::complex<double>;
using ComplexPoint = std::vector<Complex>;

enum class BaseKind { Ball, Polydisc };

/// Base domain with a closed-form Bergman kernel.
///   Ball(n):     K(z, conj z) = n!/pi^n (1 - ||z||^2)^{-(n+1)}
///   Polydisc(n): K(z, conj z) = prod_i 1/(pi (1 - |z_i|^2)^2)
/// The off-diagonal values come from polarization; on these domains the
/// polarized factors have positive real part, so the principal branch
/// of the complex power is single valued.
class BaseKernel {
public:
    static BaseKernel ball(unsigned n);
    static BaseKernel polydisc(unsigned n);

    BaseKind kind() const { return kind_; }
    unsigned dim() const { return n_; }
    std::string name() const;

    /// True when z is interior with slack: each coordinate may move by
    /// up to coord_slack in modulus without leaving the domain.
    bool interior(const ComplexPoint& z, double coord_slack = 0.0) const;

    /// K(z, conj z); throws std::domain_error outside the domain.
    double diagonal(const ComplexPoint& z) const;

    /// log K(z, conj z), computed directly for accuracy.
    double log_diagonal(const ComplexPoint& z) const;

    /// [min, max] of K(w, conj w) over all w with |w_i - z_i| <= coord_slack.
    /// The upper bound is +inf when the slack reaches the boundary.
    std::pair<double, double> diagonal_range(const ComplexPoint& z, double coord_slack) const;

    /// K(z, conj w).
    Complex offdiag(const ComplexPoint& z, const ComplexPoint& w) const;

    /// [min, max] of |K(z', conj w)| over |z'_i - z_i| <= coord_slack,
    /// w fixed and interior.
    std::pair<double, double> offdiag_abs_range(const ComplexPoint& z, const ComplexPoint& w,
                                                double coord_slack) const;

    /// The constant det g_base / K of the base Bergman metric:
    /// (n+1)^n pi^n / n! for Ball(n), (2 pi)^n for Polydisc(n).
    double det_ratio() const;

private:
    BaseKernel(BaseKind kind, unsigned n) : kind_(kind), n_(n) {}

    BaseKind kind_;
    unsigned n_;
};

/// Structural match of a spec against the bases the lab can evaluate:
/// one block (p, 0, 0) is Ball(p+1), r blocks (0, 0, 0) are Polydisc(r).
/// Anything else has no closed-form kernel here.
std::optional<BaseKernel> closed_form_base(const DomainSpec& spec);

} // namespace hartogs::lab
