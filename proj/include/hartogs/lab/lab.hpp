#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hartogs/lab/base_kernel.hpp"
#include "hartogs/lab/finite_diff.hpp"
#include "hartogs/profile.hpp"

namespace hartogs::lab {

/// Interleaved real coordinates: z_a = x[2a] + i x[2a+1].
RealPoint pack(const ComplexPoint& z);
RealPoint pack_pair(const ComplexPoint& z, const ComplexPoint& zeta);
ComplexPoint unpack(const RealPoint& x, unsigned first_complex, unsigned count);

/// psi = log K_base(z, conj z) on R^{2n}; Kahler potential of the base
/// Bergman metric.
class BasePotential final : public Potential {
public:
    explicit BasePotential(BaseKernel base) : base_(std::move(base)) {}

    unsigned real_dim() const override { return 2 * base_.dim(); }
    double value(const RealPoint& x) const override;
    bool interior(const RealPoint& x, double rho) const override;

    const BaseKernel& base() const { return base_; }

private:
    BaseKernel base_;
};

/// psi = A log K(z) + log R(t) - m log pi with t = K(z)^s ||zeta||^2,
/// on R^{2(n+m)}; Kahler potential of the Hartogs Bergman metric.
class HartogsPotential final : public Potential {
public:
    HartogsPotential(BaseKernel base, RadialProfile profile);

    unsigned real_dim() const override { return 2 * (base_.dim() + profile_.m); }
    double value(const RealPoint& x) const override;
    bool interior(const RealPoint& x, double rho) const override;

    double t_at(const RealPoint& x) const;
    ComplexPoint base_part(const RealPoint& x) const;
    ComplexPoint fiber_part(const RealPoint& x) const;

    const BaseKernel& base() const { return base_; }
    const RadialProfile& profile() const { return profile_; }

private:
    BaseKernel base_;
    RadialProfile profile_;
    double s_double_;
    double a_double_;
};

/// The same metric written at a center z0 in the rotated fiber variable:
/// Phi = A D_{z0}(z) + log R(e^{s D_{z0}(z)} ||eta||^2), D the diastasis
/// of the base. Along z = z0 the metric block-diagonalizes, which makes
/// the horizontal and vertical block formulas directly testable.
class DiastasisPotential final : public Potential {
public:
    DiastasisPotential(BaseKernel base, RadialProfile profile, ComplexPoint z0);

    unsigned real_dim() const override { return 2 * (base_.dim() + profile_.m); }
    double value(const RealPoint& x) const override;
    bool interior(const RealPoint& x, double rho) const override;

    /// Diastasis of the base at z, centered at z0.
    double diastasis(const ComplexPoint& z) const;

private:
    BaseKernel base_;
    RadialProfile profile_;
    ComplexPoint z0_;
    double log_k0_;
    double s_double_;
    double a_double_;
};

struct MetricSample {
    RealPoint point;
    Eigen::MatrixXcd tensor;
    double det_value = 0.0;
    double hermitian_dev = 0.0; // max |g - g^H|; zero by construction
};

/// Metric tensor by plain central differences at step h. Requires
/// interior margin 2h; throws std::domain_error otherwise.
MetricSample metric_fd(const Potential& psi, const RealPoint& x, double h = 1e-3);

/// Same, with the (h, h/2) Richardson step applied to the tensor before
/// the determinant; used where determinant accuracy is compared against
/// closed forms.
MetricSample metric_fd_richardson(const Potential& psi, const RealPoint& x, double h = 1e-3);

struct RicciSample {
    RealPoint point;
    Eigen::MatrixXcd ricci;          // -dd-bar log det g
    double einstein_residual = 0.0;  // max |Ric + g|, tests lambda = -1
};

/// Nested differencing: det g from metric_fd at inner step h, then the
/// complex Hessian of log det g at outer steps (outer, outer/2) combined
/// by Richardson. The outer step is deliberately much larger than h: the
/// inner determinant carries noise of order eps/h^2, which the outer
/// second difference divides by outer^2.
RicciSample ricci_fd(const Potential& psi, const RealPoint& x,
                     double h = 1e-3, double outer = 1e-2);

/// Holds the constant C4 of the determinant formula
///   det g = C4 K(z)^A (A + s t p)^n p^{m-1} (p + t p'),
/// calibrated once at the zero-section origin and then fixed, so the
/// formula's constancy becomes testable pointwise.
class DetCrosscheck {
public:
    explicit DetCrosscheck(const HartogsPotential& psi, double h = 1e-3);

    double c4() const { return c4_; }
    double fd_det(const RealPoint& x) const;
    double formula_det(const RealPoint& x) const;
    double relative_error(const RealPoint& x) const;

private:
    const HartogsPotential& psi_;
    double h_;
    RationalFunction lfactor_; // (A + s t p)^n p^{m-1} (p + t p') in y
    double c4_ = 0.0;
};

/// det g_base / K at each grid point (Richardson-extrapolated metric);
/// constant across the grid with value BaseKernel::det_ratio().
std::vector<double> base_det_ratio(const BaseKernel& base,
                                   const std::vector<RealPoint>& grid, double h = 1e-3);

/// Max deviation over the diastasis identities at z0: D(z0) = 0, first
/// derivatives vanish, mixed second derivatives equal those of log K;
/// plus nonnegativity of D on the grid.
double diastasis_check(const BaseKernel& base, const ComplexPoint& z0,
                       const std::vector<RealPoint>& grid, double h = 1e-3);

/// Max deviation of the three blocks of the metric of DiastasisPotential
/// at (z0, eta), eta != 0, from their closed forms: horizontal
/// (A + s t p) g_base(z0), mixed 0, vertical p I + p' conj(eta)^t eta.
double hblock_check(const BaseKernel& base, const RadialProfile& profile,
                    const ComplexPoint& z0, double h = 1e-3);

/// Deterministic base points: density+2 radii from 0 to 0.65 with
/// rotating coordinate phases.
std::vector<RealPoint> base_grid(const BaseKernel& base, unsigned density);

/// Deterministic t samples: always contains {0, 0.2, 0.4}, everything
/// <= 0.6; density adds intermediate values.
std::vector<double> grid_t_values(unsigned density);

/// Product grid over base points and t values; the fiber direction
/// rotates deterministically and ||zeta|| is solved from t.
std::vector<RealPoint> standard_grid(const BaseKernel& base, const RadialProfile& profile,
                                     unsigned density);

struct LabRow {
    RealPoint point;
    double t = 0.0;
    double det_fd = 0.0;
    double det_formula = 0.0;
    double det_rel_err = 0.0;
    std::optional<double> einstein_residual;
    std::optional<double> kernel_series;  // disc base, m = 1, s >= 0, t <= 1/2
    std::optional<double> kernel_formula;
};

struct LabSummary {
    std::string label;
    unsigned base_n = 0;
    unsigned m = 0;
    Rational s;
    unsigned density = 1;

    double hermitian_dev = 0.0;
    double zero_offdiag_max = 0.0;    // base-fiber block at t = 0, absolute
    double zero_horizontal_rel = 0.0; // horizontal block vs A g_base at t = 0
    double zero_fiber_rel = 0.0;      // fiber block vs p(0) K^s I at t = 0
    double hblock_dev = 0.0;          // blocks at eta != 0 via DiastasisPotential
    double det_rel_max = 0.0;
    double einstein_residual_max = 0.0;
    double base_ratio_value = 0.0;    // mean of det g_base / K over the base grid
    double base_ratio_spread = 0.0;   // (max - min) / mean
    double base_ratio_expected = 0.0; // closed form
    double base_ricci_residual_max = 0.0;
    double diastasis_dev = 0.0;
    std::optional<double> oracle_rel_max;

    std::vector<LabRow> rows;
};

/// Full lab run on one (spec, m, s): metric, determinant, Ricci, base
/// geometry, diastasis, block structure, and (disc base, m = 1) the
/// series oracle. Throws std::invalid_argument when the spec has no
/// closed-form kernel.
LabSummary run_lab(const DomainSpec& spec, const HartogsParams& params, unsigned density = 1);

/// Stable CSV schema, one row per grid point:
///   label,n,m,s,point,t,det_fd,det_formula,det_rel_err,einstein_residual,kernel_series,kernel_formula
/// point is a quoted, space-separated list of the 2(n+m) real
/// coordinates; optional cells are empty when not computed.
/// lab_csv_rows emits the data rows only, so several summaries can share
/// one header line; lab_csv is the single-summary convenience form.
std::string lab_csv_header();
std::string lab_csv_rows(const LabSummary& summary);
std::string lab_csv(const LabSummary& summary);

} // namespace hartogs::lab
