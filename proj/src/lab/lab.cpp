#include "hartogs/lab/lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hartogs/lab/series_oracle.hpp"
#include "hartogs/numfmt.hpp"

namespace hartogs::lab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kGolden = 0.6180339887498949;

double norm_sq(const ComplexPoint& v) {
    double acc = 0.0;
    for (const auto& c : v)
        acc += std::norm(c);
    return acc;
}

/// log R(t) = (m+1) log y + log P(y), y = 1/(1-t).
double log_radial(const RadialProfile& profile, double t) {
    if (!(t < 1.0))
        throw std::domain_error("radial profile: t >= 1 is outside the domain");
    const double y = 1.0 / (1.0 - t);
    const double p = profile.p_poly.eval_double(y);
    if (!(p > 0.0))
        throw std::domain_error("radial profile: P(y) <= 0 at an interior point");
    return (profile.m + 1.0) * std::log(y) + std::log(p);
}

/// Deterministic unit vector with rotating phases; seed selects the
/// rotation so distinct grid slots get distinct directions.
ComplexPoint direction(unsigned dim, unsigned seed) {
    ComplexPoint v(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (unsigned i = 0; i < dim; ++i) {
        const double frac = std::fmod((seed + 1.0) * (i + 1.0) * kGolden, 1.0);
        v[i] = std::polar(scale, 2.0 * kPi * frac);
    }
    return v;
}

ComplexPoint scaled(double r, ComplexPoint v) {
    for (auto& c : v)
        c *= r;
    return v;
}

} // namespace

RealPoint pack(const ComplexPoint& z) {
    RealPoint x(2 * z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        x[2 * i] = z[i].real();
        x[2 * i + 1] = z[i].imag();
    }
    return x;
}

RealPoint pack_pair(const ComplexPoint& z, const ComplexPoint& zeta) {
    ComplexPoint all = z;
    all.insert(all.end(), zeta.begin(), zeta.end());
    return pack(all);
}

ComplexPoint unpack(const RealPoint& x, unsigned first_complex, unsigned count) {
    if (x.size() < 2 * (static_cast<std::size_t>(first_complex) + count))
        throw std::invalid_argument("unpack: point has too few coordinates");
    ComplexPoint z(count);
    for (unsigned i = 0; i < count; ++i)
        z[i] = Complex(x[2 * (first_complex + i)], x[2 * (first_complex + i) + 1]);
    return z;
}

double BasePotential::value(const RealPoint& x) const {
    return base_.log_diagonal(unpack(x, 0, base_.dim()));
}

bool BasePotential::interior(const RealPoint& x, double rho) const {
    return base_.interior(unpack(x, 0, base_.dim()), rho * kSqrt2);
}

HartogsPotential::HartogsPotential(BaseKernel base, RadialProfile profile)
    : base_(std::move(base)),
      profile_(std::move(profile)),
      s_double_(profile_.s.to_double()),
      a_double_(profile_.big_a.to_double()) {
    if (base_.dim() != profile_.base_dim())
        throw std::logic_error("HartogsPotential: base and profile dimensions differ");
}

double HartogsPotential::value(const RealPoint& x) const {
    const double lk = base_.log_diagonal(base_part(x));
    const double t = std::exp(s_double_ * lk) * norm_sq(fiber_part(x));
    return a_double_ * lk + log_radial(profile_, t) - profile_.m * std::log(kPi);
}

bool HartogsPotential::interior(const RealPoint& x, double rho) const {
    const double slack = rho * kSqrt2;
    const ComplexPoint z = base_part(x);
    if (!base_.interior(z, slack))
        return false;
    const auto [k_lo, k_hi] = base_.diagonal_range(z, slack);
    if (!std::isfinite(k_hi))
        return false;
    const double ks = s_double_ >= 0.0 ? std::pow(k_hi, s_double_) : std::pow(k_lo, s_double_);
    const double zn =
        std::sqrt(norm_sq(fiber_part(x))) + rho * std::sqrt(2.0 * profile_.m);
    return ks * zn * zn <= 1.0 - 1e-6;
}

double HartogsPotential::t_at(const RealPoint& x) const {
    const double lk = base_.log_diagonal(base_part(x));
    return std::exp(s_double_ * lk) * norm_sq(fiber_part(x));
}

ComplexPoint HartogsPotential::base_part(const RealPoint& x) const {
    return unpack(x, 0, base_.dim());
}

ComplexPoint HartogsPotential::fiber_part(const RealPoint& x) const {
    return unpack(x, base_.dim(), profile_.m);
}

DiastasisPotential::DiastasisPotential(BaseKernel base, RadialProfile profile, ComplexPoint z0)
    : base_(std::move(base)),
      profile_(std::move(profile)),
      z0_(std::move(z0)),
      log_k0_(base_.log_diagonal(z0_)),
      s_double_(profile_.s.to_double()),
      a_double_(profile_.big_a.to_double()) {
    if (base_.dim() != profile_.base_dim())
        throw std::logic_error("DiastasisPotential: base and profile dimensions differ");
}

double DiastasisPotential::diastasis(const ComplexPoint& z) const {
    // D = log K0 + log K(z) - log |K(z, conj z0)|^2; the two off-diagonal
    // factors in the definition are conjugates of each other.
    return log_k0_ + base_.log_diagonal(z) - 2.0 * std::log(std::abs(base_.offdiag(z, z0_)));
}

double DiastasisPotential::value(const RealPoint& x) const {
    const double d = diastasis(unpack(x, 0, base_.dim()));
    const double t = std::exp(s_double_ * d) * norm_sq(unpack(x, base_.dim(), profile_.m));
    return a_double_ * d + log_radial(profile_, t);
}

bool DiastasisPotential::interior(const RealPoint& x, double rho) const {
    const double slack = rho * kSqrt2;
    const ComplexPoint z = unpack(x, 0, base_.dim());
    if (!base_.interior(z, slack))
        return false;
    const auto [k_lo, k_hi] = base_.diagonal_range(z, slack);
    if (!std::isfinite(k_hi))
        return false;
    const auto [off_lo, off_hi] = base_.offdiag_abs_range(z, z0_, slack);
    const double d_lo = log_k0_ + std::log(k_lo) - 2.0 * std::log(off_hi);
    const double d_hi = log_k0_ + std::log(k_hi) - 2.0 * std::log(off_lo);
    const double es = s_double_ >= 0.0 ? std::exp(s_double_ * d_hi) : std::exp(s_double_ * d_lo);
    const double zn = std::sqrt(norm_sq(unpack(x, base_.dim(), profile_.m))) +
                      rho * std::sqrt(2.0 * profile_.m);
    return es * zn * zn <= 1.0 - 1e-6;
}

MetricSample metric_fd(const Potential& psi, const RealPoint& x, double h) {
    if (!psi.interior(x, 2.0 * h))
        throw std::domain_error("metric_fd: insufficient interior margin for the stencil");
    MetricSample s;
    s.point = x;
    s.tensor = complex_hessian(psi, x, h);
    s.hermitian_dev = (s.tensor - s.tensor.adjoint()).cwiseAbs().maxCoeff();
    s.det_value = s.tensor.determinant().real();
    return s;
}

MetricSample metric_fd_richardson(const Potential& psi, const RealPoint& x, double h) {
    if (!psi.interior(x, 2.0 * h))
        throw std::domain_error("metric_fd: insufficient interior margin for the stencil");
    MetricSample s;
    s.point = x;
    s.tensor = complex_hessian_richardson(psi, x, h);
    s.hermitian_dev = (s.tensor - s.tensor.adjoint()).cwiseAbs().maxCoeff();
    s.det_value = s.tensor.determinant().real();
    return s;
}

namespace {

class LogDetField final : public Potential {
public:
    LogDetField(const Potential& psi, double h) : psi_(psi), h_(h) {}

    unsigned real_dim() const override { return psi_.real_dim(); }

    // Richardson on the inner metric keeps the h^2 truncation of det g
    // out of the field the outer Hessian differentiates; the outer
    // second difference would otherwise amplify its spatial variation.
    double value(const RealPoint& x) const override {
        const double det = metric_fd_richardson(psi_, x, h_).det_value;
        if (!(det > 0.0))
            throw std::domain_error("ricci_fd: non-positive metric determinant");
        return std::log(det);
    }

    bool interior(const RealPoint& x, double rho) const override {
        return psi_.interior(x, rho + 2.0 * h_);
    }

private:
    const Potential& psi_;
    double h_;
};

} // namespace

RicciSample ricci_fd(const Potential& psi, const RealPoint& x, double h, double outer) {
    if (!psi.interior(x, outer + 4.0 * h))
        throw std::domain_error("ricci_fd: insufficient interior margin for nested differencing");
    const LogDetField logdet(psi, h);
    RicciSample r;
    r.point = x;
    r.ricci = -complex_hessian_richardson(logdet, x, outer);
    const Eigen::MatrixXcd g = metric_fd_richardson(psi, x, h).tensor;
    r.einstein_residual = (r.ricci + g).cwiseAbs().maxCoeff();
    return r;
}

DetCrosscheck::DetCrosscheck(const HartogsPotential& psi, double h)
    : psi_(psi), h_(h), lfactor_(det_formula(psi.profile())) {
    const RealPoint origin(psi.real_dim(), 0.0);
    const double det0 = metric_fd_richardson(psi, origin, h).det_value;
    const ComplexPoint z0(psi.base().dim(), Complex(0.0, 0.0));
    const double k0 = psi.base().diagonal(z0);
    // At t = 0 (y = 1) the t-dependent factor is A^n p(0)^m, exactly.
    const double tfac0 = lfactor_(Rational(1)).to_double();
    c4_ = det0 / (std::pow(k0, psi.profile().big_a.to_double()) * tfac0);
}

double DetCrosscheck::fd_det(const RealPoint& x) const {
    return metric_fd_richardson(psi_, x, h_).det_value;
}

double DetCrosscheck::formula_det(const RealPoint& x) const {
    const double t = psi_.t_at(x);
    if (!(t < 1.0))
        throw std::domain_error("det_crosscheck: point outside the domain");
    const double y = 1.0 / (1.0 - t);
    const double k = psi_.base().diagonal(psi_.base_part(x));
    return c4_ * std::pow(k, psi_.profile().big_a.to_double()) * lfactor_.eval_double(y);
}

double DetCrosscheck::relative_error(const RealPoint& x) const {
    const double ref = formula_det(x);
    return std::abs(fd_det(x) - ref) / std::abs(ref);
}

std::vector<double> base_det_ratio(const BaseKernel& base, const std::vector<RealPoint>& grid,
                                   double h) {
    const BasePotential psi(base);
    std::vector<double> out;
    out.reserve(grid.size());
    for (const auto& x : grid) {
        const double det = metric_fd_richardson(psi, x, h).det_value;
        out.push_back(det / std::exp(psi.value(x)));
    }
    return out;
}

namespace {

/// Diastasis of the base alone, as a differentiable field on R^{2n}.
class DiastasisField final : public Potential {
public:
    DiastasisField(const BaseKernel& base, ComplexPoint z0)
        : base_(base), z0_(std::move(z0)), log_k0_(base.log_diagonal(z0_)) {}

    unsigned real_dim() const override { return 2 * base_.dim(); }

    double value(const RealPoint& x) const override {
        const ComplexPoint z = unpack(x, 0, base_.dim());
        return log_k0_ + base_.log_diagonal(z) -
               2.0 * std::log(std::abs(base_.offdiag(z, z0_)));
    }

    bool interior(const RealPoint& x, double rho) const override {
        return base_.interior(unpack(x, 0, base_.dim()), rho * kSqrt2);
    }

private:
    const BaseKernel& base_;
    ComplexPoint z0_;
    double log_k0_;
};

} // namespace

double diastasis_check(const BaseKernel& base, const ComplexPoint& z0,
                       const std::vector<RealPoint>& grid, double h) {
    const DiastasisField dia(base, z0);
    const BasePotential logk(base);
    const RealPoint x0 = pack(z0);

    double dev = std::abs(dia.value(x0)); // D(z0) = 0

    // First derivatives vanish at the center (Richardson-extrapolated).
    const auto g_h = real_gradient(dia, x0, h);
    const auto g_h2 = real_gradient(dia, x0, h / 2.0);
    for (std::size_t i = 0; i < g_h.size(); ++i)
        dev = std::max(dev, std::abs((4.0 * g_h2[i] - g_h[i]) / 3.0));

    // Mixed second derivatives agree with those of log K.
    const Eigen::MatrixXcd hd = complex_hessian_richardson(dia, x0, h);
    const Eigen::MatrixXcd hk = complex_hessian_richardson(logk, x0, h);
    dev = std::max(dev, (hd - hk).cwiseAbs().maxCoeff());

    // Reproducing-kernel Cauchy-Schwarz forbids negative values.
    for (const auto& x : grid) {
        const double d = dia.value(x);
        if (d < 0.0)
            dev = std::max(dev, -d);
    }
    return dev;
}

double hblock_check(const BaseKernel& base, const RadialProfile& profile,
                    const ComplexPoint& z0, double h) {
    const unsigned n = base.dim();
    const unsigned m = profile.m;
    const DiastasisPotential phi(base, profile, z0);
    const BasePotential bpsi(base);
    const Eigen::MatrixXcd g_base = complex_hessian_richardson(bpsi, pack(z0), h);

    const RationalFunction p_y = p_of_y(profile);
    // p'(t) = y^2 dp/dy under y = 1/(1-t).
    const RationalFunction pt_y = RationalFunction(Polynomial::monomial(2)) * p_y.derivative();

    const double a = profile.big_a.to_double();
    const double s = profile.s.to_double();

    double dev = 0.0;
    unsigned seed = 40;
    for (const double t_target : {0.2, 0.4}) {
        const ComplexPoint eta = scaled(std::sqrt(t_target), direction(m, ++seed));
        const RealPoint x = pack_pair(z0, eta);
        const Eigen::MatrixXcd g = metric_fd_richardson(phi, x, h).tensor;

        const double t = norm_sq(eta); // D(z0) = 0, so t = ||eta||^2 here
        const double y = 1.0 / (1.0 - t);
        const double p = p_y.eval_double(y);
        const double pt = pt_y.eval_double(y);

        const Eigen::MatrixXcd ref_h = (a + s * t * p) * g_base;
        dev = std::max(dev, (g.topLeftCorner(n, n) - ref_h).cwiseAbs().maxCoeff() /
                                ref_h.cwiseAbs().maxCoeff());
        dev = std::max(dev, g.topRightCorner(n, m).cwiseAbs().maxCoeff());

        Eigen::MatrixXcd ref_v(m, m);
        for (unsigned mu = 0; mu < m; ++mu)
            for (unsigned nu = 0; nu < m; ++nu)
                ref_v(mu, nu) = pt * std::conj(eta[mu]) * eta[nu] +
                                (mu == nu ? Complex(p, 0.0) : Complex(0.0, 0.0));
        dev = std::max(dev, (g.bottomRightCorner(m, m) - ref_v).cwiseAbs().maxCoeff() / p);
    }
    return dev;
}

std::vector<RealPoint> base_grid(const BaseKernel& base, unsigned density) {
    if (density == 0)
        throw std::invalid_argument("base_grid: density must be >= 1");
    const unsigned count = density + 2;
    std::vector<RealPoint> out;
    out.reserve(count);
    for (unsigned k = 0; k < count; ++k) {
        const double r = 0.65 * k / (count - 1);
        out.push_back(pack(scaled(r, direction(base.dim(), k))));
    }
    return out;
}

std::vector<double> grid_t_values(unsigned density) {
    if (density == 0)
        throw std::invalid_argument("grid_t_values: density must be >= 1");
    std::vector<double> ts = {0.0, 0.2, 0.4};
    for (unsigned j = 1; j <= density + 1; ++j)
        ts.push_back(0.6 * j / (density + 1.0));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-9; }),
             ts.end());
    return ts;
}

std::vector<RealPoint> standard_grid(const BaseKernel& base, const RadialProfile& profile,
                                     unsigned density) {
    const double s = profile.s.to_double();
    const auto zs = base_grid(base, density);
    const auto ts = grid_t_values(density);
    std::vector<RealPoint> out;
    out.reserve(zs.size() * ts.size());
    unsigned seed = 100;
    for (const auto& xz : zs) {
        const ComplexPoint z = unpack(xz, 0, base.dim());
        const double k = base.diagonal(z);
        for (const double t : ts) {
            const double rho = std::sqrt(t) * std::pow(k, -s / 2.0);
            out.push_back(pack_pair(z, scaled(rho, direction(profile.m, ++seed))));
        }
    }
    return out;
}

LabSummary run_lab(const DomainSpec& spec, const HartogsParams& params, unsigned density) {
    if (density == 0)
        throw std::invalid_argument("run_lab: density must be >= 1");
    const auto base_opt = closed_form_base(spec);
    if (!base_opt)
        throw std::invalid_argument(
            "run_lab: no closed-form base kernel for this spec; supported bases are "
            "ball:n and polydisc:n");
    const BaseKernel& base = *base_opt;
    const StructuralData data = structural_data(spec);
    const RadialProfile profile = build_profile(data, params);

    // For s < 0 the formula's metric degenerates at some t < 1: the
    // t-series coefficients of R are proportional to F_Omega(s(l+m)),
    // which turns negative at large l for any negative s. The metric
    // eigenvalue factors are A + s t p (horizontal), p (fiber tangential)
    // and p + t p_t (fiber radial); refuse grids whose FD stencils would
    // cross the first zero instead of differentiating NaNs. Stencils
    // around a grid point reach roughly 0.08 beyond it in t.
    if (params.s.sign() < 0) {
        const RationalFunction p_func = p_of_y(profile);
        const RationalFunction y_var(Polynomial::monomial(1));
        const RationalFunction t_of_y =
            RationalFunction(Polynomial({Rational(-1), Rational(1)}), Polynomial::monomial(1));
        const RationalFunction horiz =
            RationalFunction(Polynomial({profile.big_a})) +
            RationalFunction(Polynomial({params.s})) * t_of_y * p_func;
        const RationalFunction radial =
            p_func + y_var * (y_var - RationalFunction(Polynomial({Rational(1)}))) *
                         p_func.derivative();
        double t_hi = 0.08;
        for (double t : grid_t_values(density))
            t_hi = std::max(t_hi, t + 0.08);
        for (double t = 0.0; t <= t_hi; t += 0.005) {
            const double y = 1.0 / (1.0 - t);
            if (profile.p_poly.eval_double(y) <= 0.0 || p_func.eval_double(y) <= 0.0 ||
                horiz.eval_double(y) <= 0.0 || radial.eval_double(y) <= 0.0)
                throw std::domain_error("run_lab: the kernel formula degenerates at t = " +
                                        fmt_g(t) + " for s = " + params.s.to_string() +
                                        "; the finite-difference grid would cross it");
        }
    }

    LabSummary out;
    out.label = spec.label.empty() ? base.name() : spec.label;
    out.base_n = base.dim();
    out.m = params.m;
    out.s = params.s;
    out.density = density;
    out.base_ratio_expected = base.det_ratio();

    const double h = 1e-3;
    const HartogsPotential psi(base, profile);
    const BasePotential bpsi(base);
    const DetCrosscheck det_check(psi, h);
    const double p0 = p_at_zero(profile).to_double();
    const double s_dbl = params.s.to_double();

    const bool oracle_on = base.kind() == BaseKind::Ball && base.dim() == 1 &&
                           params.m == 1 && params.s.sign() >= 0;

    for (const auto& x : standard_grid(base, profile, density)) {
        LabRow row;
        row.point = x;
        row.t = psi.t_at(x);

        const MetricSample ms = metric_fd(psi, x, h);
        out.hermitian_dev = std::max(out.hermitian_dev, ms.hermitian_dev);

        if (row.t < 1e-14) {
            const unsigned n = base.dim();
            const unsigned m = params.m;
            const ComplexPoint z = psi.base_part(x);
            out.zero_offdiag_max =
                std::max(out.zero_offdiag_max,
                         ms.tensor.topRightCorner(n, m).cwiseAbs().maxCoeff());
            const Eigen::MatrixXcd ref_h =
                profile.big_a.to_double() * complex_hessian(bpsi, pack(z), h);
            out.zero_horizontal_rel =
                std::max(out.zero_horizontal_rel,
                         (ms.tensor.topLeftCorner(n, n) - ref_h).cwiseAbs().maxCoeff() /
                             ref_h.cwiseAbs().maxCoeff());
            const double fib_ref = p0 * std::pow(base.diagonal(z), s_dbl);
            const Eigen::MatrixXcd ref_v = fib_ref * Eigen::MatrixXcd::Identity(m, m);
            out.zero_fiber_rel =
                std::max(out.zero_fiber_rel,
                         (ms.tensor.bottomRightCorner(m, m) - ref_v).cwiseAbs().maxCoeff() /
                             fib_ref);
        }

        row.det_fd = det_check.fd_det(x);
        row.det_formula = det_check.formula_det(x);
        row.det_rel_err = std::abs(row.det_fd - row.det_formula) / std::abs(row.det_formula);
        out.det_rel_max = std::max(out.det_rel_max, row.det_rel_err);

        const RicciSample rs = ricci_fd(psi, x, h);
        row.einstein_residual = rs.einstein_residual;
        out.einstein_residual_max = std::max(out.einstein_residual_max, rs.einstein_residual);

        if (oracle_on && row.t <= 0.5 + 1e-12) {
            const double z2 = norm_sq(psi.base_part(x));
            const double u2 = norm_sq(psi.fiber_part(x));
            row.kernel_series = series_kernel_disc(params.s, z2, u2);
            row.kernel_formula = kernel_value(profile, base.diagonal(psi.base_part(x)), u2);
            const double rel = std::abs(*row.kernel_series - *row.kernel_formula) /
                               std::abs(*row.kernel_formula);
            out.oracle_rel_max = std::max(out.oracle_rel_max.value_or(0.0), rel);
        }

        out.rows.push_back(std::move(row));
    }

    const auto bgrid = base_grid(base, density);
    const auto ratios = base_det_ratio(base, bgrid, h);
    const double mean =
        std::accumulate(ratios.begin(), ratios.end(), 0.0) / static_cast<double>(ratios.size());
    const auto [lo_it, hi_it] = std::minmax_element(ratios.begin(), ratios.end());
    out.base_ratio_value = mean;
    out.base_ratio_spread = (*hi_it - *lo_it) / mean;

    for (const auto& x : bgrid)
        out.base_ricci_residual_max =
            std::max(out.base_ricci_residual_max, ricci_fd(bpsi, x, h).einstein_residual);

    const ComplexPoint z0 = unpack(bgrid[bgrid.size() / 2], 0, base.dim());
    out.diastasis_dev = diastasis_check(base, z0, bgrid, h);
    out.hblock_dev = hblock_check(base, profile, z0, h);
    return out;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_cell(const std::optional<double>& v) {
    return v ? fmt_g(*v) : std::string();
}

} // namespace

std::string lab_csv_header() {
    return "label,n,m,s,point,t,det_fd,det_formula,det_rel_err,einstein_residual,"
           "kernel_series,kernel_formula";
}

std::string lab_csv_rows(const LabSummary& s) {
    std::ostringstream out;
    for (const auto& row : s.rows) {
        out << csv_quote(s.label) << ',' << s.base_n << ',' << s.m << ',' << s.s.to_string()
            << ',' << '"';
        for (std::size_t i = 0; i < row.point.size(); ++i) {
            if (i)
                out << ' ';
            out << fmt_g(row.point[i]);
        }
        out << "\"," << fmt_g(row.t) << ',' << fmt_g(row.det_fd) << ',' << fmt_g(row.det_formula)
            << ',' << fmt_g(row.det_rel_err) << ',' << opt_cell(row.einstein_residual) << ','
            << opt_cell(row.kernel_series) << ',' << opt_cell(row.kernel_formula) << '\n';
    }
    return out.str();
}

std::string lab_csv(const LabSummary& s) {
    return lab_csv_header() + '\n' + lab_csv_rows(s);
}

} // namespace hartogs::lab
