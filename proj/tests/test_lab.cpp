#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "hartogs/lab/lab.hpp"
#include "hartogs/lab/series_oracle.hpp"

#include "corpus.hpp"

using hartogs::Rational;
using hartogs::lab::BaseKernel;
using hartogs::lab::Complex;
using hartogs::lab::ComplexPoint;
using hartogs::lab::RealPoint;

namespace {

constexpr double kPi = std::numbers::pi;

/// f = |z1|^2 + 2|z2|^2 + Re(z1 conj z2): complex Hessian is exactly
/// [[1, 1/2], [1/2, 2]] and central differences are exact on quadratics.
struct Quadratic final : hartogs::lab::Potential {
    unsigned real_dim() const override { return 4; }
    double value(const RealPoint& x) const override {
        const Complex z1(x[0], x[1]), z2(x[2], x[3]);
        return std::norm(z1) + 2.0 * std::norm(z2) + (z1 * std::conj(z2)).real();
    }
    bool interior(const RealPoint&, double) const override { return true; }
};

hartogs::RadialProfile disc_profile(unsigned m, Rational s) {
    const auto data = hartogs::structural_data(hartogs::polydisc_spec(1));
    return hartogs::build_profile(data, hartogs::make_params(data, m, s));
}

} // namespace

TEST_CASE("pack and unpack") {
    const ComplexPoint z{{1.0, 2.0}, {3.0, -4.0}};
    const ComplexPoint w{{0.5, 0.0}};
    const RealPoint x = hartogs::lab::pack_pair(z, w);
    REQUIRE(x.size() == 6);
    CHECK(x[0] == 1.0);
    CHECK(x[3] == -4.0);
    CHECK(x[4] == 0.5);
    CHECK(hartogs::lab::unpack(x, 0, 2) == z);
    CHECK(hartogs::lab::unpack(x, 2, 1) == w);
    CHECK(hartogs::lab::pack(z) == RealPoint{1.0, 2.0, 3.0, -4.0});
    CHECK_THROWS_AS(hartogs::lab::unpack(x, 2, 2), std::invalid_argument);
}

TEST_CASE("complex hessian is exact on quadratics") {
    const Quadratic f;
    const RealPoint x{0.3, -0.1, 0.7, 0.2};
    const Eigen::MatrixXcd g = hartogs::lab::complex_hessian(f, x, 1e-2);
    // exact up to rounding in the O(h^2) stencil sums; h = 1e-2 leaves
    // roundoff near h^-2 * eps ~ 1e-12
    CHECK(std::abs(g(0, 0) - Complex(1.0, 0.0)) < 5e-12);
    CHECK(std::abs(g(1, 1) - Complex(2.0, 0.0)) < 5e-12);
    CHECK(std::abs(g(0, 1) - Complex(0.5, 0.0)) < 5e-12);
    CHECK(g(1, 0) == std::conj(g(0, 1)));

    const Eigen::MatrixXcd gr = hartogs::lab::complex_hessian_richardson(f, x, 1e-2);
    CHECK((gr - g).cwiseAbs().maxCoeff() < 1e-11);

    const auto grad = hartogs::lab::real_gradient(f, x, 1e-3);
    // df/dx0 = 2 x0 + x2
    CHECK(grad[0] == doctest::Approx(2.0 * 0.3 + 0.7).epsilon(1e-10));
}

TEST_CASE("base kernel diagonal values") {
    const BaseKernel disc = BaseKernel::ball(1);
    CHECK(disc.name() == "ball:1");
    CHECK(disc.diagonal({Complex(0.0, 0.0)}) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
    // K = 1/pi (1-r^2)^{-2} on the disc
    CHECK(disc.diagonal({Complex(0.5, 0.0)}) ==
          doctest::Approx(1.0 / (kPi * 0.5625)).epsilon(1e-13));
    CHECK(disc.log_diagonal({Complex(0.5, 0.0)}) ==
          doctest::Approx(std::log(1.0 / (kPi * 0.5625))).epsilon(1e-13));

    const BaseKernel b2 = BaseKernel::ball(2);
    CHECK(b2.diagonal(ComplexPoint(2, Complex(0.0, 0.0))) ==
          doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-14));

    const BaseKernel d2 = BaseKernel::polydisc(2);
    CHECK(d2.name() == "polydisc:2");
    CHECK(d2.diagonal(ComplexPoint(2, Complex(0.0, 0.0))) ==
          doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-14));

    CHECK_THROWS_AS(disc.diagonal({Complex(1.0, 0.5)}), std::domain_error);
    CHECK_THROWS_AS(BaseKernel::ball(0), std::invalid_argument);
}

TEST_CASE("base kernel offdiag polarizes the diagonal") {
    const BaseKernel b2 = BaseKernel::ball(2);
    const ComplexPoint z{{0.3, 0.1}, {-0.2, 0.4}};
    CHECK(std::abs(b2.offdiag(z, z) - Complex(b2.diagonal(z), 0.0)) < 1e-13);

    const BaseKernel d2 = BaseKernel::polydisc(2);
    const ComplexPoint w{{0.5, -0.1}, {0.0, 0.3}};
    CHECK(std::abs(d2.offdiag(w, w) - Complex(d2.diagonal(w), 0.0)) < 1e-13);
    // Hermitian in its arguments
    const Complex kzw = d2.offdiag(z, w);
    const Complex kwz = d2.offdiag(w, z);
    CHECK(std::abs(kzw - std::conj(kwz)) < 1e-13);
}

TEST_CASE("base kernel interior and ranges") {
    const BaseKernel disc = BaseKernel::ball(1);
    CHECK(disc.interior({Complex(0.5, 0.0)}, 0.1));
    CHECK_FALSE(disc.interior({Complex(0.95, 0.0)}, 0.1));

    const auto [lo, hi] = disc.diagonal_range({Complex(0.5, 0.0)}, 0.1);
    CHECK(lo <= disc.diagonal({Complex(0.4, 0.0)}));
    CHECK(hi >= disc.diagonal({Complex(0.6, 0.0)}));
    CHECK(std::isinf(disc.diagonal_range({Complex(0.95, 0.0)}, 0.1).second));
}

TEST_CASE("base det ratios") {
    CHECK(BaseKernel::ball(1).det_ratio() == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(BaseKernel::ball(2).det_ratio() ==
          doctest::Approx(9.0 * kPi * kPi / 2.0).epsilon(1e-15));
    CHECK(BaseKernel::ball(3).det_ratio() ==
          doctest::Approx(64.0 * kPi * kPi * kPi / 6.0).epsilon(1e-15));
    CHECK(BaseKernel::polydisc(3).det_ratio() ==
          doctest::Approx(std::pow(2.0 * kPi, 3)).epsilon(1e-15));
}

TEST_CASE("closed_form_base recognizes presets only") {
    REQUIRE(hartogs::lab::closed_form_base(hartogs::ball_spec(3)).has_value());
    CHECK(hartogs::lab::closed_form_base(hartogs::ball_spec(3))->kind() ==
          hartogs::lab::BaseKind::Ball);
    REQUIRE(hartogs::lab::closed_form_base(hartogs::polydisc_spec(2)).has_value());
    CHECK(hartogs::lab::closed_form_base(hartogs::polydisc_spec(2))->dim() == 2);
    // single disc block matches Ball(1) (and Polydisc(1), same domain)
    CHECK(hartogs::lab::closed_form_base(hartogs::polydisc_spec(1)).has_value());

    hartogs::DomainSpec exotic;
    exotic.label = "block(1,1,0)";
    exotic.blocks = {hartogs::BlockData{1, 1, 0}};
    CHECK_FALSE(hartogs::lab::closed_form_base(exotic).has_value());
}

TEST_CASE("hartogs metric at the disc origin") {
    // m = 1, s = 1/2: horizontal block A g_D(0) = (3/2)*2 = 3,
    // fiber block p(0) K(0)^s = 3 pi^{-1/2}, mixed zero.
    const hartogs::lab::HartogsPotential psi(BaseKernel::ball(1),
                                             disc_profile(1, Rational(1, 2)));
    const RealPoint origin(4, 0.0);
    const auto sample = hartogs::lab::metric_fd_richardson(psi, origin);
    CHECK(sample.hermitian_dev == 0.0);
    // Richardson leaves the h^4 term, about 3e-9 at h = 1e-3
    CHECK(std::abs(sample.tensor(0, 0) - Complex(3.0, 0.0)) < 1e-8);
    CHECK(std::abs(sample.tensor(1, 1) - Complex(3.0 / std::sqrt(kPi), 0.0)) < 1e-8);
    CHECK(std::abs(sample.tensor(0, 1)) < 1e-8);
    CHECK(sample.det_value == doctest::Approx(9.0 / std::sqrt(kPi)).epsilon(1e-8));

    // too close to the boundary for the stencil
    RealPoint edge(4, 0.0);
    edge[0] = 0.999999;
    CHECK_THROWS_AS(hartogs::lab::metric_fd(psi, edge), std::domain_error);
}

TEST_CASE("ricci of the base metric is minus the metric") {
    const hartogs::lab::BasePotential psi(BaseKernel::ball(1));
    const RealPoint x{0.3, -0.2};
    const auto r = hartogs::lab::ricci_fd(psi, x);
    CHECK(r.einstein_residual < 1e-4);
}

TEST_CASE("det crosscheck against the closed form") {
    const hartogs::lab::HartogsPotential psi(BaseKernel::ball(1),
                                             disc_profile(1, Rational(1, 4)));
    const hartogs::lab::DetCrosscheck chk(psi);
    CHECK(chk.c4() > 0.0);
    const RealPoint x{0.25, -0.3, 0.2, 0.1};
    CHECK(chk.relative_error(x) < 1e-6);
    CHECK(chk.fd_det(x) == doctest::Approx(chk.formula_det(x)).epsilon(1e-6));
}

TEST_CASE("series oracle: frozen value and input guards") {
    // K(0, 0) for s = 1/2: only (a,b)=(0,0) contributes 1/N_00,
    // N_00 = pi^2 pi^{1/2} B(1, 2) = pi^{5/2}/2
    CHECK(hartogs::lab::series_kernel_disc(Rational(1, 2), 0.0, 0.0) ==
          doctest::Approx(2.0 * std::pow(kPi, -2.5)).epsilon(1e-12));

    CHECK_THROWS_AS(hartogs::lab::series_kernel_disc(Rational(-1, 4), 0.1, 0.1),
                    std::domain_error);
    CHECK_THROWS_AS(hartogs::lab::series_kernel_disc(Rational(1, 2), 0.2, 10.0),
                    std::domain_error);
    CHECK_THROWS_AS(hartogs::lab::series_kernel_disc(Rational(1, 2), 1.2, 0.0),
                    std::invalid_argument);
}

TEST_CASE("series oracle matches the closed form off the origin") {
    for (const Rational& s : {Rational(1, 2), Rational(1, 4)}) {
        const auto profile = disc_profile(1, s);
        const BaseKernel disc = BaseKernel::ball(1);
        for (double r : {0.0, 0.3, 0.55}) {
            const ComplexPoint z{Complex(r, 0.0)};
            const double k = disc.diagonal(z);
            // pick |zeta|^2 so that t = 0.35
            const double zeta2 = 0.35 / std::pow(k, s.to_double());
            const double series = hartogs::lab::series_kernel_disc(s, r * r, zeta2);
            const double formula = hartogs::kernel_value(profile, k, zeta2);
            CHECK(series == doctest::Approx(formula).epsilon(1e-9));
        }
    }
}

TEST_CASE("grids are deterministic and in range") {
    const BaseKernel b2 = BaseKernel::ball(2);
    const auto grid = hartogs::lab::base_grid(b2, 1);
    CHECK(grid.size() == 3);
    CHECK(grid == hartogs::lab::base_grid(b2, 1));
    for (const auto& x : grid) {
        REQUIRE(x.size() == 4);
        double nrm2 = 0.0;
        for (double c : x)
            nrm2 += c * c;
        CHECK(nrm2 <= 0.65 * 0.65 + 1e-12);
    }

    const auto ts = hartogs::lab::grid_t_values(1);
    CHECK(ts.front() == 0.0);
    for (double t : ts)
        CHECK(t <= 0.6 + 1e-12);
    for (double need : {0.0, 0.2, 0.4}) {
        bool found = false;
        for (double t : ts)
            found = found || std::abs(t - need) < 1e-12;
        CHECK(found);
    }
}

TEST_CASE("run_lab on the worked disc case stays within tolerances") {
    const auto spec = hartogs::polydisc_spec(1);
    const auto data = hartogs::structural_data(spec);
    const auto summary =
        hartogs::lab::run_lab(spec, hartogs::make_params(data, 1, Rational(1, 2)), 1);
    CHECK(summary.base_n == 1);
    CHECK(summary.m == 1);
    CHECK_FALSE(summary.rows.empty());
    CHECK(summary.hermitian_dev == 0.0);
    CHECK(summary.det_rel_max < 1e-6);
    CHECK(summary.einstein_residual_max < 1e-3);
    CHECK(summary.zero_offdiag_max < 1e-8);
    CHECK(summary.zero_horizontal_rel < 1e-8);
    CHECK(summary.zero_fiber_rel < 1e-5);
    CHECK(summary.hblock_dev < 1e-7);
    CHECK(summary.base_ratio_spread < 1e-6);
    CHECK(std::abs(summary.base_ratio_value - summary.base_ratio_expected) /
              summary.base_ratio_expected <
          1e-6);
    CHECK(summary.base_ricci_residual_max < 1e-3);
    CHECK(summary.diastasis_dev < 1e-7);
    REQUIRE(summary.oracle_rel_max.has_value());
    CHECK(*summary.oracle_rel_max < 1e-6);

    CHECK_THROWS_AS(hartogs::lab::run_lab(spec, hartogs::make_params(data, 1, Rational(1, 2)), 0),
                    std::invalid_argument);

    hartogs::DomainSpec exotic;
    exotic.label = "block(1,1,0)";
    exotic.blocks = {hartogs::BlockData{1, 1, 0}};
    const auto edata = hartogs::structural_data(exotic);
    CHECK_THROWS_AS(
        hartogs::lab::run_lab(exotic, hartogs::make_params(edata, 1, Rational(1, 8)), 1),
        std::invalid_argument);

    // s = -1/4 on the disc is admissible but P(y) = 3/2 - y vanishes at
    // t = 1/3 inside the probe grid: the lab must refuse, not NaN out.
    CHECK_THROWS_AS(
        hartogs::lab::run_lab(spec, hartogs::make_params(data, 1, Rational(-1, 4)), 1),
        std::domain_error);
    const auto p3 = hartogs::polydisc_spec(3);
    const auto p3data = hartogs::structural_data(p3);
    CHECK_THROWS_AS(
        hartogs::lab::run_lab(p3, hartogs::make_params(p3data, 1, Rational(-1, 4)), 1),
        std::domain_error);
}

TEST_CASE("lab csv shape") {
    CHECK(hartogs::lab::lab_csv_header() ==
          "label,n,m,s,point,t,det_fd,det_formula,det_rel_err,einstein_residual,"
          "kernel_series,kernel_formula");

    const auto spec = hartogs::polydisc_spec(1);
    const auto data = hartogs::structural_data(spec);
    const auto summary =
        hartogs::lab::run_lab(spec, hartogs::make_params(data, 1, Rational(1, 4)), 1);
    const std::string csv = hartogs::lab::lab_csv(summary);

    // one header plus one line per row
    std::size_t lines = 0;
    for (char c : csv)
        lines += c == '\n';
    CHECK(lines == summary.rows.size() + 1);
    CHECK(csv.rfind(hartogs::lab::lab_csv_header(), 0) == 0);
    CHECK(hartogs::lab::lab_csv_rows(summary).size() + hartogs::lab::lab_csv_header().size() + 1 ==
          csv.size());

    // the point column is quoted; 11 unquoted commas per data row
    const std::string row = csv.substr(csv.find('\n') + 1,
                                       csv.find('\n', csv.find('\n') + 1) - csv.find('\n') - 1);
    bool quoted = false;
    int commas = 0;
    for (char c : row) {
        if (c == '"')
            quoted = !quoted;
        else if (c == ',' && !quoted)
            ++commas;
    }
    CHECK(commas == 11);
}
