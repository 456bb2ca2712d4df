#include "hartogs/lab/base_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hartogs/rational.hpp"

namespace hartogs::lab {

namespace {

constexpr double kPi = std::numbers::pi;

double norm_sq(const ComplexPoint& z) {
    double acc = 0.0;
    for (const auto& zi : z)
        acc += std::norm(zi);
    return acc;
}

double ball_log_k(unsigned n, double nsq) {
    return std::lgamma(n + 1.0) - n * std::log(kPi) - (n + 1.0) * std::log1p(-nsq);
}

} // namespace

BaseKernel BaseKernel::ball(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("BaseKernel: ball dimension must be positive");
    return BaseKernel(BaseKind::Ball, n);
}

BaseKernel BaseKernel::polydisc(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("BaseKernel: polydisc dimension must be positive");
    return BaseKernel(BaseKind::Polydisc, n);
}

std::string BaseKernel::name() const {
    return (kind_ == BaseKind::Ball ? "ball:" : "polydisc:") + std::to_string(n_);
}

bool BaseKernel::interior(const ComplexPoint& z, double coord_slack) const {
    if (z.size() != n_)
        throw std::invalid_argument("BaseKernel: point dimension mismatch");
    constexpr double headroom = 1e-9;
    if (kind_ == BaseKind::Ball) {
        // ||z + dz|| <= ||z|| + slack*sqrt(n) when |dz_i| <= slack.
        const double r = std::sqrt(norm_sq(z));
        return r + coord_slack * std::sqrt(static_cast<double>(n_)) < 1.0 - headroom;
    }
    for (const auto& zi : z)
        if (std::abs(zi) + coord_slack >= 1.0 - headroom)
            return false;
    return true;
}

double BaseKernel::diagonal(const ComplexPoint& z) const {
    if (!interior(z))
        throw std::domain_error("BaseKernel: point outside the domain");
    return std::exp(log_diagonal(z));
}

double BaseKernel::log_diagonal(const ComplexPoint& z) const {
    if (!interior(z))
        throw std::domain_error("BaseKernel: point outside the domain");
    if (kind_ == BaseKind::Ball)
        return ball_log_k(n_, norm_sq(z));
    double acc = 0.0;
    for (const auto& zi : z)
        acc += -std::log(kPi) - 2.0 * std::log1p(-std::norm(zi));
    return acc;
}

std::pair<double, double> BaseKernel::diagonal_range(const ComplexPoint& z,
                                                     double coord_slack) const {
    if (z.size() != n_)
        throw std::invalid_argument("BaseKernel: point dimension mismatch");
    const double inf = std::numeric_limits<double>::infinity();
    if (kind_ == BaseKind::Ball) {
        const double r = std::sqrt(norm_sq(z));
        const double dr = coord_slack * std::sqrt(static_cast<double>(n_));
        const double r_lo = std::max(r - dr, 0.0);
        const double r_hi = r + dr;
        const double lo = std::exp(ball_log_k(n_, r_lo * r_lo));
        const double hi = r_hi < 1.0 ? std::exp(ball_log_k(n_, r_hi * r_hi)) : inf;
        return {lo, hi};
    }
    double log_lo = 0.0, log_hi = 0.0;
    bool unbounded = false;
    for (const auto& zi : z) {
        const double a = std::abs(zi);
        const double a_lo = std::max(a - coord_slack, 0.0);
        const double a_hi = a + coord_slack;
        log_lo += -std::log(kPi) - 2.0 * std::log1p(-a_lo * a_lo);
        if (a_hi >= 1.0)
            unbounded = true;
        else
            log_hi += -std::log(kPi) - 2.0 * std::log1p(-a_hi * a_hi);
    }
    return {std::exp(log_lo), unbounded ? inf : std::exp(log_hi)};
}

Complex BaseKernel::offdiag(const ComplexPoint& z, const ComplexPoint& w) const {
    if (z.size() != n_ || w.size() != n_)
        throw std::invalid_argument("BaseKernel: point dimension mismatch");
    if (kind_ == BaseKind::Ball) {
        Complex ip(0.0, 0.0);
        for (unsigned i = 0; i < n_; ++i)
            ip += z[i] * std::conj(w[i]);
        const Complex base = Complex(1.0, 0.0) - ip;
        const double fac = factorial(n_).get_d() / std::pow(kPi, static_cast<double>(n_));
        return fac * std::pow(base, -static_cast<double>(n_ + 1));
    }
    Complex acc(1.0, 0.0);
    for (unsigned i = 0; i < n_; ++i) {
        const Complex u = Complex(1.0, 0.0) - z[i] * std::conj(w[i]);
        acc /= kPi * u * u;
    }
    return acc;
}

std::pair<double, double> BaseKernel::offdiag_abs_range(const ComplexPoint& z,
                                                        const ComplexPoint& w,
                                                        double coord_slack) const {
    if (z.size() != n_ || w.size() != n_)
        throw std::invalid_argument("BaseKernel: point dimension mismatch");
    if (kind_ == BaseKind::Ball) {
        // |<z', w>| <= (||z|| + slack sqrt(n)) ||w|| =: u < 1, so
        // |1 - <z', w>| lies in [1-u, 1+u].
        const double u = (std::sqrt(norm_sq(z)) + coord_slack * std::sqrt(static_cast<double>(n_))) *
                         std::sqrt(norm_sq(w));
        if (u >= 1.0)
            throw std::domain_error("BaseKernel: off-diagonal bound leaves the domain");
        const double fac = factorial(n_).get_d() / std::pow(kPi, static_cast<double>(n_));
        const double e = n_ + 1.0;
        return {fac * std::pow(1.0 + u, -e), fac * std::pow(1.0 - u, -e)};
    }
    double lo = 1.0, hi = 1.0;
    for (unsigned i = 0; i < n_; ++i) {
        const double u = (std::abs(z[i]) + coord_slack) * std::abs(w[i]);
        if (u >= 1.0)
            throw std::domain_error("BaseKernel: off-diagonal bound leaves the domain");
        lo /= kPi * (1.0 + u) * (1.0 + u);
        hi /= kPi * (1.0 - u) * (1.0 - u);
    }
    return {lo, hi};
}

double BaseKernel::det_ratio() const {
    if (kind_ == BaseKind::Ball)
        return std::pow(n_ + 1.0, static_cast<double>(n_)) *
               std::pow(kPi, static_cast<double>(n_)) / factorial(n_).get_d();
    return std::pow(2.0 * kPi, static_cast<double>(n_));
}

std::optional<BaseKernel> closed_form_base(const DomainSpec& spec) {
    if (spec.blocks.empty())
        return std::nullopt;
    if (spec.rank() == 1) {
        const BlockData& blk = spec.blocks.front();
        if (blk.q == 0 && blk.b == 0)
            return BaseKernel::ball(blk.size());
    }
    for (const auto& blk : spec.blocks)
        if (blk.p != 0 || blk.q != 0 || blk.b != 0)
            return std::nullopt;
    return BaseKernel::polydisc(spec.rank());
}

} // namespace hartogs::lab
