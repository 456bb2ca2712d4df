#pragma once

#include <vector>

#include <Eigen/Dense>

namespace hartogs::lab {

using RealPoint = std::vector<double>;

/// Real scalar field on an open subset of R^d. interior(x, rho) must be
/// conservative: when it returns true, value() is defined on the whole
/// closed L-infinity box of radius rho around x.
class Potential {
public:
    virtual ~Potential() = default;
    virtual unsigned real_dim() const = 0;
    virtual double value(const RealPoint& x) const = 0;
    virtual bool interior(const RealPoint& x, double rho) const = 0;
};

/// Central-difference gradient at step h.
std::vector<double> real_gradient(const Potential& f, const RealPoint& x, double h);

/// All second partials at step h: (f(x+he_i) - 2f(x) + f(x-he_i))/h^2 on
/// the diagonal, the symmetric four-point cross stencil off it. Each
/// unordered pair is evaluated once, so the result is exactly symmetric.
Eigen::MatrixXd real_hessian(const Potential& f, const RealPoint& x, double h);

/// Mixed complex Hessian d^2 f / dz_a dconj(z_b) for z_a = x_{2a} + i x_{2a+1}:
///   g_{ab} = (H_{2a,2b} + H_{2a+1,2b+1} + i (H_{2a,2b+1} - H_{2a+1,2b})) / 4.
/// Requires even real_dim(). Hermitian by construction, not by tolerance:
/// the lower triangle is the conjugate of the upper, and the diagonal is
/// real because H is exactly symmetric.
Eigen::MatrixXcd complex_hessian(const Potential& f, const RealPoint& x, double h);

/// Richardson step (4 C(h/2) - C(h)) / 3; cancels the O(h^2) term.
Eigen::MatrixXcd complex_hessian_richardson(const Potential& f, const RealPoint& x, double h);

} // namespace hartogs::lab
