#include "hartogs/lab/finite_diff.hpp"

#include <complex>
#include <stdexcept>

namespace hartogs::lab {

namespace {

double shifted(const Potential& f, RealPoint x, unsigned i, double di) {
    x[i] += di;
    return f.value(x);
}

double shifted2(const Potential& f, RealPoint x, unsigned i, double di, unsigned j, double dj) {
    x[i] += di;
    x[j] += dj;
    return f.value(x);
}

} // namespace

std::vector<double> real_gradient(const Potential& f, const RealPoint& x, double h) {
    const unsigned d = f.real_dim();
    if (x.size() != d)
        throw std::invalid_argument("real_gradient: point dimension mismatch");
    std::vector<double> grad(d);
    for (unsigned i = 0; i < d; ++i)
        grad[i] = (shifted(f, x, i, h) - shifted(f, x, i, -h)) / (2.0 * h);
    return grad;
}

Eigen::MatrixXd real_hessian(const Potential& f, const RealPoint& x, double h) {
    const unsigned d = f.real_dim();
    if (x.size() != d)
        throw std::invalid_argument("real_hessian: point dimension mismatch");
    Eigen::MatrixXd hess(d, d);
    const double f0 = f.value(x);
    const double h2 = h * h;
    for (unsigned i = 0; i < d; ++i) {
        hess(i, i) = (shifted(f, x, i, h) - 2.0 * f0 + shifted(f, x, i, -h)) / h2;
        for (unsigned j = i + 1; j < d; ++j) {
            const double v = (shifted2(f, x, i, h, j, h) - shifted2(f, x, i, h, j, -h) -
                              shifted2(f, x, i, -h, j, h) + shifted2(f, x, i, -h, j, -h)) /
                             (4.0 * h2);
            hess(i, j) = v;
            hess(j, i) = v;
        }
    }
    return hess;
}

Eigen::MatrixXcd complex_hessian(const Potential& f, const RealPoint& x, double h) {
    const unsigned d = f.real_dim();
    if (d % 2 != 0)
        throw std::logic_error("complex_hessian: odd real dimension");
    const Eigen::MatrixXd hess = real_hessian(f, x, h);
    const unsigned cd = d / 2;
    Eigen::MatrixXcd g(cd, cd);
    for (unsigned a = 0; a < cd; ++a) {
        g(a, a) = std::complex<double>(
            0.25 * (hess(2 * a, 2 * a) + hess(2 * a + 1, 2 * a + 1)), 0.0);
        for (unsigned b = a + 1; b < cd; ++b) {
            const std::complex<double> v(
                0.25 * (hess(2 * a, 2 * b) + hess(2 * a + 1, 2 * b + 1)),
                0.25 * (hess(2 * a, 2 * b + 1) - hess(2 * a + 1, 2 * b)));
            g(a, b) = v;
            g(b, a) = std::conj(v);
        }
    }
    return g;
}

Eigen::MatrixXcd complex_hessian_richardson(const Potential& f, const RealPoint& x, double h) {
    const Eigen::MatrixXcd coarse = complex_hessian(f, x, h);
    const Eigen::MatrixXcd fine = complex_hessian(f, x, h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

} // namespace hartogs::lab
