#include "wgqed/expsum.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wgqed::expsum {

double phi1(double x) { return x == 0.0 ? 1.0 : std::expm1(x) / x; }

cplx expm1(cplx z) {
    const double x = z.real(), y = z.imag();
    const double s = std::sin(0.5 * y);
    // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

cplx phi1(cplx z) { return z == cplx{} ? cplx{1.0} : expm1(z) / z; }

cplx conv(std::initializer_list<cplx> rates, double t) {
    const auto n = static_cast<int>(rates.size());
    if (n < 1 || n > 4) throw std::invalid_argument("expsum::conv supports 1 to 4 rates");
    const cplx* r = rates.begin();
    if (n == 1) return std::exp(-r[0] * t);
    if (t == 0.0) return 0.0;
    if (n == 2) {
        // t e^{-bt} phi((b - a) t), with b the slower rate so nothing overflows
        cplx a = r[0], b = r[1];
        if (b.real() > a.real()) std::swap(a, b);
        return t * std::exp(-b * t) * phi1((b - a) * t);
    }
    // Divided difference of exp over the nodes x_i = -r_i t, read off the
    // matrix exponential of a bidiagonal matrix. The superdiagonal carries a
    // balancing factor so the node and coupling scales match.
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(r[i] * t));
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        B(i, i) = -r[i] * t;
        if (i + 1 < n) B(i, i + 1) = scale;
    }
    const Eigen::MatrixXcd F = B.exp();
    return std::pow(t / scale, n - 1) * F(0, n - 1);
}

}  // namespace wgqed::expsum
