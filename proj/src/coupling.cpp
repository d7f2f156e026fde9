#include "wgqed/coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace wgqed {

QubitArray QubitArray::equally_spaced(int count, double k0d) {
    if (count < 1) throw std::invalid_argument("qubit count must be >= 1");
    QubitArray a;
    for (int n = 0; n < count; ++n) a.positions.push_back(n * k0d);
    return a;
}

CouplingMatrices coupling_matrices(const QubitArray& array, const SystemParams& params) {
    const auto n = static_cast<Eigen::Index>(array.positions.size());
    if (n < 1) throw std::invalid_argument("qubit array must contain at least one qubit");
    for (double x : array.positions)
        if (!std::isfinite(x)) throw std::invalid_argument("qubit positions must be finite");

    const double g = params.gamma();
    CouplingMatrices cm{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        cm.gamma(i, i) = g;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double phase = std::abs(array.positions[i] - array.positions[j]);
            cm.gamma(i, j) = cm.gamma(j, i) = g * std::cos(phase);
            cm.alpha(i, j) = cm.alpha(j, i) = -0.5 * g * std::sin(phase);
        }
    }
    return cm;
}

}  // namespace wgqed
