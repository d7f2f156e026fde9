#pragma once

#include "wgqed/core.hpp"

#include <vector>

namespace wgqed {

// Qubit coordinates along the waveguide in units of 1/k0, so k0 |x_n - x_m| is a phase.
struct QubitArray {
    std::vector<double> positions;

    static QubitArray equally_spaced(int count, double k0d);
};

// Both matrices in units of Omega; gamma has Gamma on the diagonal, alpha has zeros there.
struct CouplingMatrices {
    Eigen::MatrixXd gamma;
    Eigen::MatrixXd alpha;
};

// Throws std::invalid_argument for an empty array or non-finite positions.
CouplingMatrices coupling_matrices(const QubitArray& array, const SystemParams& params);

}  // namespace wgqed
