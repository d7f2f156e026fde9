#pragma once

#include "wgqed/oracle.hpp"

#include <string>
#include <vector>

namespace wgqed::app {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

const std::vector<std::string>& suite_names();  // ode, quadrature, conservation, all

// Closed forms against the oracles. Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, double gamma_ratio,
                                   const QuadratureConfig& quadrature = {});

}  // namespace wgqed::app
