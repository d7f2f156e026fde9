#pragma once

#include <algorithm>
#include <cmath>

// |a - b| scaled by max(|b|, floor); floor keeps the check absolute near zeros.
inline double rel_err(double a, double b, double floor = 1e-12) {
    return std::abs(a - b) / std::max(std::abs(b), floor);
}
