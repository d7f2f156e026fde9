#pragma once

// Cancellation-free building blocks for sums of exponentials.
// Every closed form in the library reduces to convolutions of decaying
// exponentials; evaluating them through divided differences keeps full
// precision when two rates coincide (the k0d = n*pi points).

#include "wgqed/core.hpp"

#include <initializer_list>

namespace wgqed::expsum {

// (e^x - 1)/x, equal to 1 at x = 0.
double phi1(double x);
cplx expm1(cplx z);
cplx phi1(cplx z);

// (e^{-r_1 s} * ... * e^{-r_n s})(t): n-fold convolution, n = 1..4.
// Equivalently the inverse Laplace transform of 1/prod(p + r_i) at t.
// Rates must have Re(r) >= 0.
cplx conv(std::initializer_list<cplx> rates, double t);

}  // namespace wgqed::expsum
