#pragma once

// Inner loop of the double-time quadrature: sum_j w[j] w[j+k] Tr[rho_j Y].
//
// Layout: every 4x4 complex matrix is a block of 32 doubles, the 16 real parts
// (row-major) followed by the 16 imaginary parts. `y` holds the transpose of Y so
// the trace becomes an element-wise product.

#include <complex>
#include <cstddef>
#include <string_view>

namespace wgqed::kernels {

inline constexpr std::size_t kBlock = 32;

using TraceSumFn = std::complex<double> (*)(const double* rho, const double* y, const double* w, std::size_t k,
                                            std::size_t count);

std::complex<double> weighted_trace_sum_scalar(const double* rho, const double* y, const double* w, std::size_t k,
                                               std::size_t count);

#if defined(WGQED_BUILD_AVX2)
std::complex<double> weighted_trace_sum_avx2(const double* rho, const double* y, const double* w, std::size_t k,
                                             std::size_t count);
#endif

enum class Isa { Scalar, Avx2 };

bool avx2_available();

// Best ISA supported by both the build and the CPU, unless WGQED_SIMD=scalar is set.
Isa active_isa();
std::string_view to_string(Isa isa);
TraceSumFn trace_sum(Isa isa);

}  // namespace wgqed::kernels
