#include "wgqed/kernels.hpp"

namespace wgqed::kernels {

std::complex<double> weighted_trace_sum_scalar(const double* rho, const double* y, const double* w, std::size_t k,
                                               std::size_t count) {
    const double* yr = y;
    const double* yi = y + 16;
    double acc_r = 0.0, acc_i = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        const double* rr = rho + j * kBlock;
        const double* ri = rr + 16;
        double tr = 0.0, ti = 0.0;
        for (int e = 0; e < 16; ++e) {
            tr += rr[e] * yr[e] - ri[e] * yi[e];
            ti += rr[e] * yi[e] + ri[e] * yr[e];
        }
        const double wj = w[j] * w[j + k];
        acc_r += wj * tr;
        acc_i += wj * ti;
    }
    return {acc_r, acc_i};
}

}  // namespace wgqed::kernels
