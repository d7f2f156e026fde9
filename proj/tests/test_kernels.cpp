#include "doctest.h"

#include "wgqed/kernels.hpp"

#include <complex>
#include <cstdlib>
#include <random>
#include <string_view>
#include <vector>

using namespace wgqed::kernels;

namespace {

struct Data {
    std::vector<double> rho, y, w;
};

Data make_data(std::size_t count, std::size_t k, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Data d;
    d.rho.resize(count * kBlock);
    d.y.resize(kBlock);
    d.w.resize(count + k);
    for (auto& x : d.rho) x = u(rng);
    for (auto& x : d.y) x = u(rng);
    for (auto& x : d.w) x = 0.5 + 0.5 * u(rng);
    return d;
}

std::complex<double> naive(const Data& d, std::size_t k, std::size_t count) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        std::complex<double> tr = 0.0;
        for (int e = 0; e < 16; ++e)
            tr += std::complex<double>(d.rho[j * kBlock + e], d.rho[j * kBlock + 16 + e]) *
                  std::complex<double>(d.y[e], d.y[16 + e]);
        acc += d.w[j] * d.w[j + k] * tr;
    }
    return acc;
}

double rel(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("scalar kernel matches a direct complex evaluation") {
    for (std::size_t count : {1u, 2u, 7u, 64u, 1001u})
        for (std::size_t k : {0u, 1u, 5u}) {
            const auto d = make_data(count, k, 17 + count + 3 * k);
            CHECK(rel(weighted_trace_sum_scalar(d.rho.data(), d.y.data(), d.w.data(), k, count), naive(d, k, count)) <
                  1e-12);
        }
    const auto d = make_data(4, 0, 3);
    CHECK(weighted_trace_sum_scalar(d.rho.data(), d.y.data(), d.w.data(), 0, 0) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("AVX2 kernel agrees with the scalar reference") {
    if (!avx2_available()) {
        MESSAGE("AVX2 with FMA not available on this build or CPU; equivalence check skipped");
        return;
    }
    const TraceSumFn fast = trace_sum(Isa::Avx2);
    std::mt19937 pick(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t count = 1 + pick() % 700;
        const std::size_t k = pick() % 40;
        const auto d = make_data(count, k, 1000 + trial);
        const auto ref = weighted_trace_sum_scalar(d.rho.data(), d.y.data(), d.w.data(), k, count);
        const auto got = fast(d.rho.data(), d.y.data(), d.w.data(), k, count);
        INFO("count=", count, " k=", k);
        CHECK(rel(got, ref) < 1e-12);
    }
    const auto d = make_data(4, 0, 3);
    CHECK(fast(d.rho.data(), d.y.data(), d.w.data(), 0, 0) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("dispatch") {
    CHECK(trace_sum(Isa::Scalar) == &weighted_trace_sum_scalar);
    CHECK(to_string(Isa::Scalar) == "scalar");
    CHECK(to_string(Isa::Avx2) == "avx2");
    if (avx2_available())
        CHECK(active_isa() == (std::getenv("WGQED_SIMD") && std::string_view(std::getenv("WGQED_SIMD")) == "scalar"
                                   ? Isa::Scalar
                                   : Isa::Avx2));
    else
        CHECK(active_isa() == Isa::Scalar);
}
