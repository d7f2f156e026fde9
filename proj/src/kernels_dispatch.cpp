#include "wgqed/kernels.hpp"

#include <cstdlib>
#include <string>

namespace wgqed::kernels {

bool avx2_available() {
#if defined(WGQED_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active_isa() {
    static const Isa isa = [] {
        const char* env = std::getenv("WGQED_SIMD");
        if (env && std::string(env) == "scalar") return Isa::Scalar;
        return avx2_available() ? Isa::Avx2 : Isa::Scalar;
    }();
    return isa;
}

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

TraceSumFn trace_sum(Isa isa) {
#if defined(WGQED_BUILD_AVX2)
    if (isa == Isa::Avx2 && avx2_available()) return &weighted_trace_sum_avx2;
#endif
    (void)isa;
    return &weighted_trace_sum_scalar;
}

}  // namespace wgqed::kernels
