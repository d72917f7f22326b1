#include "qdomain/kernels.hpp"

#include <atomic>

namespace qdomain::kernels {

cdouble cdot_scalar(const cdouble* a, const cdouble* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

bool avx2_supported() {
#if defined(QDOMAIN_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

namespace {

std::atomic<int> g_isa{-1};

Isa detect() { return avx2_supported() ? Isa::Avx2 : Isa::Scalar; }

}  // namespace

Isa active_isa() {
    int v = g_isa.load(std::memory_order_relaxed);
    if (v < 0) {
        v = static_cast<int>(detect());
        g_isa.store(v, std::memory_order_relaxed);
    }
    return static_cast<Isa>(v);
}

void force_isa(Isa isa) {
    if (isa == Isa::Avx2 && !avx2_supported()) isa = Isa::Scalar;
    g_isa.store(static_cast<int>(isa), std::memory_order_relaxed);
}

cdouble cdot(const cdouble* a, const cdouble* b, std::size_t n) {
#if defined(QDOMAIN_BUILD_AVX2)
    if (active_isa() == Isa::Avx2) return cdot_avx2(a, b, n);
#endif
    return cdot_scalar(a, b, n);
}

}  // namespace qdomain::kernels
