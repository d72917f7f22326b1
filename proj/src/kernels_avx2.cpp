#include "qdomain/kernels.hpp"

#include <immintrin.h>

namespace qdomain::kernels {

// Two complex numbers per register, stored as (re, im, re, im).
cdouble cdot_avx2(const cdouble* a, const cdouble* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d same = _mm256_setzero_pd();   // ar*br, ai*bi
    __m256d cross = _mm256_setzero_pd();  // ar*bi, ai*br
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        const __m256d vbs = _mm256_permute_pd(vb, 0b0101);
        same = _mm256_fmadd_pd(va, vb, same);
        cross = _mm256_fmadd_pd(va, vbs, cross);
    }
    alignas(32) double s[4], c[4];
    _mm256_store_pd(s, same);
    _mm256_store_pd(c, cross);
    double re = s[0] + s[1] + s[2] + s[3];
    double im = (c[0] - c[1]) + (c[2] - c[3]);
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

}  // namespace qdomain::kernels
