#pragma once

#include <complex>
#include <cstddef>

namespace qdomain::kernels {

using cdouble = std::complex<double>;

enum class Isa { Scalar, Avx2 };

// Conjugated dot product sum_i conj(a_i) * b_i, i.e. the Hilbert-Schmidt
// inner product of two vectorized matrices.
cdouble cdot(const cdouble* a, const cdouble* b, std::size_t n);

cdouble cdot_scalar(const cdouble* a, const cdouble* b, std::size_t n);
#if defined(QDOMAIN_BUILD_AVX2)
cdouble cdot_avx2(const cdouble* a, const cdouble* b, std::size_t n);
#endif

bool avx2_supported();
Isa active_isa();
// Testing hook; requests for an unsupported ISA fall back to scalar.
void force_isa(Isa isa);

}  // namespace qdomain::kernels
