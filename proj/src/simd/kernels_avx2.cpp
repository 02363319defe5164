#include <immintrin.h>

#include "springerlab/simd/kernels.hpp"

namespace springerlab::simd {
namespace {

// x in [0, 2p^2): q = floor(x * (1/p)) is off by at most one, fix with +-p.
inline __m256i reduce_lanes(__m256i x, __m256 inv_p, __m256i vp) {
  __m256 xf = _mm256_cvtepi32_ps(x);
  __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(xf, inv_p));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
  __m256i ge = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vp, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(ge, vp));
}

void axpy_avx2(Residue* dst, const Residue* src, Residue c, std::size_t n, Residue p) {
  if (c == 0) return;
  std::size_t i = 0;
  if (p < kVectorModulusLimit) {
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    for (; i + 8 <= n; i += 8) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_lanes(x, inv_p, vp));
    }
  }
  scalar_kernels().axpy(dst + i, src + i, c, n - i, p);
}

void scale_avx2(Residue* dst, Residue c, std::size_t n, Residue p) {
  std::size_t i = 0;
  if (p < kVectorModulusLimit) {
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    for (; i + 8 <= n; i += 8) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      __m256i x = _mm256_mullo_epi32(d, vc);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_lanes(x, inv_p, vp));
    }
  }
  scalar_kernels().scale(dst + i, c, n - i, p);
}

Residue dot_avx2(const Residue* a, const Residue* b, std::size_t n, Residue p) {
  std::size_t i = 0;
  std::uint64_t acc = 0;
  if (p < kVectorModulusLimit) {
    // Products are < 2^22; 64-bit lanes absorb 2^40 of them.
    __m256i sum_lo = _mm256_setzero_si256();
    __m256i sum_hi = _mm256_setzero_si256();
    for (; i + 8 <= n; i += 8) {
      __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      __m256i prod = _mm256_mullo_epi32(va, vb);
      sum_lo = _mm256_add_epi64(sum_lo, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(prod)));
      sum_hi = _mm256_add_epi64(sum_hi, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(prod, 1)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(sum_lo, sum_hi));
    for (std::uint64_t v : lanes) acc = (acc + v % p) % p;
  }
  acc = (acc + scalar_kernels().dot(a + i, b + i, n - i, p)) % p;
  return static_cast<Residue>(acc);
}

const KernelTable kTable{Backend::Avx2, "avx2", axpy_avx2, scale_avx2, dot_avx2};

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &kTable : nullptr;
}

}  // namespace springerlab::simd
