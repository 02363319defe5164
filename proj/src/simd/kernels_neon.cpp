#include <arm_neon.h>

#include "springerlab/simd/kernels.hpp"

namespace springerlab::simd {
namespace {

inline uint32x4_t reduce_lanes(uint32x4_t x, float32x4_t inv_p, uint32x4_t vp) {
  float32x4_t xf = vcvtq_f32_u32(x);
  int32x4_t q = vcvtq_s32_f32(vmulq_f32(xf, inv_p));
  int32x4_t r = vsubq_s32(vreinterpretq_s32_u32(x), vmulq_s32(q, vreinterpretq_s32_u32(vp)));
  uint32x4_t neg = vcltq_s32(r, vdupq_n_s32(0));
  r = vaddq_s32(r, vreinterpretq_s32_u32(vandq_u32(neg, vp)));
  uint32x4_t ur = vreinterpretq_u32_s32(r);
  uint32x4_t ge = vcgeq_u32(ur, vp);
  return vsubq_u32(ur, vandq_u32(ge, vp));
}

void axpy_neon(Residue* dst, const Residue* src, Residue c, std::size_t n, Residue p) {
  if (c == 0) return;
  std::size_t i = 0;
  if (p < kVectorModulusLimit) {
    const float32x4_t inv_p = vdupq_n_f32(1.0f / static_cast<float>(p));
    const uint32x4_t vp = vdupq_n_u32(p);
    for (; i + 4 <= n; i += 4) {
      uint32x4_t x = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), c);
      vst1q_u32(dst + i, reduce_lanes(x, inv_p, vp));
    }
  }
  scalar_kernels().axpy(dst + i, src + i, c, n - i, p);
}

void scale_neon(Residue* dst, Residue c, std::size_t n, Residue p) {
  std::size_t i = 0;
  if (p < kVectorModulusLimit) {
    const float32x4_t inv_p = vdupq_n_f32(1.0f / static_cast<float>(p));
    const uint32x4_t vp = vdupq_n_u32(p);
    for (; i + 4 <= n; i += 4) vst1q_u32(dst + i, reduce_lanes(vmulq_n_u32(vld1q_u32(dst + i), c), inv_p, vp));
  }
  scalar_kernels().scale(dst + i, c, n - i, p);
}

Residue dot_neon(const Residue* a, const Residue* b, std::size_t n, Residue p) {
  std::size_t i = 0;
  std::uint64_t acc = 0;
  if (p < kVectorModulusLimit) {
    uint64x2_t sum = vdupq_n_u64(0);
    for (; i + 4 <= n; i += 4) {
      uint32x4_t prod = vmulq_u32(vld1q_u32(a + i), vld1q_u32(b + i));
      sum = vpadalq_u32(sum, prod);
    }
    acc = (vgetq_lane_u64(sum, 0) % p + vgetq_lane_u64(sum, 1) % p) % p;
  }
  acc = (acc + scalar_kernels().dot(a + i, b + i, n - i, p)) % p;
  return static_cast<Residue>(acc);
}

const KernelTable kTable{Backend::Neon, "neon", axpy_neon, scale_neon, dot_neon};

}  // namespace

const KernelTable* neon_kernels() { return &kTable; }

}  // namespace springerlab::simd
