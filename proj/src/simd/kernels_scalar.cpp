#include "springerlab/simd/kernels.hpp"

namespace springerlab::simd {
namespace {

void axpy_scalar(Residue* dst, const Residue* src, Residue c, std::size_t n, Residue p) {
  if (c == 0) return;
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<Residue>((dst[i] + cc * src[i]) % p);
}

void scale_scalar(Residue* dst, Residue c, std::size_t n, Residue p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<Residue>((cc * dst[i]) % p);
}

Residue dot_scalar(const Residue* a, const Residue* b, std::size_t n, Residue p) {
  // p < 2^32 so each product is < 2^64; reduce every step to stay exact.
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = (acc + std::uint64_t(a[i]) * b[i]) % p;
  return static_cast<Residue>(acc);
}

const KernelTable kTable{Backend::Scalar, "scalar", axpy_scalar, scale_scalar, dot_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kTable; }

}  // namespace springerlab::simd
