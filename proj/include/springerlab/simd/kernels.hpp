#pragma once

// Inner loops of F_p linear algebra. Every backend must agree bit-for-bit
// with the scalar reference.

#include <cstddef>
#include <cstdint>

namespace springerlab::simd {

using Residue = std::uint32_t;

enum class Backend { Scalar, Avx2, Neon };

/// Vector paths are used only below this modulus, where a*b+c is exact in a
/// float lane. Larger moduli drop to the scalar loop inside the same call.
inline constexpr Residue kVectorModulusLimit = 2048;

struct KernelTable {
  Backend backend;
  const char* name;
  /// dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(Residue* dst, const Residue* src, Residue c, std::size_t n, Residue p);
  /// dst[i] = (c * dst[i]) mod p
  void (*scale)(Residue* dst, Residue c, std::size_t n, Residue p);
  /// sum_i a[i] * b[i] mod p
  Residue (*dot)(const Residue* a, const Residue* b, std::size_t n, Residue p);
};

const KernelTable& scalar_kernels();

/// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best available backend, overridable with SPRINGERLAB_SIMD=scalar|avx2|neon.
const KernelTable& active();

/// Throws std::invalid_argument if the backend is unavailable.
void select(Backend backend);

const char* backend_name(Backend backend);

}  // namespace springerlab::simd
