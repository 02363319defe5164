#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "springerlab/simd/kernels.hpp"

namespace springerlab::simd {

#if !defined(SPRINGERLAB_HAVE_AVX2)
const KernelTable* avx2_kernels() { return nullptr; }
#endif
#if !defined(SPRINGERLAB_HAVE_NEON)
const KernelTable* neon_kernels() { return nullptr; }
#endif

namespace {

const KernelTable* lookup(Backend b) {
  switch (b) {
    case Backend::Scalar: return &scalar_kernels();
    case Backend::Avx2: return avx2_kernels();
    case Backend::Neon: return neon_kernels();
  }
  return nullptr;
}

const KernelTable* initial() {
  if (const char* env = std::getenv("SPRINGERLAB_SIMD")) {
    std::string s(env);
    if (s == "scalar") return &scalar_kernels();
    if (s == "avx2" && avx2_kernels()) return avx2_kernels();
    if (s == "neon" && neon_kernels()) return neon_kernels();
  }
  if (auto* t = avx2_kernels()) return t;
  if (auto* t = neon_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> t{initial()};
  return t;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void select(Backend backend) {
  const KernelTable* t = lookup(backend);
  if (!t) throw std::invalid_argument(std::string("SIMD backend unavailable: ") + backend_name(backend));
  current().store(t, std::memory_order_relaxed);
}

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

}  // namespace springerlab::simd
