#include <vector>

#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/rng.hpp"
#include "springerlab/simd/kernels.hpp"

using namespace springerlab;
using springerlab::simd::Residue;

namespace {

std::vector<Residue> random_residues(Rng& rng, std::size_t n, Residue p) {
  std::vector<Residue> v(n);
  for (auto& x : v) x = static_cast<Residue>(rng.below(p));
  return v;
}

void compare(const simd::KernelTable& k) {
  const auto& ref = simd::scalar_kernels();
  Rng rng(2024);
  for (Residue p : {2u, 3u, 5u, 7u, 251u, 2039u, 2053u, 65521u, 2147483647u}) {
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u, 1023u}) {
      auto a = random_residues(rng, n, p);
      auto b = random_residues(rng, n, p);
      Residue c = static_cast<Residue>(rng.below(p));
      auto x = a, y = a;
      ref.axpy(x.data(), b.data(), c, n, p);
      k.axpy(y.data(), b.data(), c, n, p);
      CHECK(x == y);
      x = a;
      y = a;
      ref.scale(x.data(), c, n, p);
      k.scale(y.data(), c, n, p);
      CHECK(x == y);
      CHECK(ref.dot(a.data(), b.data(), n, p) == k.dot(a.data(), b.data(), n, p));
    }
  }
}

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("scalar kernels against a direct loop") {
    const auto& k = simd::scalar_kernels();
    std::vector<Residue> d{1, 2, 3, 4}, s{4, 3, 2, 1};
    k.axpy(d.data(), s.data(), 2, 4, 5);
    CHECK(d == std::vector<Residue>{4, 3, 2, 1});
    CHECK(k.dot(d.data(), s.data(), 4, 5) == (16 + 9 + 4 + 1) % 5);
  }

  TEST_CASE("avx2 kernels equal scalar") {
    const auto* k = simd::avx2_kernels();
    if (!k) {
      MESSAGE("avx2 backend unavailable on this machine");
      return;
    }
    compare(*k);
  }

  TEST_CASE("neon kernels equal scalar") {
    const auto* k = simd::neon_kernels();
    if (!k) {
      MESSAGE("neon backend unavailable on this machine");
      return;
    }
    compare(*k);
  }

  TEST_CASE("backend selection") {
    const auto before = simd::active().backend;
    simd::select(simd::Backend::Scalar);
    CHECK(simd::active().backend == simd::Backend::Scalar);
    if (simd::avx2_kernels()) {
      simd::select(simd::Backend::Avx2);
      CHECK(simd::active().backend == simd::Backend::Avx2);
    } else {
      CHECK_THROWS(simd::select(simd::Backend::Avx2));
    }
    simd::select(before);
  }
}
