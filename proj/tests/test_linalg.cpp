#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/linalg.hpp"
#include "springerlab/rng.hpp"

using namespace springerlab;

namespace {

template <class F>
Matrix<F> random_matrix(F f, std::size_t r, std::size_t c, Rng& rng, long range) {
  Matrix<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(static_cast<long>(rng.below(2 * range + 1)) - range);
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank and kernel of a fixed rational matrix") {
    Rationals q;
    auto m = Matrix<Rationals>::from_ints(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    // (1,1,-1) up to scale
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][2] == -k[0][0]);
    CHECK(determinant(m) == 0);
  }

  TEST_CASE("rank drops mod p") {
    auto rows = std::vector<std::vector<long>>{{1, 1}, {1, 4}};
    CHECK(rank(Matrix<Rationals>::from_ints(Rationals{}, rows)) == 2);
    CHECK(rank(Matrix<PrimeField>::from_ints(PrimeField(3), rows)) == 1);
    CHECK(rank(Matrix<PrimeField>::from_ints(PrimeField(5), rows)) == 2);
  }

  TEST_CASE("determinant of a Vandermonde matrix") {
    Rationals q;
    auto m = Matrix<Rationals>::from_ints(q, {{1, 1, 1}, {1, 2, 4}, {1, 3, 9}});
    CHECK(determinant(m) == 2);
    PrimeField f(7);
    CHECK(determinant(Matrix<PrimeField>::from_ints(f, {{1, 1, 1}, {1, 2, 4}, {1, 3, 9}})) == 2);
  }

  TEST_CASE("property: rank + nullity = columns, A * kernel = 0") {
    Rng rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
      PrimeField f(p);
      for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
        auto m = random_matrix(f, r, c, rng, 3);
        auto g = gauss(m);
        CHECK(g.rank + g.kernel_basis.size() == c);
        for (const auto& v : g.kernel_basis) {
          auto z = m.apply(v);
          for (auto x : z) CHECK(x == 0u);
        }
      }
    }
  }

  TEST_CASE("property: inverse over Q and F_p") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng.below(5);
      auto m = random_matrix(Rationals{}, n, n, rng, 4);
      auto inv = inverse(m);
      CHECK(inv.has_value() == (determinant(m) != 0));
      if (inv) CHECK(*inv * m == Matrix<Rationals>::identity(Rationals{}, n));
      PrimeField f(13);
      auto mp = random_matrix(f, n, n, rng, 6);
      auto ip = inverse(mp);
      CHECK(ip.has_value() == (determinant(mp) != 0u));
      if (ip) CHECK(mp * *ip == Matrix<PrimeField>::identity(f, n));
    }
  }

  TEST_CASE("subspace bases are canonical") {
    PrimeField f(5);
    Subspace<PrimeField> a(f, 3), b(f, 3);
    a.insert({1, 2, 3});
    a.insert({0, 1, 1});
    b.insert({1, 3, 4});
    b.insert({2, 4, 1});
    CHECK(a == b);
    CHECK(a.contains({1, 4, 0}));
    CHECK_FALSE(a.contains({0, 0, 1}));
    auto c = a.coordinates({1, 3, 4});
    REQUIRE(c);
    CHECK(a.combine(*c) == std::vector<std::uint32_t>{1, 3, 4});
  }

  TEST_CASE("spin closes under the operators") {
    PrimeField f(2);
    auto shift = Matrix<PrimeField>::from_ints(f, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto s = spin(f, 3, {{1, 0, 0}}, std::vector<Matrix<PrimeField>>{shift});
    CHECK(s.dim() == 3);
    auto t = spin(f, 3, {{1, 1, 1}}, std::vector<Matrix<PrimeField>>{shift});
    CHECK(t.dim() == 1);
  }

  TEST_CASE("mixed fields are rejected") {
    auto a = Matrix<PrimeField>::identity(PrimeField(3), 2);
    auto b = Matrix<PrimeField>::identity(PrimeField(5), 2);
    CHECK_THROWS_AS(a * b, MalformedInput);
    CHECK_THROWS_AS(PrimeField(4), MalformedInput);
  }
}
