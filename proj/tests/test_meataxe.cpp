#include <set>

#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/decomposition.hpp"
#include "springerlab/meataxe.hpp"
#include "springerlab/ordinary.hpp"

using namespace springerlab;

namespace {

FpRep specht_mod(int n, const Partition& p, std::uint32_t ell) {
  auto w = weyl_group(LieType::A, n - 1);
  IrrLabel l;
  l.type = LieType::A;
  l.rank = n - 1;
  l.a = p;
  return reduce_mod(ordinary_matrices(*w, l), ell);
}

/// All invariant lines of a 2-dimensional module, by enumeration.
std::vector<std::vector<std::uint32_t>> invariant_lines(const FpRep& m) {
  std::vector<std::vector<std::uint32_t>> lines;
  const std::uint32_t p = m.field.p;
  std::vector<std::vector<std::uint32_t>> reps = {{0, 1}};
  for (std::uint32_t a = 0; a < p; ++a) reps.push_back({1, a});
  for (const auto& v : reps) {
    bool ok = true;
    for (const auto& g : m.gens) {
      auto u = g.apply(v);
      // u parallel to v
      std::uint64_t det = (std::uint64_t(u[0]) * v[1] + std::uint64_t(p - u[1] % p) * v[0]) % p;
      ok = ok && det == 0;
    }
    if (ok) lines.push_back(v);
  }
  return lines;
}

}  // namespace

TEST_SUITE("meataxe") {
  TEST_CASE("composition factors of the S3 permutation module over F_3") {
    PrimeField f(3);
    auto w = weyl_group(LieType::A, 2);
    FpRep m{f, 3, {Matrix<PrimeField>::from_ints(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                   Matrix<PrimeField>::from_ints(f, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})}, w->name()};
    auto fs = comp_factors(m, 42);
    REQUIRE(fs.size() == 2);
    long total = 0;
    std::multiset<std::uint32_t> traces;
    for (const auto& x : fs) {
      CHECK(x.module.dim == 1);
      total += x.multiplicity;
      traces.insert(x.module.gens[0](0, 0));
    }
    CHECK(total == 3);
    CHECK(traces == std::multiset<std::uint32_t>{1, 2});
    for (const auto& x : fs) CHECK(x.multiplicity == (x.module.gens[0](0, 0) == 1 ? 2 : 1));
  }

  TEST_CASE("S^(2,1) mod 3: brute-force invariant lines agree with the meataxe") {
    FpRep s = specht_mod(3, {2, 1}, 3);
    auto lines = invariant_lines(s);
    CHECK(lines.size() == 1);
    CHECK_FALSE(is_irreducible(s));
    auto fs = comp_factors(s);
    REQUIRE(fs.size() == 2);
    // sub and quotient are the trivial and sign characters
    std::set<std::uint32_t> t;
    for (const auto& x : fs) t.insert(x.module.gens[0](0, 0));
    CHECK(t == std::set<std::uint32_t>{1, 2});
    CHECK(is_irreducible(specht_mod(3, {2, 1}, 2)));
    CHECK(invariant_lines(specht_mod(3, {2, 1}, 2)).empty());
  }

  TEST_CASE("property: factors account for the dimension, endomorphisms of simples are scalars") {
    for (std::uint32_t ell : {2u, 3u}) {
      for (const auto& p : partitions(4)) {
        FpRep s = specht_mod(4, p, ell);
        long total = 0;
        for (const auto& x : comp_factors(s, 1337)) {
          total += x.module.dim * x.multiplicity;
          CHECK(is_irreducible(x.module, 1));
          CHECK(hom_space(x.module, x.module).size() == 1);
        }
        CHECK(total == s.dim);
      }
    }
  }

  TEST_CASE("S3 at ell = 3") {
    auto d = decomposition_matrix(*weyl_group(LieType::A, 2), 3, 42);
    CHECK(d->row_labels() == std::vector<std::string>{"S^(3)", "S^(2,1)", "S^(1,1,1)"});
    CHECK(d->col_labels() == std::vector<std::string>{"D^(3)", "D^(2,1)"});
    CHECK(d->entries == std::vector<std::vector<long>>{{1, 0}, {1, 1}, {0, 1}});
  }

  TEST_CASE("S4 at ell = 2 and 3") {
    auto w = weyl_group(LieType::A, 3);
    auto d2 = decomposition_matrix(*w, 2, 42);
    CHECK(d2->col_labels() == std::vector<std::string>{"D^(4)", "D^(3,1)"});
    CHECK(d2->entries == std::vector<std::vector<long>>{{1, 0}, {1, 1}, {0, 1}, {1, 1}, {1, 0}});
    auto d3 = decomposition_matrix(*w, 3, 42);
    CHECK(d3->col_labels() == std::vector<std::string>{"D^(4)", "D^(3,1)", "D^(2,2)", "D^(2,1,1)"});
    CHECK(d3->entries ==
          std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  }

  TEST_CASE("property: Brauer identity, unitriangularity, seed independence") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{{LieType::A, 2}, {LieType::A, 3}, {LieType::B, 2}, {LieType::G2, 2}}) {
      auto w = weyl_group(t, r);
      for (std::uint32_t ell : {2u, 3u, 5u}) {
        CAPTURE(w->name());
        CAPTURE(ell);
        auto a = decomposition_matrix(*w, ell, 1);
        auto b = decomposition_matrix(*w, ell, 1337);
        CHECK(brauer_identity_holds(*a));
        if (uses_head_labels(t, ell)) CHECK(is_unitriangular(*a));
        CHECK(a->entries == b->entries);
        CHECK(a->col_labels() == b->col_labels());
        CHECK(is_identity(*a) == (w->order() % ell != 0));
      }
    }
  }

  TEST_CASE("identify_simple recognises every column") {
    auto d = decomposition_matrix(*weyl_group(LieType::B, 2), 3, 42);
    for (std::size_t c = 0; c < d->cols.size(); ++c) {
      auto k = identify_simple(*d, d->cols[c].module);
      REQUIRE(k);
      CHECK(*k == static_cast<int>(c));
    }
  }
}
