#include <algorithm>

#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/partition.hpp"
#include "springerlab/rng.hpp"
#include "springerlab/root_system.hpp"
#include "springerlab/weyl_group.hpp"

using namespace springerlab;

namespace {

struct Expected {
  LieType type;
  int rank;
  long order;
  int positive;
  int classes;
};

const Expected kGroups[] = {
    {LieType::A, 1, 2, 1, 2},    {LieType::A, 2, 6, 3, 3},    {LieType::A, 3, 24, 6, 5},
    {LieType::A, 4, 120, 10, 7}, {LieType::B, 2, 8, 4, 5},    {LieType::B, 3, 48, 9, 10},
    {LieType::C, 3, 48, 9, 10},  {LieType::B, 4, 384, 16, 20}, {LieType::D, 4, 192, 12, 13},
    {LieType::G2, 2, 12, 6, 6},
};

long count_partitions(int n) { return static_cast<long>(partitions(n).size()); }

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("orders, positive roots and class counts") {
    for (const auto& e : kGroups) {
      auto w = weyl_group(e.type, e.rank);
      CAPTURE(w->name());
      CHECK(w->order() == e.order);
      CHECK(w->roots().num_positive() == e.positive);
      CHECK(w->num_classes() == e.classes);
      long total = 0;
      for (const auto& c : w->classes()) total += c.size();
      CHECK(total == e.order);
    }
  }

  TEST_CASE("Coxeter relations hold for the simple reflections") {
    for (const auto& e : kGroups) {
      auto w = weyl_group(e.type, e.rank);
      const auto& rs = w->roots();
      for (int i = 0; i < e.rank; ++i) {
        int si = w->generator(i);
        CHECK(w->multiply(si, si) == w->identity());
        for (int j = i + 1; j < e.rank; ++j) {
          long a = rs.pairing(rs.simple_root(i), rs.simple_coroot(j)) * rs.pairing(rs.simple_root(j), rs.simple_coroot(i));
          int m = a == 0 ? 2 : a == 1 ? 3 : a == 2 ? 4 : 6;
          int p = w->multiply(si, w->generator(j));
          int acc = w->identity();
          for (int k = 0; k < m; ++k) {
            CHECK((acc != w->identity() || k == 0));
            acc = w->multiply(acc, p);
          }
          CHECK(acc == w->identity());
        }
      }
    }
  }

  TEST_CASE("property: multiplication is associative and inverses work") {
    Rng rng(3);
    auto w = weyl_group(LieType::B, 3);
    for (int t = 0; t < 200; ++t) {
      int a = static_cast<int>(rng.below(w->order()));
      int b = static_cast<int>(rng.below(w->order()));
      int c = static_cast<int>(rng.below(w->order()));
      CHECK(w->multiply(w->multiply(a, b), c) == w->multiply(a, w->multiply(b, c)));
      CHECK(w->multiply(a, w->inverse(a)) == w->identity());
      CHECK(w->element(w->multiply(a, b)).sign() == w->element(a).sign() * w->element(b).sign());
    }
  }

  TEST_CASE("reflections preserve the root system") {
    for (const auto& e : kGroups) {
      RootSystem rs = build_root_system(e.type, e.rank);
      std::vector<IVec> coroots = rs.coroots;
      std::sort(coroots.begin(), coroots.end());
      for (int i = 0; i < e.rank; ++i) {
        std::vector<IVec> image;
        for (const auto& c : rs.coroots) image.push_back(rs.reflect(i, c));
        std::sort(image.begin(), image.end());
        CHECK(image == coroots);
      }
    }
  }

  TEST_CASE("type A small count: 2 p(n) - floor(n/2) - 1") {
    for (int n = 2; n <= 6; ++n) {
      RootSystem rs = build_root_system(LieType::A, n - 1);
      auto small = enumerate_small(rs);
      CAPTURE(n);
      CHECK(static_cast<long>(small.size()) == 2 * count_partitions(n) - n / 2 - 1);
      for (const auto& l : small) CHECK((l.front() <= 1 || l.back() >= -1));
    }
  }

  TEST_CASE("frozen small coweight lists") {
    CHECK(enumerate_small(build_root_system(LieType::A, 2)) ==
          std::vector<IVec>{{0, 0, 0}, {1, 0, -1}, {1, 1, -2}, {2, -1, -1}});
    CHECK(enumerate_small(build_root_system(LieType::B, 2)) == std::vector<IVec>{{0, 0}, {1, 1}, {2, 0}});
    CHECK(enumerate_small(build_root_system(LieType::B, 3)) ==
          std::vector<IVec>{{0, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 1, 1}});
    CHECK(enumerate_small(build_root_system(LieType::C, 3)) ==
          std::vector<IVec>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
    CHECK(enumerate_small(build_root_system(LieType::G2, 2)) == std::vector<IVec>{{0, 0}, {1, 2}, {2, 3}});
    CHECK(enumerate_small(build_root_system(LieType::D, 4)).size() == 6);
  }

  TEST_CASE("property: smallness is closed downward in dominance order") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{{LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3}, {LieType::D, 4}}) {
      RootSystem rs = build_root_system(t, r);
      auto small = enumerate_small(rs);
      auto wide = enumerate_small(rs, small_search_bound(rs) + 1);
      CHECK(wide == small);
      for (const auto& lam : small)
        for (const auto& mu : small)
          if (leq_dominance(rs, mu, lam)) CHECK(is_small(rs, mu));
    }
  }

  TEST_CASE("non-small and non-dominant input") {
    RootSystem rs = build_root_system(LieType::A, 2);
    CHECK_FALSE(is_small(rs, {2, 0, -2}));
    CHECK_FALSE(is_dominant(rs, {0, 1, -1}));
    CHECK_THROWS_AS(build_root_system(LieType::D, 2), Unsupported);
    CHECK_THROWS_AS(parse_ivec("1,x"), MalformedInput);
  }
}
