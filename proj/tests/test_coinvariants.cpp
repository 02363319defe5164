#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/coinvariants.hpp"

using namespace springerlab;

namespace {

/// Coefficients of prod (1 + q + ... + q^{d-1}) for the given degrees.
std::vector<std::size_t> q_product(const std::vector<int>& degrees) {
  std::vector<std::size_t> p{1};
  for (int d : degrees) {
    std::vector<std::size_t> r(p.size() + d - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int k = 0; k < d; ++k) r[i + k] += p[i];
    p = r;
  }
  return p;
}

}  // namespace

TEST_SUITE("coinvariants") {
  TEST_CASE("fixed Poincare polynomials") {
    CHECK(q_product({2, 3}) == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(expected_graded_dims(*weyl_group(LieType::A, 2)) == q_product({2, 3}));
    CHECK(expected_graded_dims(*weyl_group(LieType::B, 2)) == q_product({2, 4}));
    CHECK(expected_graded_dims(*weyl_group(LieType::G2, 2)) == q_product({2, 6}));
    CHECK(expected_graded_dims(*weyl_group(LieType::B, 3)) == q_product({2, 4, 6}));
    CHECK(expected_graded_dims(*weyl_group(LieType::D, 4)) == q_product({2, 4, 4, 6}));
  }

  TEST_CASE("graded dimensions over Q and F_p") {
    for (auto [t, r] : std::vector<std::pair<LieType, int>>{{LieType::A, 2}, {LieType::B, 2}, {LieType::C, 3}, {LieType::G2, 2}}) {
      auto w = weyl_group(t, r);
      auto expected = expected_graded_dims(*w);
      CHECK(coinvariant_algebra(*w, Rationals{}).graded_dims() == expected);
      for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CAPTURE(w->name());
        CAPTURE(p);
        auto m = coinvariant_algebra(*w, PrimeField(p));
        CHECK(m.graded_dims() == expected);
        CHECK(m.top_degree == w->roots().num_positive());
        CHECK(poincare_sign_check(m));
      }
    }
  }

  TEST_CASE("characters in coprime characteristic") {
    auto w = weyl_group(LieType::A, 3);
    auto q = coinvariant_algebra(*w, Rationals{});
    auto chars = graded_character(q);
    REQUIRE(chars.size() == 7);
    CHECK(chars.front() == trivial_character(*w));
    CHECK(chars.back() == sign_character(*w));
    // degree 1 is the reflection representation S^(3,1)
    auto t = character_table(*w);
    CHECK(chars[1] == t->character(parse_irr_label(LieType::A, 3, "S^(3,1)")));
    auto f = coinvariant_algebra(*w, PrimeField(5));
    CHECK(graded_character(f) == chars);
    CHECK(is_faithful(f));
    CHECK_THROWS_AS(graded_character(coinvariant_algebra(*w, PrimeField(3))), Unsupported);
  }

  TEST_CASE("faithfulness fails for A1 over F_2") {
    auto w = weyl_group(LieType::A, 1);
    CHECK_FALSE(is_faithful(coinvariant_algebra(*w, PrimeField(2))));
    CHECK(is_faithful(coinvariant_algebra(*w, PrimeField(3))));
    CHECK(poincare_sign_check(coinvariant_algebra(*w, PrimeField(2))));
  }

  TEST_CASE("property: pairing with a rescaled top class") {
    auto w = weyl_group(LieType::B, 2);
    auto m = coinvariant_algebra(*w, PrimeField(7));
    for (std::uint32_t c = 1; c < 7; ++c) CHECK(poincare_sign_check_scaled(m, c));
    auto q = coinvariant_algebra(*w, Rationals{});
    CHECK(poincare_sign_check_scaled(q, mpq_class(-3, 2)));
    for (int d = 0; d <= q.top_degree; ++d) {
      auto p = pairing_matrix(q, d);
      CHECK(p.matrix.rows() == q.pieces[d].dim());
      CHECK(p.matrix.cols() == q.pieces[q.top_degree - d].dim());
    }
  }

  TEST_CASE("generator actions satisfy the Weyl relations") {
    auto w = weyl_group(LieType::G2, 2);
    auto m = coinvariant_algebra(*w, PrimeField(3));
    for (const auto& piece : m.pieces) CHECK(satisfies_weyl_relations(piece.action, *w));
  }
}
