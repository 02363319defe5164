#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/characters.hpp"

using namespace springerlab;

namespace {

const std::vector<std::pair<LieType, int>> kAll = {
    {LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3}, {LieType::A, 4}, {LieType::A, 5}, {LieType::B, 2},
    {LieType::B, 3}, {LieType::B, 4}, {LieType::C, 2}, {LieType::C, 3}, {LieType::D, 4}, {LieType::D, 5},
    {LieType::G2, 2}};

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("S4 values by Murnaghan-Nakayama") {
    const std::vector<Partition> cycles = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    const std::vector<std::pair<Partition, std::vector<int>>> rows = {
        {{4}, {1, 1, 1, 1, 1}},
        {{3, 1}, {3, 1, -1, 0, -1}},
        {{2, 2}, {2, 0, 2, -1, 0}},
        {{2, 1, 1}, {3, -1, -1, 0, 1}},
        {{1, 1, 1, 1}, {1, -1, 1, 1, -1}},
    };
    for (const auto& [lambda, values] : rows)
      for (std::size_t c = 0; c < cycles.size(); ++c) CHECK(sn_character(lambda, cycles[c]) == values[c]);
  }

  TEST_CASE("hyperoctahedral values in rank 2") {
    // chi^((1),(1)) is the reflection representation of the dihedral group of order 8
    CHECK(bn_character({{1}, {1}}, {1, 1}, {}) == 2);
    CHECK(bn_character({{1}, {1}}, {}, {1, 1}) == -2);
    CHECK(bn_character({{1}, {1}}, {2}, {}) == 0);
    CHECK(bn_character({{}, {2}}, {}, {1, 1}) == 1);
    CHECK(bn_character({{}, {2}}, {1}, {1}) == -1);
  }

  TEST_CASE("property: orthonormal rows and degree sum") {
    for (auto [t, r] : kAll) {
      auto table = character_table(t, r);
      const WeylGroup& w = table->group();
      CAPTURE(w.name());
      CHECK(table->size() == static_cast<std::size_t>(w.num_classes()));
      mpq_class squares = 0;
      for (std::size_t i = 0; i < table->size(); ++i) {
        const auto& chi = table->rows()[i];
        CHECK(chi.values[w.class_of(w.identity())] == label_dimension(table->labels()[i]));
        squares += chi.values[w.class_of(w.identity())] * chi.values[w.class_of(w.identity())];
        for (std::size_t j = i; j < table->size(); ++j)
          CHECK(inner_product(w, chi, table->rows()[j]) == (i == j ? 1 : 0));
      }
      CHECK(squares == w.order());
    }
  }

  TEST_CASE("property: tensor_sign_label closed form equals the pointwise product") {
    for (auto [t, r] : kAll) {
      auto table = character_table(t, r);
      ClassFunction eps = sign_character(table->group());
      for (const auto& l : table->labels()) {
        CAPTURE(to_string(l));
        CHECK(table->character(tensor_sign_label(l)) == table->character(l) * eps);
      }
    }
  }

  TEST_CASE("sign and trivial labels") {
    auto t = character_table(LieType::A, 3);
    IrrLabel triv = parse_irr_label(LieType::A, 3, "S^(4)");
    CHECK(t->character(triv) == trivial_character(t->group()));
    CHECK(t->character(tensor_sign_label(triv)) == sign_character(t->group()));
    auto g = character_table(LieType::G2, 2);
    long dims = 0;
    for (const auto& l : g->labels()) dims += label_dimension(l);
    CHECK(dims == 8);
  }

  TEST_CASE("decompose the regular character") {
    auto t = character_table(LieType::B, 3);
    auto m = decompose(*t, regular_character(t->group()));
    for (const auto& [label, mult] : m) CHECK(mult == label_dimension(label));
    ClassFunction half = regular_character(t->group());
    for (auto& v : half.values) v /= 2;
    half.values[0] += mpq_class(1, 3);
    CHECK_THROWS_AS(decompose(*t, half), MalformedInput);
  }

  TEST_CASE("label round trip") {
    for (auto [t, r] : kAll)
      for (const auto& l : all_irr_labels(t, r)) CHECK(parse_irr_label(t, r, to_string(l)) == l);
  }
}
