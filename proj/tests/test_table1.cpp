#include "doctest.h"
#include "springerlab/errors.hpp"
#include "golden.hpp"

using namespace springerlab;

TEST_SUITE("table1") {
  TEST_CASE("golden records for B, C, D with n <= 4 and ell in {3,5,7}") {
    auto g = golden::load_table1();
    CHECK(g["records"].size() == 72);
    auto bad = golden::compare_table1(g);
    for (const auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
  }

  TEST_CASE("B3 at ell = 3 drops D^((1,1,1),())") { CHECK(golden::caveat_holds(golden::load_table1())); }

  TEST_CASE("C3 at ell = 5 has three records") {
    auto rows = table1_rows(LieType::C, 3, 5);
    CHECK(rows.size() == 3);
    for (const auto& r : rows) CHECK(r.dichotomy_case == 1);
  }

  TEST_CASE("lambda column equals the small coweights") {
    for (auto [t, n] : std::vector<std::pair<LieType, int>>{{LieType::B, 2}, {LieType::B, 3}, {LieType::B, 4}, {LieType::B, 5},
                                                            {LieType::C, 4}, {LieType::D, 4}, {LieType::D, 5}, {LieType::D, 6}}) {
      auto small = enumerate_small(build_root_system(t, n));
      if (t != LieType::D) small.erase(small.begin());
      std::vector<IVec> got;
      for (const auto& r : table1_rows(t, n, 0)) got.push_back(r.lambda);
      CAPTURE(type_name(t) + std::to_string(n));
      CHECK(got == small);
    }
  }

  TEST_CASE("misprinted B row is reported") {
    bool seen = false;
    for (const auto& r : table1_rows(LieType::B, 4, 5))
      for (const auto& n : r.notes) seen = seen || n.find("0^{2n-j}") != std::string::npos;
    CHECK(seen);
  }

  TEST_CASE("property: filtered labels are the l-regular pre-filter labels") {
    for (auto t : {LieType::B, LieType::C, LieType::D})
      for (int n = t == LieType::D ? 4 : 2; n <= 6; ++n)
        for (std::uint32_t ell : {3u, 5u, 7u}) {
          for (const auto& r : table1_rows(t, n, ell)) {
            std::vector<std::string> expect;
            for (const auto& s : r.sources)
              if (is_regular(s.a, ell) && is_regular(s.b, ell)) expect.push_back(modular_label_text(s));
            CHECK(expect == r.labels);
            CHECK(r.dichotomy_case == static_cast<int>(r.sources.size()));
            CHECK_FALSE(r.citations.empty());
          }
        }
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(table1_rows(LieType::B, 3, 2), Unsupported);
    CHECK_THROWS_AS(table1_rows(LieType::B, 3, 9), MalformedInput);
    CHECK_THROWS_AS(table1_rows(LieType::D, 3, 3), Unsupported);
    CHECK_THROWS_AS(table1_rows(LieType::A, 3, 3), Unsupported);
  }

  TEST_CASE("type A zero weight formula") {
    auto z = zero_weight_typeA({1, 0, -1}, 0);
    CHECK(z.lambda_hat == Partition{2, 1});
    CHECK(z.label_text() == "D^(2,1)");
    CHECK(zero_weight_typeA({2, -1, -1}, 2).label_text() == "0");
    CHECK(zero_weight_typeA({2, -1, -1}, 3).label_text() == "0");
    CHECK(zero_weight_typeA({2, -1, -1}, 5).label_text() == "D^(1,1,1)");
    CHECK(zero_weight_typeA({1, 1, -2}, 3).dual_family);
    CHECK_THROWS_AS(zero_weight_typeA({2, 0, -2}, 3), MalformedInput);
  }

  TEST_CASE("exceptional data") {
    CHECK(g2_recorded_zero_weight_dim(3) == 1);
    CHECK(g2_recorded_zero_weight_dim(5) == 2);
    CHECK(g2_recorded_zero_weight_dim(7) == 2);
    bool e6 = false;
    for (const auto& n : exceptional_notes()) e6 = e6 || (n.group == "E6" && n.zero_weight_dims.count(3) && n.zero_weight_dims.at(3) == 0);
    CHECK(e6);
  }
}
