#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/oracle.hpp"
#include "springerlab/small_zero.hpp"

using namespace springerlab;

TEST_SUITE("oracle") {
  TEST_CASE("natural modules pass their own validation") {
    for (auto [t, r, d] : std::vector<std::tuple<LieType, int, int>>{{LieType::A, 1, 2}, {LieType::A, 3, 4}, {LieType::B, 2, 4},
                                                                     {LieType::B, 3, 6}, {LieType::C, 2, 5}, {LieType::C, 3, 7},
                                                                     {LieType::D, 4, 8}, {LieType::G2, 2, 7}}) {
      NaturalModule m = natural_module(t, r);
      CHECK(m.dim == d);
      CHECK(m.weights.size() == static_cast<std::size_t>(d));
    }
  }

  TEST_CASE("SL_3 small coweights at every small prime") {
    for (const IVec& lambda : enumerate_small(build_root_system(LieType::A, 2)))
      for (std::uint32_t ell : {2u, 3u, 5u}) {
        auto r = run_oracle(LieType::A, 2, lambda, ell);
        CAPTURE(to_string(lambda));
        CAPTURE(ell);
        CHECK(r.simple_certified);
        REQUIRE(r.agrees_with_formula.has_value());
        CHECK(*r.agrees_with_formula);
        auto z = zero_weight_typeA(lambda, ell);
        std::size_t expected_dim = r.factors.empty() ? 0 : static_cast<std::size_t>(r.factors[0].dim);
        CHECK(r.dim_zero_weight == (z.label ? expected_dim : 0));
        CHECK(r.ambient_dim <= 256);
      }
  }

  TEST_CASE("adjoint of SL_3 at ell = 3 loses its centre") {
    auto r = run_oracle(LieType::A, 2, {1, 0, -1}, 3);
    CHECK(r.dim_weyl_surrogate == 8);
    CHECK(r.dim_simple == 7);
    CHECK(r.dim_zero_weight == 1);
    auto r5 = run_oracle(LieType::A, 2, {1, 0, -1}, 5);
    CHECK(r5.dim_simple == 8);
    CHECK(r5.dim_zero_weight == 2);
  }

  TEST_CASE("SO_5 zero weight spaces") {
    for (std::uint32_t ell : {3u, 5u}) {
      auto a = run_oracle(LieType::C, 2, {1, 0}, ell);
      CHECK(a.dim_simple == 5);
      CHECK(a.dim_zero_weight == 1);
      REQUIRE(a.factors.size() == 1);
      CHECK(a.factors[0].label == "D^((),(2))");
      auto b = run_oracle(LieType::C, 2, {1, 1}, ell);
      CHECK(b.dim_zero_weight == 2);
      REQUIRE(b.factors.size() == 1);
      CHECK(b.factors[0].label == "D^((1),(1))");
      CHECK(b.agrees_with_formula.value_or(false));
    }
  }

  TEST_CASE("ell = 2 in type B is a finding without a formula") {
    auto r = run_oracle(LieType::B, 2, {1, 1}, 2);
    CHECK_FALSE(r.agrees_with_formula.has_value());
    CHECK(r.simple_certified);
  }

  TEST_CASE("limits") {
    CHECK_THROWS_AS(run_oracle(LieType::A, 3, {2, 0, -1, -1}, 3, 42, 10), Unsupported);
    CHECK_THROWS_AS(run_oracle(LieType::A, 2, {2, 0, -2}, 3), MalformedInput);
  }
}
