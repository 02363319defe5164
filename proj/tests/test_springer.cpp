#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/springer.hpp"

using namespace springerlab;

TEST_SUITE("springer") {
  TEST_CASE("nilpotent orbit counts") {
    CHECK(nilpotent_orbits(LieType::A, 3).size() == 5);
    CHECK(nilpotent_orbits(LieType::B, 2).size() == 4);
    CHECK(nilpotent_orbits(LieType::C, 2).size() == 4);
    CHECK(nilpotent_orbits(LieType::B, 3).size() == 7);
    CHECK(nilpotent_orbits(LieType::C, 3).size() == 8);
    CHECK(nilpotent_orbits(LieType::D, 4).size() == 12);
    for (const auto& o : nilpotent_orbits(LieType::D, 4)) CHECK(is_valid_orbit(o));
    CHECK_FALSE(is_valid_orbit({LieType::C, 2, {3, 1}, 0}));
    CHECK_FALSE(is_valid_orbit({LieType::D, 4, {4, 4}, 0}));
  }

  TEST_CASE("property: ordinary conventions differ by the sign twist") {
    for (int n = 2; n <= 6; ++n)
      for (const auto& mu : partitions(n)) {
        CHECK(rho_ordinary_typeA(mu) == tensor_sign_label(phi_ordinary_typeA(mu)));
        CHECK(phi_ordinary_typeA(mu).a == transpose(mu));
      }
  }

  TEST_CASE("modular images") {
    CHECK(phi_modular_typeA({1, 1, 1}, 3).text() == "D^(3)");
    CHECK(phi_modular_typeA({3}, 3).text() == "not-in-image");
    CHECK(phi_modular_typeA({3}, 5).text() == "D^(1,1,1)");
    CHECK(rho_modular_typeA({3}, 2).text() == "not-in-image");
    CHECK(rho_modular_typeA({1, 1, 1}, 2).in_image);
  }

  TEST_CASE("property: image sizes equal the number of l-regular partitions") {
    for (int n = 2; n <= 5; ++n)
      for (std::uint32_t ell : {2u, 3u, 5u}) {
        std::size_t regular = 0, phi = 0, rho = 0;
        for (const auto& mu : partitions(n)) {
          regular += is_regular(mu, ell);
          phi += phi_modular_typeA(mu, ell).in_image;
          rho += rho_modular_typeA(mu, ell).in_image;
          CHECK(rho_modular_typeA(mu, ell).in_image == is_restricted(mu, ell));
        }
        CHECK(phi == regular);
        CHECK(rho == regular);
      }
  }

  TEST_CASE("sign twist for type A, n <= 5") {
    for (int rank = 1; rank <= 4; ++rank)
      for (std::uint32_t ell : {0u, 2u, 3u, 5u}) {
        CAPTURE(rank);
        CAPTURE(ell);
        CHECK(sign_twist_theorem_check(LieType::A, rank, ell));
      }
  }

  TEST_CASE("sign twist on the classical table entries in characteristic 0") {
    CHECK(sign_twist_theorem_check(LieType::B, 3, 0));
    CHECK(sign_twist_theorem_check(LieType::C, 3, 0));
    CHECK(sign_twist_theorem_check(LieType::D, 4, 0));
  }

  TEST_CASE("correspondence tables") {
    auto a = correspondence(LieType::A, 3, Convention::Phi, 2);
    CHECK(a.size() == 5);
    std::size_t in = 0;
    for (const auto& e : a) {
      CHECK(e.orbit.has_value());
      in += e.irr.in_image;
    }
    CHECK(in == 2);
    auto c = correspondence(LieType::C, 3, Convention::Phi, 5);
    CHECK(c.size() == 3);
    for (const auto& e : c) CHECK(e.table_driven);
    CHECK_THROWS_AS(correspondence(LieType::B, 3, Convention::Rho, 3), Unsupported);
    CHECK_THROWS_AS(parse_convention("psi"), MalformedInput);
  }
}
