#include "springerlab/springer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "springerlab/characters.hpp"
#include "springerlab/decomposition.hpp"
#include "springerlab/errors.hpp"
#include "springerlab/field.hpp"
#include "springerlab/ordinary.hpp"
#include "springerlab/small_zero.hpp"

namespace springerlab {

namespace {

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

IrrLabel a_label(const Partition& p) {
  IrrLabel l;
  l.type = LieType::A;
  l.rank = size(p) - 1;
  l.a = p;
  return l;
}

void check_partition(const Partition& mu) {
  if (!is_partition(mu) || size(mu) < 2) throw MalformedInput("expected a partition of n >= 2: " + to_string(mu));
}

void check_ell(std::uint32_t ell) {
  if (!is_prime(ell)) throw MalformedInput("ell must be a prime: " + std::to_string(ell));
}

}  // namespace

std::string to_string(const OrbitLabel& o) {
  std::string s = "O_" + to_string(o.partition);
  if (o.decoration > 0) s += "^I";
  if (o.decoration < 0) s += "^II";
  return s;
}

int orbit_partition_size(LieType type, int rank) {
  switch (type) {
    case LieType::A: return rank + 1;
    case LieType::B: return 2 * rank + 1;
    case LieType::C:
    case LieType::D: return 2 * rank;
    default: throw Unsupported("orbit partitions are defined for classical types");
  }
}

bool is_valid_orbit(const OrbitLabel& o) {
  if (!is_partition(o.partition) || size(o.partition) != orbit_partition_size(o.type, o.rank)) return false;
  auto m = multiplicities(o.partition);
  bool very_even = o.type == LieType::D;
  for (auto [part, mult] : m) {
    bool even_part = part % 2 == 0;
    switch (o.type) {
      case LieType::A: break;
      case LieType::B:
      case LieType::D:
        if (even_part && mult % 2) return false;
        break;
      case LieType::C:
        if (!even_part && mult % 2) return false;
        break;
      default: return false;
    }
    if (!even_part) very_even = false;
  }
  if (o.type == LieType::D && very_even) return o.decoration == 1 || o.decoration == -1;
  return o.decoration == 0;
}

std::vector<OrbitLabel> nilpotent_orbits(LieType type, int rank) {
  std::vector<OrbitLabel> out;
  for (const auto& p : partitions(orbit_partition_size(type, rank)))
    for (int d : {0, 1, -1}) {
      OrbitLabel o{type, rank, p, d};
      if (is_valid_orbit(o)) out.push_back(o);
    }
  return out;
}

std::string to_string(LocalSystem l) {
  switch (l) {
    case LocalSystem::Trivial: return "trivial";
    case LocalSystem::Nontrivial: return "nontrivial";
    default: return "unspecified";
  }
}

Convention parse_convention(const std::string& s) {
  if (s == "phi") return Convention::Phi;
  if (s == "rho") return Convention::Rho;
  throw MalformedInput("convention must be phi or rho: " + s);
}

std::string to_string(Convention c) { return c == Convention::Phi ? "phi" : "rho"; }

IrrLabel phi_ordinary_typeA(const Partition& mu) {
  check_partition(mu);
  return a_label(transpose(mu));
}

IrrLabel rho_ordinary_typeA(const Partition& mu) {
  check_partition(mu);
  return a_label(mu);
}

SpringerImage phi_modular_typeA(const Partition& mu, std::uint32_t ell) {
  check_partition(mu);
  check_ell(ell);
  Partition t = transpose(mu);
  if (!is_regular(t, ell)) return {};
  return {true, "D^" + to_string(t)};
}

SpringerImage rho_modular_typeA(const Partition& mu, std::uint32_t ell, std::uint64_t seed) {
  check_partition(mu);
  check_ell(ell);
  if (!is_restricted(mu, ell)) return {};
  auto w = weyl_group(LieType::A, size(mu) - 1);
  auto d = decomposition_matrix(*w, ell, seed);
  FpRep specht = reduce_mod(ordinary_matrices(*w, a_label(mu)), ell);
  std::vector<std::string> found;
  for (const auto& c : d->cols) {
    long m = socle_multiplicity(specht, c.module);
    if (m == 1) found.push_back(c.label);
    if (m > 1) throw ComputationFailure("Specht module socle is not multiplicity free for " + to_string(mu));
  }
  if (found.size() != 1) throw ComputationFailure("Specht module socle is not simple for " + to_string(mu));
  return {true, found[0]};
}

std::vector<CorrespondenceEntry> correspondence(LieType type, int rank, Convention c, std::uint32_t ell, std::uint64_t seed) {
  std::vector<CorrespondenceEntry> out;
  if (type == LieType::A) {
    for (const auto& mu : partitions(rank + 1)) {
      CorrespondenceEntry e;
      e.orbit = OrbitLabel{type, rank, mu, 0};
      if (ell == 0) {
        IrrLabel l = c == Convention::Phi ? phi_ordinary_typeA(mu) : rho_ordinary_typeA(mu);
        e.irr = {true, to_string(l)};
      } else {
        e.irr = c == Convention::Phi ? phi_modular_typeA(mu, ell) : rho_modular_typeA(mu, ell, seed);
      }
      out.push_back(std::move(e));
    }
    return out;
  }
  if (type == LieType::G2) throw Unsupported("correspondence tables are implemented for classical types");
  if (c == Convention::Rho && ell != 0)
    throw Unsupported("restriction-convention labels for B/C/D are available in characteristic 0 only");
  for (const auto& r : table1_rows(type, rank, ell)) {
    for (std::size_t i = 0; i < r.sources.size(); ++i) {
      CorrespondenceEntry e;
      e.table_driven = true;
      e.local = r.dichotomy_case == 1 ? LocalSystem::Trivial : LocalSystem::Unspecified;
      e.note = "lambda " + to_string(r.lambda) + ", " + r.family;
      const IrrLabel& s = r.sources[i];
      if (ell == 0) {
        e.irr = {true, to_string(c == Convention::Phi ? s : tensor_sign_label(s))};
      } else if (survives_filter(s, ell)) {
        e.irr = {true, modular_label_text(s)};
      } else {
        e.irr = {};
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool sign_twist_theorem_check(LieType type, int rank, std::uint32_t ell, std::uint64_t seed) {
  if (type == LieType::A) {
    int n = rank + 1;
    auto w = weyl_group(LieType::A, rank);
    auto table = character_table(*w);
    auto eps = sign_character(*w);
    std::set<std::string> images;
    for (const auto& mu : partitions(n)) {
      if (ell == 0) {
        IrrLabel p = phi_ordinary_typeA(mu), r = rho_ordinary_typeA(mu);
        if (!(tensor_sign_label(p) == r)) return false;
        if (!(table->character(p) * eps == table->character(r))) return false;
        images.insert(to_string(r));
        continue;
      }
      SpringerImage p = phi_modular_typeA(mu, ell), r = rho_modular_typeA(mu, ell, seed);
      if (p.in_image != r.in_image) return false;
      if (!p.in_image) continue;
      auto d = decomposition_matrix(*w, ell, seed);
      const ModularSimple* phi_simple = nullptr;
      for (const auto& col : d->cols)
        if (col.label == p.label) phi_simple = &col;
      if (!phi_simple) return false;
      std::vector<long> minus(rank, -1);
      FpRep twisted = tensor(phi_simple->module, linear_rep(phi_simple->module.field, minus, w->name()));
      auto idx = identify_simple(*d, twisted);
      if (!idx || d->cols[*idx].label != r.label) return false;
      images.insert(r.label);
    }
    // bijective onto the simples
    std::size_t expected = 0;
    for (const auto& mu : partitions(n))
      if (ell == 0 || is_regular(mu, ell)) ++expected;
    return images.size() == expected;
  }
  if (type == LieType::G2) throw Unsupported("sign-twist check is implemented for classical types");
  if (ell != 0) throw Unsupported("sign-twist check for B/C/D is available in characteristic 0 only");
  auto w = weyl_group(type, rank);
  auto table = character_table(*w);
  auto eps = sign_character(*w);
  auto phi = correspondence(type, rank, Convention::Phi, 0, seed);
  auto rho = correspondence(type, rank, Convention::Rho, 0, seed);
  if (phi.size() != rho.size()) return false;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    IrrLabel p = parse_irr_label(type, rank, phi[i].irr.label);
    IrrLabel r = parse_irr_label(type, rank, rho[i].irr.label);
    if (!(table->character(p) * eps == table->character(r))) return false;
    if (!(tensor_sign_label(r) == p)) return false;
  }
  return true;
}

}  // namespace springerlab
