#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "springerlab/labels.hpp"
#include "springerlab/partition.hpp"

namespace springerlab {

/// Nilpotent orbit: A_{n-1}: partition of n; B_n: of 2n+1; C_n, D_n: of 2n.
/// `decoration` is +1/-1 for very even D orbits, 0 otherwise.
struct OrbitLabel {
  LieType type = LieType::A;
  int rank = 0;
  Partition partition;
  int decoration = 0;
  bool operator==(const OrbitLabel& o) const = default;
};

std::string to_string(const OrbitLabel& o);
/// Size of the partitions parametrising orbits (rank is the Lie rank).
int orbit_partition_size(LieType type, int rank);
bool is_valid_orbit(const OrbitLabel& o);
std::vector<OrbitLabel> nilpotent_orbits(LieType type, int rank);

enum class LocalSystem { Trivial, Nontrivial, Unspecified };
std::string to_string(LocalSystem l);

enum class Convention { Phi, Rho };
Convention parse_convention(const std::string& s);
std::string to_string(Convention c);

/// A simple module label, or the explicit "not-in-image" value.
struct SpringerImage {
  bool in_image = false;
  std::string label;
  std::string text() const { return in_image ? label : "not-in-image"; }
  bool operator==(const SpringerImage& o) const = default;
};

struct CorrespondenceEntry {
  std::optional<OrbitLabel> orbit;   ///< nullopt: unspecified
  LocalSystem local = LocalSystem::Trivial;
  SpringerImage irr;
  bool table_driven = false;
  std::string note;
};

/// Type A with the partition mu of n (the group is S_n).
IrrLabel phi_ordinary_typeA(const Partition& mu);
IrrLabel rho_ordinary_typeA(const Partition& mu);
SpringerImage phi_modular_typeA(const Partition& mu, std::uint32_t ell);
/// Restriction convention computed from modules: the socle of the reduced
/// Specht module S^mu, named in the D^nu labelling; in the image exactly for
/// l-restricted mu.
SpringerImage rho_modular_typeA(const Partition& mu, std::uint32_t ell, std::uint64_t seed = 42);

/// Correspondence entries. Type A_{rank}: every orbit; B/C/D: only the
/// entries forced by the zero-weight table, marked table_driven.
std::vector<CorrespondenceEntry> correspondence(LieType type, int rank, Convention c, std::uint32_t ell, std::uint64_t seed = 42);

/// Sign-twist identity on the implemented domain. Type A: n = rank + 1;
/// ell = 0 for characteristic zero.
bool sign_twist_theorem_check(LieType type, int rank, std::uint32_t ell, std::uint64_t seed = 42);

}  // namespace springerlab
