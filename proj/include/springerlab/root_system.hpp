#pragma once

#include <string>
#include <vector>

namespace springerlab {

enum class LieType { A, B, C, D, G2 };

std::string type_name(LieType t);
/// "A", "B", "C", "D", "G2" (also "G"); throws MalformedInput.
LieType parse_type(const std::string& s);
/// Type of the dual root system (B <-> C).
LieType dual_type(LieType t);

using IVec = std::vector<long>;

/// Roots are stored in their own coordinates, coweights in theirs:
///   A_n: R^{n+1} (zero-sum), B/C/D: R^n with the e_i basis,
///   G2: roots in the simple-root basis, coweights in the simple-coroot basis.
struct RootSystem {
  LieType type;
  int rank = 0;
  int coord_dim = 0;
  std::vector<IVec> roots;          ///< all roots
  std::vector<IVec> coroots;        ///< coroots[i] is the coroot of roots[i]
  std::vector<int> positive;        ///< indices of positive roots
  std::vector<int> simple;          ///< indices of simple roots, Bourbaki order
  long weyl_order = 0;

  int num_positive() const { return static_cast<int>(positive.size()); }
  const IVec& simple_root(int i) const { return roots[simple[i]]; }
  const IVec& simple_coroot(int i) const { return coroots[simple[i]]; }

  /// <root, coweight>
  long pairing(const IVec& root, const IVec& coweight) const;
  /// Index of the highest root.
  int highest_root() const;
  /// Roots of maximal length first; true if root i is long (G2/B/C only differ).
  bool is_long(int root_index) const;

  /// s_i(c) = c - <alpha_i, c> alpha_i^vee
  IVec reflect(int i, const IVec& coweight) const;
  /// Whether v lies in the coweight lattice (the coroot lattice).
  bool in_coweight_lattice(const IVec& v) const;
  std::string name() const { return type_name(type) + std::to_string(rank); }
};

/// Throws Unsupported for invalid (type, rank).
RootSystem build_root_system(LieType type, int rank);

bool is_dominant(const RootSystem& rs, const IVec& c);
IVec dominant_rep(const RootSystem& rs, IVec c);
/// mu <= lambda: lambda - mu is a nonnegative rational combination of simple
/// coroots. Both must be dominant (MalformedInput otherwise).
bool leq_dominance(const RootSystem& rs, const IVec& mu, const IVec& lambda);
/// One dominant 2*coroot per root-length orbit.
std::vector<IVec> doubled_coroot_reps(const RootSystem& rs);
bool is_small(const RootSystem& rs, const IVec& lambda);
/// Coordinate bound of the search box used by enumerate_small.
long small_search_bound(const RootSystem& rs);
/// Dominant small coweights, lexicographically sorted.
std::vector<IVec> enumerate_small(const RootSystem& rs);
/// Same, searching the box of the given coordinate bound.
std::vector<IVec> enumerate_small(const RootSystem& rs, long bound);

std::string to_string(const IVec& v);
/// "1,0,-1" or "(1,0,-1)"
IVec parse_ivec(const std::string& s);

}  // namespace springerlab
