#pragma once

#include <string>
#include <vector>

#include "springerlab/partition.hpp"
#include "springerlab/root_system.hpp"

namespace springerlab {

/// Irreducible ordinary W-module label.
///   A:   S^a                       (a a partition of rank+1)
///   B/C: chi^(a,b)
///   D:   E^[a,b], canonical a >= b; sign = +1/-1 when a == b
///   G2:  one of phi1,0 phi1,6 phi'1,3 phi''1,3 phi2,1 phi2,2 (in `name`)
struct IrrLabel {
  LieType type = LieType::A;
  int rank = 0;
  Partition a, b;
  int sign = 0;
  std::string name;

  bool operator==(const IrrLabel& o) const {
    return type == o.type && rank == o.rank && a == o.a && b == o.b && sign == o.sign && name == o.name;
  }
  bool operator<(const IrrLabel& o) const;
};

std::string to_string(const IrrLabel& l);
/// Accepts the to_string forms (also "E^[(2),(2)]+" and "D^..." for modular use).
IrrLabel parse_irr_label(LieType type, int rank, const std::string& s);

/// Canonical order of the pair in a D label: larger size first, then
/// lexicographically larger first.
bool d_pair_before(const Partition& x, const Partition& y);
IrrLabel make_d_label(int rank, const Partition& x, const Partition& y, int sign = 0);

/// Every label for the group, in a fixed order (partitions lex decreasing;
/// bipartitions by |a| descending then lex; D canonical pairs; G2 fixed).
std::vector<IrrLabel> all_irr_labels(LieType type, int rank);

bool is_valid(const IrrLabel& l);

/// Ordinary-module dimension (closed forms; G2 from the fixed list).
long label_dimension(const IrrLabel& l);

/// Closed forms for tensoring with the sign character:
///   A: transpose; B/C: (a,b) -> (b^t, a^t); D: transpose both, renormalise,
///   degenerate sign flips by (-1)^{rank/2}; G2: fixed involution.
IrrLabel tensor_sign_label(const IrrLabel& l);

/// "D^(2,1)", "D^((1),(1))", "E^[(2),(1)]", "E^[(2),(2)]+": modular label text
/// for the simple head of the ordinary module `l`.
std::string modular_label_text(const IrrLabel& l);

/// G2 names.
inline const std::vector<std::string>& g2_names() {
  static const std::vector<std::string> n = {"phi1,0", "phi1,6", "phi'1,3", "phi''1,3", "phi2,1", "phi2,2"};
  return n;
}

}  // namespace springerlab
