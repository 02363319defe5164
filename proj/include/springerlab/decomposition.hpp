#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "springerlab/labels.hpp"
#include "springerlab/meataxe.hpp"

namespace springerlab {

struct ModularSimple {
  std::string label;           ///< "D^(2,1)", "E^[(2),(2)]+", or "simple#k, dim d"
  FpRep module;
  long dim = 0;
  int source_row = -1;         ///< row whose head names it (-1 for opaque labels)
  bool opaque = false;
};

struct DecompositionMatrix {
  LieType type;
  int rank;
  std::uint32_t ell;
  std::uint64_t seed;
  std::vector<IrrLabel> rows;             ///< dominance-compatible order
  std::vector<ModularSimple> cols;        ///< ordered by source row
  std::vector<std::vector<long>> entries; ///< rows x cols
  std::string order_note;

  std::string group() const { return type_name(type) + std::to_string(rank); }
  std::vector<std::string> row_labels() const;
  std::vector<std::string> col_labels() const;
};

/// Whether the head-convention labelling applies (otherwise labels are opaque).
bool uses_head_labels(LieType type, std::uint32_t ell);
/// Ordinary labels whose reduction names a simple by its head.
bool is_regular_label(const IrrLabel& l, std::uint32_t ell);

/// Brute-force decomposition matrix: meataxe on every reduced ordinary
/// module, simples unified by isomorphism and named by the head convention.
/// Memoised per (type, rank, ell, seed). Throws ComputationFailure when the
/// naming cannot be validated.
std::shared_ptr<const DecompositionMatrix> decomposition_matrix(const WeylGroup& w, std::uint32_t ell, std::uint64_t seed = 42);

bool brauer_identity_holds(const DecompositionMatrix& d);
/// Zero above the source row and 1 on it, for every named column.
bool is_unitriangular(const DecompositionMatrix& d);
bool is_identity(const DecompositionMatrix& d);

/// Column index of the simple isomorphic to `m`, if any.
std::optional<int> identify_simple(const DecompositionMatrix& d, const FpRep& m);

}  // namespace springerlab
