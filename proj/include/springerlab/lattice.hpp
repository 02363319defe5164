#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "springerlab/matrix.hpp"

namespace springerlab {

using ZVec = std::vector<mpz_class>;

/// A full-rank-in-its-span sublattice of Z^n, basis in Hermite normal form
/// (rows, positive pivots, entries above each pivot reduced into [0, pivot)).
class IntegerLattice {
 public:
  IntegerLattice() = default;
  IntegerLattice(std::size_t ambient, const std::vector<ZVec>& generators);

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<ZVec>& basis() const { return basis_; }

  /// Integer coordinates of v, or nullopt if v is not in the lattice.
  std::optional<ZVec> coordinates(const QVec& v) const;
  bool contains(const QVec& v) const { return coordinates(v).has_value(); }

  /// Basis vectors as the columns of an n x rank rational matrix.
  QMatrix basis_columns() const;

  bool operator==(const IntegerLattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }

 private:
  std::size_t n_ = 0;
  std::vector<ZVec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Hermite normal form of the Z-span of the given rows (zero rows dropped).
std::vector<ZVec> hermite_normal_form(std::vector<ZVec> rows, std::size_t n);

inline constexpr int kLatticeIterationBound = 64;

/// Smallest lattice containing the (denominator-cleared) seeds and stable
/// under the generators. Throws ComputationFailure if the iteration does not
/// stabilize within kLatticeIterationBound rounds.
IntegerLattice invariant_lattice(const std::vector<QMatrix>& generators, const std::vector<QVec>& seeds);

/// Generators rewritten in the lattice basis (integral by construction).
std::vector<QMatrix> in_lattice_basis(const std::vector<QMatrix>& generators, const IntegerLattice& lattice);

}  // namespace springerlab
