#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "springerlab/representation.hpp"
#include "springerlab/root_system.hpp"

namespace springerlab {

/// Small dense integer matrix on the natural module.
struct NatMatrix {
  int d = 0;
  std::vector<long> a;
  NatMatrix() = default;
  explicit NatMatrix(int dim) : d(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}
  static NatMatrix identity(int dim);
  long& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * d + c]; }
  long operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * d + c]; }
  NatMatrix operator*(const NatMatrix& o) const;
  NatMatrix operator+(const NatMatrix& o) const;
  NatMatrix operator-(const NatMatrix& o) const;
  NatMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const NatMatrix& o) const = default;
};

/// Natural module of the dual group with Chevalley generators for the simple
/// roots. Generator i corresponds to the i-th simple reflection of G.
struct NaturalModule {
  LieType g_type = LieType::A;  ///< type of G (the dual group is built)
  int rank = 0;
  std::string dual_group;       ///< "SL_3", "SO_5", "Sp_4", "SO_8", "G2"
  int dim = 0;
  std::vector<IVec> weights;    ///< in the coweight coordinates of G
  std::vector<NatMatrix> e, f;  ///< simple root vectors
  /// e_div[i][k] = e_i^k / k!, k = 0..max (last one nonzero)
  std::vector<std::vector<NatMatrix>> e_div, f_div;
  std::vector<NatMatrix> n_lift, n_lift_inverse;  ///< x(1) x_-(-1) x(1) and inverse
};

/// Builds and validates ([E_i,F_j] = delta_ij H_i, Serre relations, weight
/// shifts, integrality of divided powers). Throws ComputationFailure on a
/// failed check.
NaturalModule natural_module(LieType type, int rank);

/// V^{(x) a} (x) V*^{(x) b} over F_ell.
class ChevalleyRep {
 public:
  ChevalleyRep(NaturalModule nat, std::uint32_t ell, int copies, int dual_copies, std::size_t max_dim = 4096);

  const NaturalModule& natural() const { return nat_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t ell() const { return field_.p; }
  std::size_t dim() const { return dim_; }
  int factors() const { return m_; }
  int dual_factors() const { return b_; }
  IVec weight(std::size_t basis_index) const;
  /// Largest k with e_i^{(k)} possibly nonzero on the ambient space.
  int max_power(int gen) const;

  FpVec apply_e(int gen, int k, const FpVec& v) const;
  FpVec apply_f(int gen, int k, const FpVec& v) const;
  /// n_alpha for simple root `gen` (inverse lift when `inverse`).
  FpVec apply_n(int gen, const FpVec& v, bool inverse = false) const;

 private:
  struct Sparse {
    std::vector<std::vector<std::pair<int, PrimeField::value_type>>> by_col;  ///< col -> (row, value)
  };
  Sparse sparse(const NatMatrix& m, bool dual_transpose, bool negate_odd, int power) const;
  FpVec apply_factor(const Sparse& s, int position, const FpVec& v) const;
  FpVec apply_divided(const std::vector<NatMatrix>& div, int k, const FpVec& v) const;

  NaturalModule nat_;
  PrimeField field_;
  int m_, b_;
  std::size_t dim_;
  std::vector<std::size_t> stride_;
};

/// Weight-graded highest-weight submodule generated by one vector.
struct HighestWeightModule {
  IVec highest;
  std::vector<IVec> order;               ///< weights, highest first (<2rho, mu> descending)
  std::map<IVec, FpSubspace> spaces;
  FpVec generator;
  std::size_t dim() const;
};

/// Δ' spun from a vector of weight `target` killed by every e_i^{(k)}.
/// Throws ComputationFailure when no such vector exists.
HighestWeightModule highest_weight_submodule(const ChevalleyRep& rep, const IVec& target);

/// L = Δ' / (largest submodule missing the highest weight).
struct SimpleQuotient {
  HighestWeightModule delta;
  std::map<IVec, FpMatrix> projection;           ///< Δ'_mu coordinates -> L_mu coordinates
  std::map<IVec, std::vector<std::size_t>> lifts;  ///< basis of L_mu as Δ'_mu basis indices
  std::size_t dim() const;
  std::size_t dim_at(const IVec& mu) const;
};

SimpleQuotient simple_quotient(const ChevalleyRep& rep, HighestWeightModule delta);

/// L as a module for the algebra generated by the divided powers and the
/// weight projections (for the irreducibility certificate).
FpRep simple_module_rep(const ChevalleyRep& rep, const SimpleQuotient& l);

/// W acting on L_0 through the lifts n_alpha; `zero` is the ambient weight
/// playing weight 0 (type A tensor spaces carry a central shift). Weyl
/// relations are checked.
FpRep zero_weight_W_module(const ChevalleyRep& rep, const SimpleQuotient& l, const IVec& zero, bool inverse_lift = false);

struct OracleFactor {
  std::string label;
  long dim = 0;
  int multiplicity = 0;
  bool identified = true;
};

/// Composition factors of z named against the decomposition-matrix simples.
std::vector<OracleFactor> oracle_identify(const FpRep& z, LieType type, int rank, std::uint32_t ell, std::uint64_t seed = 42);

struct OracleResult {
  std::string group;           ///< the dual group
  LieType type = LieType::A;
  int rank = 0;
  IVec lambda;
  std::uint32_t ell = 0;
  std::size_t ambient_dim = 0;
  std::size_t dim_weyl_surrogate = 0;
  std::size_t dim_simple = 0;
  std::size_t dim_zero_weight = 0;
  bool simple_certified = false;
  bool lift_independent = false;
  std::vector<OracleFactor> factors;
  std::vector<std::string> expected;         ///< formula prediction when one exists
  std::optional<bool> agrees_with_formula;
};

bool g2_oracle_enabled();

/// Full chain for a small coweight lambda of G (coordinates of the root
/// system of G). Throws Unsupported for G2 when the feature is disabled and
/// when the ambient dimension exceeds max_dim.
OracleResult run_oracle(LieType type, int rank, const IVec& lambda, std::uint32_t ell, std::uint64_t seed = 42, std::size_t max_dim = 4096);

}  // namespace springerlab
