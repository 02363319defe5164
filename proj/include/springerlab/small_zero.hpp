#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "springerlab/labels.hpp"
#include "springerlab/root_system.hpp"

namespace springerlab {

/// One row instance of the classical zero-weight table.
struct SmallRepRecord {
  LieType type = LieType::B;
  int rank = 0;
  std::uint32_t ell = 0;                 ///< 0 means characteristic zero
  IVec lambda;
  std::string family;                    ///< row formula, e.g. "(2 0^{n-1})"
  int dichotomy_case = 1;
  std::optional<Partition> orbit;        ///< Jordan type where determined
  std::vector<IrrLabel> sources;         ///< ordinary labels naming the simples (pre-filter)
  std::vector<std::string> labels_prefilter;
  std::vector<std::string> labels;       ///< after l-filtering
  std::vector<std::string> notes;
  std::vector<std::string> citations;
};

/// Rows for B_n (n >= 2), C_n (n >= 2), D_n (n >= 4); ell odd prime or 0.
/// Throws Unsupported for ell = 2 and for ranks outside those ranges.
std::vector<SmallRepRecord> table1_rows(LieType type, int rank, std::uint32_t ell);

/// Whether a modular label survives: every partition component l-regular.
bool survives_filter(const IrrLabel& source, std::uint32_t ell);

/// Zero weight space of L(lambda) for the dual group of SL_n.
struct TypeAZeroWeight {
  IVec lambda;
  std::uint32_t ell = 0;
  bool dual_family = false;   ///< min entry < -1: computed through -w0(lambda)
  IVec effective;             ///< lambda or -w0(lambda)
  Partition lambda_hat;       ///< effective + (1^n)
  bool restricted = true;
  std::optional<Partition> label;  ///< D^{label}, or nullopt for zero
  std::string label_text() const;
};

/// lambda dominant, zero sum, small (MalformedInput otherwise); ell prime or 0.
TypeAZeroWeight zero_weight_typeA(const IVec& lambda, std::uint32_t ell);
/// <lambda, alpha_i> <= ell - 1 for every simple root of SL_n.
bool is_restricted_typeA(const IVec& lambda, std::uint32_t ell);

int dichotomy_case(const SmallRepRecord& r);
inline int dichotomy_case(const TypeAZeroWeight&) { return 1; }

/// Recorded data for exceptional groups.
struct ExceptionalNote {
  std::string group;
  std::string lambda;
  std::string orbit;
  int dichotomy_case = 1;
  /// ell -> dim L(lambda)_0 (ell = 0 key for characteristic zero when known)
  std::map<std::uint32_t, long> zero_weight_dims;
  std::string statement;
  std::vector<std::string> citations;
};

const std::vector<ExceptionalNote>& exceptional_notes();
/// Recorded dim L(lambda)_0 for G2 and the higher fundamental coweight;
/// ell > 2 prime.
long g2_recorded_zero_weight_dim(std::uint32_t ell);

}  // namespace springerlab
