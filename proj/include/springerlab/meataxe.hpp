#pragma once

#include <optional>
#include <vector>

#include "springerlab/representation.hpp"

namespace springerlab {

/// Polynomials over F_p, coefficients low degree first, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

namespace fp_poly {
FpPoly trim(FpPoly a);
int degree(const FpPoly& a);
FpPoly mul(const FpPoly& a, const FpPoly& b, const PrimeField& f);
/// Quotient and remainder; b nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, const PrimeField& f);
FpPoly gcd(FpPoly a, FpPoly b, const PrimeField& f);
FpPoly monic(const FpPoly& a, const PrimeField& f);
FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& m, const PrimeField& f);
FpPoly derivative(const FpPoly& a, const PrimeField& f);
/// Distinct monic irreducible factors, sorted by degree then coefficients.
std::vector<FpPoly> irreducible_factors(const FpPoly& a, const PrimeField& f, Rng& rng);
/// Characteristic polynomial via Hessenberg reduction.
FpPoly charpoly(const FpMatrix& m);
/// q(M)
FpMatrix evaluate(const FpPoly& q, const FpMatrix& m);
}  // namespace fp_poly

inline constexpr int kMeataxeRetryBudget = 200;
inline constexpr int kMeataxeMaxWord = 8;
inline constexpr int kMeataxeMaxTerms = 4;
inline constexpr std::size_t kMeataxeDimBound = 512;

/// A proper nonzero invariant subspace, or nullopt when the module is
/// certified irreducible. Throws ComputationFailure after the retry budget.
std::optional<FpSubspace> find_submodule(const FpRep& m, Rng& rng);

bool is_irreducible(const FpRep& m, std::uint64_t seed = 42);

struct Factor {
  FpRep module;
  int multiplicity = 0;
};

/// Composition factors up to isomorphism, sorted by (dimension, traces of
/// generators). Throws ComputationFailure on budget exhaustion.
std::vector<Factor> comp_factors(const FpRep& m, std::uint64_t seed = 42, std::size_t dim_bound = kMeataxeDimBound);

/// Multiplicity of simple S in the head (top) of M: dim Hom(M,S)/dim End(S).
long head_multiplicity(const FpRep& m, const FpRep& simple);
/// Multiplicity of simple S in the socle of M: dim Hom(S,M)/dim End(S).
long socle_multiplicity(const FpRep& m, const FpRep& simple);

}  // namespace springerlab
