#pragma once

#include <map>
#include <memory>
#include <vector>

#include "springerlab/characters.hpp"
#include "springerlab/polynomial.hpp"
#include "springerlab/representation.hpp"

namespace springerlab {

/// One graded piece of the coinvariant algebra.
template <class F>
struct GradedPiece {
  int degree = 0;
  std::vector<Exponent> all_monomials;       ///< basis of the polynomial piece
  std::map<Exponent, std::size_t> index;     ///< position in all_monomials
  Subspace<F> ideal;                         ///< the ideal in this degree
  std::vector<std::size_t> standard;         ///< non-pivot columns: quotient basis
  Rep<F> action;                             ///< W-action on the quotient

  std::size_t dim() const { return standard.size(); }
  /// Quotient coordinates of a homogeneous polynomial of this degree.
  Vec<F> coordinates(const Vec<F>& poly) const;
  Vec<F> embed(const IPoly& p, const F& f) const;
};

/// Coinvariant algebra F[h] / (F[h]^W_+), graded by polynomial degree.
template <class F>
struct GradedWModule {
  F field{};
  std::shared_ptr<const WeylGroup> group;
  PolynomialModel model;
  int top_degree = 0;
  std::vector<GradedPiece<F>> pieces;
  /// Coordinates of the chosen top class in the degree-N quotient.
  typename F::value_type top_scalar{};
  bool top_from_root_product = true;

  std::vector<std::size_t> graded_dims() const;
  std::size_t total_dim() const;
  /// Standard monomials (exponent vectors) of degree d.
  std::vector<Exponent> basis(int d) const;
};

using QGradedWModule = GradedWModule<Rationals>;
using FpGradedWModule = GradedWModule<PrimeField>;

/// Pairing C^i x C^{N-i} -> C^N = field, product coefficient along the top class.
template <class F>
struct PairingMatrix {
  int degree = 0;
  Matrix<F> matrix;
};

template <class F>
GradedWModule<F> coinvariant_algebra(const WeylGroup& w, F field);

/// Coefficients of prod_i (1 + q + ... + q^{d_i - 1}).
std::vector<std::size_t> expected_graded_dims(const WeylGroup& w);

/// Per-degree characters. Over F_l with l | |W| throws Unsupported.
template <class F>
std::vector<ClassFunction> graded_character(const GradedWModule<F>& m);
template <>
std::vector<ClassFunction> graded_character(const GradedWModule<Rationals>& m);
template <>
std::vector<ClassFunction> graded_character(const GradedWModule<PrimeField>& m);

template <class F>
bool is_faithful(const GradedWModule<F>& m);

template <class F>
PairingMatrix<F> pairing_matrix(const GradedWModule<F>& m, int degree);

/// The sign-equivariance identity <wf, wg> = eps(w) <f, g> and
/// nonsingularity of every pairing matrix.
template <class F>
bool poincare_sign_check(const GradedWModule<F>& m);

template <class F>
bool poincare_sign_check(const WeylGroup& w, F field) {
  return poincare_sign_check(coinvariant_algebra(w, field));
}

/// Same identity with the top class rescaled by c (must be nonzero).
template <class F>
bool poincare_sign_check_scaled(const GradedWModule<F>& m, const typename F::value_type& c);

}  // namespace springerlab
