#pragma once

#include <string>
#include <vector>

#include "springerlab/lattice.hpp"
#include "springerlab/linalg.hpp"
#include "springerlab/rng.hpp"
#include "springerlab/weyl_group.hpp"

namespace springerlab {

/// A module given by one matrix per generator (column-vector convention:
/// generator g acts by v -> gens[g] * v).
template <class F>
struct Rep {
  F field{};
  std::size_t dim = 0;
  std::vector<Matrix<F>> gens;
  std::string group;

  Rep() = default;
  Rep(F f, std::size_t d, std::vector<Matrix<F>> g, std::string grp = {})
      : field(f), dim(d), gens(std::move(g)), group(std::move(grp)) {
    for (const auto& m : gens)
      if (!m.square() || m.rows() != dim || !(m.field() == field)) throw MalformedInput("representation generator has wrong shape or field");
  }
};

using QRep = Rep<Rationals>;
using FpRep = Rep<PrimeField>;

/// Matrix of a group element, multiplied out along its reduced word.
template <class F>
Matrix<F> element_matrix(const Rep<F>& r, const WeylGroup& w, int element) {
  Matrix<F> m = Matrix<F>::identity(r.field, r.dim);
  for (int g : w.element(element).word) m = m * r.gens[g];
  return m;
}

/// All element matrices, indexed like w.elements() (built along the BFS tree).
template <class F>
std::vector<Matrix<F>> all_element_matrices(const Rep<F>& r, const WeylGroup& w) {
  std::vector<Matrix<F>> out(w.order());
  out[0] = Matrix<F>::identity(r.field, r.dim);
  for (long i = 1; i < w.order(); ++i) {
    const auto& word = w.element(static_cast<int>(i)).word;
    std::vector<int> prefix(word.begin(), word.end() - 1);
    // the prefix of a BFS word is an earlier element
    int parent = 0;
    for (int g : prefix) parent = w.multiply(parent, w.generator(g));
    out[i] = out[parent] * r.gens[word.back()];
  }
  return out;
}

/// Coxeter relations: s_i^2 = 1 and (s_i s_j)^{m_ij} = 1.
template <class F>
bool satisfies_weyl_relations(const Rep<F>& r, const WeylGroup& w) {
  if (static_cast<int>(r.gens.size()) != w.num_generators()) return false;
  auto id = Matrix<F>::identity(r.field, r.dim);
  for (int i = 0; i < w.num_generators(); ++i)
    for (int j = i; j < w.num_generators(); ++j) {
      int m = 1;
      int prod = w.multiply(w.generator(i), w.generator(j));
      for (int x = prod; x != w.identity(); x = w.multiply(x, prod)) ++m;
      auto p = r.gens[i] * r.gens[j];
      auto acc = id;
      for (int k = 0; k < m; ++k) acc = acc * p;
      if (!(acc == id)) return false;
    }
  return true;
}

/// Traces on class representatives.
template <class F>
std::vector<typename F::value_type> class_traces(const Rep<F>& r, const WeylGroup& w) {
  std::vector<typename F::value_type> t;
  for (const auto& c : w.classes()) t.push_back(element_matrix(r, w, c.representative).trace());
  return t;
}

/// Basis of Hom(M, N): matrices X (dim N x dim M) with N_g X = X M_g.
template <class F>
std::vector<Matrix<F>> hom_space(const Rep<F>& m, const Rep<F>& n) {
  if (!(m.field == n.field) || m.gens.size() != n.gens.size()) throw MalformedInput("hom_space: modules over different fields or groups");
  const F& f = m.field;
  std::size_t a = n.dim, b = m.dim, unknowns = a * b;
  if (unknowns == 0) return {};
  Matrix<F> sys(f, unknowns * m.gens.size(), unknowns);
  // unknown index: X(i, j) -> i * b + j
  for (std::size_t g = 0; g < m.gens.size(); ++g) {
    const auto& ng = n.gens[g];
    const auto& mg = m.gens[g];
    std::size_t base = g * unknowns;
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        std::size_t row = base + i * b + j;
        // (N X)(i,j) = sum_k N(i,k) X(k,j)
        for (std::size_t k = 0; k < a; ++k) sys(row, k * b + j) = f.add(sys(row, k * b + j), ng(i, k));
        // - (X M)(i,j) = - sum_k X(i,k) M(k,j)
        for (std::size_t k = 0; k < b; ++k) sys(row, i * b + k) = f.sub(sys(row, i * b + k), mg(k, j));
      }
  }
  std::vector<Matrix<F>> out;
  for (const auto& v : kernel(sys)) {
    Matrix<F> x(f, a, b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) x(i, j) = v[i * b + j];
    out.push_back(std::move(x));
  }
  return out;
}

/// Submodule given by a basis (rows of `sub`) and its quotient, as modules.
template <class F>
struct SubQuotient {
  Rep<F> sub;
  Rep<F> quotient;
};

/// Splits a module along an invariant subspace (caller guarantees invariance;
/// checked).
template <class F>
SubQuotient<F> split_module(const Rep<F>& m, const Subspace<F>& s) {
  const F& f = m.field;
  std::size_t k = s.dim(), n = m.dim;
  // complement: standard basis vectors at non-pivot columns
  std::vector<bool> piv(n, false);
  for (auto p : s.pivots()) piv[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!piv[c]) free_cols.push_back(c);
  std::vector<Matrix<F>> sub_gens, quo_gens;
  for (const auto& g : m.gens) {
    Matrix<F> a(f, k, k), q(f, n - k, n - k);
    for (std::size_t j = 0; j < k; ++j) {
      auto img = g.apply(s.basis()[j]);
      auto c = s.coordinates(img);
      if (!c) throw ComputationFailure("split_module: subspace is not invariant");
      for (std::size_t i = 0; i < k; ++i) a(i, j) = (*c)[i];
    }
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      Vec<F> e(n, f.zero());
      e[free_cols[j]] = f.one();
      auto img = s.reduce(g.apply(e));
      // after reduction the pivot entries vanish; read the free coordinates
      for (std::size_t i = 0; i < free_cols.size(); ++i) q(i, j) = img[free_cols[i]];
    }
    sub_gens.push_back(std::move(a));
    quo_gens.push_back(std::move(q));
  }
  return {Rep<F>(f, k, std::move(sub_gens), m.group), Rep<F>(f, n - k, std::move(quo_gens), m.group)};
}

template <class F>
Rep<F> direct_sum(const Rep<F>& a, const Rep<F>& b) {
  std::vector<Matrix<F>> g;
  for (std::size_t i = 0; i < a.gens.size(); ++i) g.push_back(direct_sum(a.gens[i], b.gens[i]));
  return Rep<F>(a.field, a.dim + b.dim, std::move(g), a.group);
}

template <class F>
Rep<F> tensor(const Rep<F>& a, const Rep<F>& b) {
  std::vector<Matrix<F>> g;
  for (std::size_t i = 0; i < a.gens.size(); ++i) g.push_back(kron(a.gens[i], b.gens[i]));
  return Rep<F>(a.field, a.dim * b.dim, std::move(g), a.group);
}

/// Contragredient: g -> (g^{-1})^T.
template <class F>
Rep<F> dual(const Rep<F>& a) {
  std::vector<Matrix<F>> g;
  for (const auto& m : a.gens) {
    auto inv = inverse(m);
    if (!inv) throw ComputationFailure("dual: singular generator");
    g.push_back(inv->transpose());
  }
  return Rep<F>(a.field, a.dim, std::move(g), a.group);
}

/// One-dimensional module with the given generator scalars.
template <class F>
Rep<F> linear_rep(F f, const std::vector<long>& values, const std::string& group = {}) {
  std::vector<Matrix<F>> g;
  for (long v : values) g.push_back(Matrix<F>::from_ints(f, {{v}}));
  return Rep<F>(f, 1, std::move(g), group);
}

/// Reduce an ordinary module mod ell through an invariant lattice (seeded by
/// the standard basis).
FpRep reduce_mod(const QRep& r, std::uint32_t ell);

/// True iff an invertible intertwiner exists. Random elements of Hom are
/// tested for invertibility; a nonzero Hom between simples always succeeds.
bool is_isomorphic(const FpRep& m, const FpRep& n, std::uint64_t seed = 42);
bool is_isomorphic(const QRep& m, const QRep& n, std::uint64_t seed = 42);

}  // namespace springerlab
