#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "springerlab/matrix.hpp"

namespace springerlab {

template <class F>
struct GaussResult {
  std::size_t rank = 0;
  Matrix<F> rref;                     ///< same shape as the input, zero rows last
  std::vector<std::size_t> pivots;    ///< pivot column of each nonzero rref row
  std::vector<Vec<F>> kernel_basis;   ///< one vector per free column, in column order
};

/// In-place reduced row echelon form; pivots chosen at the first nonzero
/// entry of each column, scanning columns left to right.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    auto inv = f.inv(m(r, c));
    f.scale(m.row(r), inv, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = f.neg(m(i, c));
      f.axpy(m.row(i), m.row(r), factor, m.cols());
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
GaussResult<F> gauss(const Matrix<F>& m) {
  GaussResult<F> g;
  g.rref = m;
  g.pivots = rref_in_place(g.rref);
  g.rank = g.pivots.size();
  const F& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : g.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[c] = f.one();
    for (std::size_t i = 0; i < g.pivots.size(); ++i) v[g.pivots[i]] = f.neg(g.rref(i, c));
    g.kernel_basis.push_back(std::move(v));
  }
  return g;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> c = m;
  return rref_in_place(c).size();
}

template <class F>
std::vector<Vec<F>> kernel(const Matrix<F>& m) {
  return gauss(m).kernel_basis;
}

/// Unique solution-or-none of A x = b (returns one particular solution).
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
  if (b.size() != a.rows()) throw MalformedInput("solve: right-hand side length mismatch");
  const F& f = a.field();
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec<F> x(a.cols(), f.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.square()) throw MalformedInput("inverse of non-square matrix");
  const F& f = a.field();
  std::size_t n = a.rows();
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  auto piv = rref_in_place(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

template <class F>
typename F::value_type determinant(const Matrix<F>& a) {
  if (!a.square()) throw MalformedInput("determinant of non-square matrix");
  const F& f = a.field();
  Matrix<F> m = a;
  auto det = f.one();
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(m(p, c))) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      f.axpy(m.row(i), m.row(c), f.neg(f.mul(m(i, c), inv)), n);
    }
  }
  return det;
}

/// A subspace of F^n held as a fully reduced echelon basis, rows sorted by
/// pivot column. Equal subspaces have identical bases.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  Subspace(F field, std::size_t ambient) : field_(field), n_(ambient) {}

  const F& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the basis (zero iff v is in the span).
  Vec<F> reduce(Vec<F> v) const {
    check(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto c = v[pivots_[i]];
      if (!field_.is_zero(c)) field_.axpy(v.data(), rows_[i].data(), field_.neg(c), n_);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vec(reduce(v)); }

  /// Adds v; returns true if the dimension grew.
  bool insert(const Vec<F>& v) {
    Vec<F> r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && field_.is_zero(r[p])) ++p;
    if (p == n_) return false;
    field_.scale(r.data(), field_.inv(r[p]), n_);
    for (auto& row : rows_)
      if (!field_.is_zero(row[p])) field_.axpy(row.data(), r.data(), field_.neg(row[p]), n_);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  /// Coordinates of v in the basis, or nullopt if v is outside the span.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<F> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Vec<F> combine(const Vec<F>& coords) const {
    Vec<F> v(n_, field_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!field_.is_zero(coords[i])) field_.axpy(v.data(), rows_[i].data(), coords[i], n_);
    return v;
  }

  Matrix<F> as_matrix() const { return Matrix<F>::from_rows(field_, rows_, n_); }

  bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  bool is_zero_vec(const Vec<F>& v) const {
    for (const auto& x : v)
      if (!field_.is_zero(x)) return false;
    return true;
  }

 private:
  void check(const Vec<F>& v) const {
    if (v.size() != n_) throw MalformedInput("vector dimension does not match subspace ambient");
  }

  F field_{};
  std::size_t n_ = 0;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
using LinearOp = std::function<Vec<F>(const Vec<F>&)>;

/// Smallest subspace containing the seeds and closed under every operator.
template <class F>
Subspace<F> spin(F field, std::size_t n, const std::vector<Vec<F>>& seeds, const std::vector<LinearOp<F>>& ops) {
  Subspace<F> s(field, n);
  std::deque<Vec<F>> queue;
  for (const auto& v : seeds) {
    if (v.size() != n) throw MalformedInput("spin: seed dimension mismatch");
    if (s.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vec<F> v = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      Vec<F> w = op(v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

template <class F>
Subspace<F> spin(F field, std::size_t n, const std::vector<Vec<F>>& seeds, const std::vector<Matrix<F>>& ops) {
  std::vector<LinearOp<F>> fs;
  for (const auto& m : ops) {
    if (!m.square() || m.rows() != n) throw MalformedInput("spin: operator dimension mismatch");
    if (!(m.field() == field)) throw MalformedInput("spin: mixed-field operators");
    fs.push_back([&m](const Vec<F>& v) { return m.apply(v); });
  }
  return spin(field, n, seeds, fs);
}

}  // namespace springerlab

namespace springerlab {
using QSubspace = Subspace<Rationals>;
using FpSubspace = Subspace<PrimeField>;
}  // namespace springerlab
