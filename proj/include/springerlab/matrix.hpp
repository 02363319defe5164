#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "springerlab/field.hpp"

namespace springerlab {

template <class F>
using Vec = std::vector<typename F::value_type>;

/// Dense row-major matrix over a field F.
template <class F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// From integer rows; all rows must have equal length.
  static Matrix from_ints(F field, const std::vector<std::vector<long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw MalformedInput("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix from_rows(F field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw MalformedInput("row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i));
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  value_type* row(std::size_t i) { return data_.data() + i * cols_; }
  const value_type* row(std::size_t i) const { return data_.data() + i * cols_; }
  Vec<F> row_vec(std::size_t i) const { return Vec<F>(row(i), row(i) + cols_); }
  Vec<F> col_vec(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  const std::vector<value_type>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw MalformedInput("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const value_type& a = (*this)(i, k);
        if (!field_.is_zero(a)) field_.axpy(r.row(i), o.row(k), a, o.cols_);
      }
    return r;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw MalformedInput("matrix-vector shape mismatch");
    Vec<F> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      value_type acc = field_.zero();
      for (std::size_t j = 0; j < cols_; ++j) {
        const value_type& a = (*this)(i, j);
        if (!field_.is_zero(a)) acc = field_.add(acc, field_.mul(a, v[j]));
      }
      r[i] = acc;
    }
    return r;
  }

  /// Row vector times matrix.
  Vec<F> apply_left(const Vec<F>& v) const {
    if (v.size() != rows_) throw MalformedInput("vector-matrix shape mismatch");
    Vec<F> r(cols_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      if (!field_.is_zero(v[i])) field_.axpy(r.data(), row(i), v[i], cols_);
    return r;
  }

  Matrix operator+(const Matrix& o) const { return combine(o, false); }
  Matrix operator-(const Matrix& o) const { return combine(o, true); }

  Matrix scaled(const value_type& c) const {
    Matrix r = *this;
    field_.scale(r.data_.data(), c, r.data_.size());
    return r;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const value_type& a) { return field_.is_zero(a); });
  }

  value_type trace() const {
    value_type t = field_.zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = field_.add(t, (*this)(i, i));
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void check_field(const Matrix& o) const {
    if (!(field_ == o.field_)) throw MalformedInput("mixed-field matrix operation: " + field_.name() + " vs " + o.field_.name());
  }

 private:
  Matrix combine(const Matrix& o, bool subtract) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MalformedInput("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
      r.data_[i] = subtract ? field_.sub(data_[i], o.data_[i]) : field_.add(data_[i], o.data_[i]);
    return r;
  }

  F field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<value_type> data_;
};

using QMatrix = Matrix<Rationals>;
using FpMatrix = Matrix<PrimeField>;
using QVec = Vec<Rationals>;
using FpVec = Vec<PrimeField>;

/// A field element tagged with its field, for untyped input.
struct FpValue {
  std::uint32_t residue;
  std::uint32_t modulus;
};
using FieldValue = std::variant<mpq_class, FpValue>;

/// Builders from tagged entries. All entries must share one field.
QMatrix qmatrix_from_values(std::size_t rows, std::size_t cols, const std::vector<FieldValue>& entries);
FpMatrix fpmatrix_from_values(std::size_t rows, std::size_t cols, const std::vector<FieldValue>& entries);

/// Entrywise reduction; denominators must be units mod p.
FpMatrix reduce(const QMatrix& m, const PrimeField& f);
FpVec reduce(const QVec& v, const PrimeField& f);

/// Kronecker product.
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  a.check_field(b);
  const F& f = a.field();
  Matrix<F> r(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    }
  return r;
}

template <class F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
  a.check_field(b);
  Matrix<F> r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

}  // namespace springerlab
