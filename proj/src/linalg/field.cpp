#include "springerlab/field.hpp"

#include "springerlab/matrix.hpp"

namespace springerlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw ComputationFailure("division by zero in " + name());
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& v) const {
  mpz_class num = v.get_num() % p, den = v.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw ComputationFailure("denominator " + v.get_den().get_str() + " vanishes in " + name());
  return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
}

QMatrix qmatrix_from_values(std::size_t rows, std::size_t cols, const std::vector<FieldValue>& entries) {
  if (entries.size() != rows * cols) throw MalformedInput("entry count does not match shape");
  QMatrix m(Rationals{}, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto* q = std::get_if<mpq_class>(&entries[i]);
    if (!q) throw MalformedInput("mixed-field entries: expected rationals");
    m(i / cols, i % cols) = *q;
  }
  return m;
}

FpMatrix fpmatrix_from_values(std::size_t rows, std::size_t cols, const std::vector<FieldValue>& entries) {
  if (entries.size() != rows * cols) throw MalformedInput("entry count does not match shape");
  if (entries.empty()) throw MalformedInput("cannot infer the field of an empty matrix");
  const auto* first = std::get_if<FpValue>(&entries[0]);
  if (!first) throw MalformedInput("mixed-field entries: expected F_p residues");
  PrimeField f(first->modulus);
  FpMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto* e = std::get_if<FpValue>(&entries[i]);
    if (!e || e->modulus != f.p) throw MalformedInput("mixed-field entries");
    if (e->residue >= f.p) throw MalformedInput("residue out of range");
    m(i / cols, i % cols) = e->residue;
  }
  return m;
}

FpMatrix reduce(const QMatrix& m, const PrimeField& f) {
  FpMatrix r(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = f.from_rational(m(i, j));
  return r;
}

FpVec reduce(const QVec& v, const PrimeField& f) {
  FpVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.from_rational(v[i]);
  return r;
}

}  // namespace springerlab
