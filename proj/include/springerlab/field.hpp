#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "springerlab/errors.hpp"
#include "springerlab/simd/kernels.hpp"

namespace springerlab {

bool is_prime(std::uint64_t n);

/// The rationals, backed by GMP. Values are kept canonical (lowest terms).
struct Rationals {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_rational(const mpq_class& v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw ComputationFailure("division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool operator==(const Rationals&) const { return true; }
  std::string name() const { return "Q"; }
  std::string to_string(const value_type& a) const { return a.get_str(); }

  void axpy(value_type* dst, const value_type* src, const value_type& c, std::size_t n) const {
    if (sgn(c) == 0) return;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(src[i]) != 0) dst[i] += c * src[i];
  }
  void scale(value_type* dst, const value_type& c, std::size_t n) const {
    for (std::size_t i = 0; i < n; ++i) dst[i] *= c;
  }
};

/// F_p for a prime p < 2^31. Residues live in [0, p).
struct PrimeField {
  using value_type = std::uint32_t;
  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(static_cast<std::uint32_t>(prime)) {
    if (prime >= (1ull << 31) || !is_prime(prime))
      throw MalformedInput("not a supported prime: " + std::to_string(prime));
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  /// Throws if the denominator vanishes mod p.
  value_type from_rational(const mpq_class& v) const;
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t(a) * b % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool operator==(const PrimeField& o) const { return p == o.p; }
  std::string name() const { return "F_" + std::to_string(p); }
  std::string to_string(value_type a) const { return std::to_string(a); }

  void axpy(value_type* dst, const value_type* src, value_type c, std::size_t n) const {
    simd::active().axpy(dst, src, c, n, p);
  }
  void scale(value_type* dst, value_type c, std::size_t n) const {
    simd::active().scale(dst, c, n, p);
  }
};

}  // namespace springerlab
