#include "springerlab/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "springerlab/errors.hpp"

namespace springerlab {

namespace ipoly {

IPoly variable(int nvars, int i) {
  Exponent e(nvars, 0);
  e[i] = 1;
  return {{e, 1}};
}

IPoly constant(int nvars, long c) {
  if (c == 0) return {};
  return {{Exponent(nvars, 0), c}};
}

IPoly add(const IPoly& a, const IPoly& b) {
  IPoly r = a;
  for (const auto& [e, c] : b) {
    long& x = r[e];
    x += c;
    if (x == 0) r.erase(e);
  }
  return r;
}

IPoly scale(const IPoly& a, long c) {
  if (c == 0) return {};
  IPoly r;
  for (const auto& [e, x] : a) r[e] = x * c;
  return r;
}

IPoly mul(const IPoly& a, const IPoly& b) {
  IPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      long p;
      if (__builtin_mul_overflow(ca, cb, &p)) throw ComputationFailure("integer polynomial coefficient overflow");
      long& x = r[e];
      if (__builtin_add_overflow(x, p, &x)) throw ComputationFailure("integer polynomial coefficient overflow");
      if (x == 0) r.erase(e);
    }
  return r;
}

IPoly power(const IPoly& a, int e) {
  if (a.empty()) return e == 0 ? IPoly{} : IPoly{};
  IPoly r = constant(static_cast<int>(a.begin()->first.size()), 1);
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

IPoly linear(const std::vector<long>& coeffs) {
  IPoly r;
  int n = static_cast<int>(coeffs.size());
  for (int i = 0; i < n; ++i)
    if (coeffs[i]) r = add(r, scale(variable(n, i), coeffs[i]));
  return r;
}

IPoly substitute(const IPoly& a, const std::vector<IPoly>& forms) {
  IPoly r;
  int n = static_cast<int>(forms.size());
  for (const auto& [e, c] : a) {
    IPoly term = constant(n, c);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < e[j]; ++k) term = mul(term, forms[j]);
    r = add(r, term);
  }
  return r;
}

int degree(const IPoly& a) {
  int d = -1;
  for (const auto& [e, c] : a) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool is_homogeneous(const IPoly& a) {
  int d = -1;
  for (const auto& [e, c] : a) {
    int k = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && k != d) return false;
    d = k;
  }
  return true;
}

IPoly elementary(const std::vector<IPoly>& xs, int k) {
  int nvars = static_cast<int>(xs[0].begin()->first.size());
  // e_k via the recurrence over prefixes
  std::vector<IPoly> e(k + 1);
  e[0] = constant(nvars, 1);
  for (const auto& x : xs)
    for (int j = k; j >= 1; --j) e[j] = add(e[j], mul(e[j - 1], x));
  return e[k];
}

IPoly primitive(const IPoly& a) {
  long g = 0;
  for (const auto& [e, c] : a) g = std::gcd(g, std::labs(c));
  if (g == 0) return a;
  // leading term: the lexicographically largest exponent
  long lead = a.rbegin()->second;
  if (lead < 0) g = -g;
  IPoly r;
  for (const auto& [e, c] : a) r[e] = c / g;
  return r;
}

}  // namespace ipoly

std::vector<Exponent> monomials(int nvars, int d) {
  std::vector<Exponent> out;
  Exponent cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == nvars - 1) {
      cur[i] = rest;
      out.push_back(cur);
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur[i] = k;
      rec(i + 1, rest - k);
    }
  };
  if (nvars == 0) return d == 0 ? std::vector<Exponent>{Exponent{}} : out;
  rec(0, d);
  return out;
}

PolynomialModel polynomial_model(const RootSystem& rs) {
  PolynomialModel m;
  int n = rs.coord_dim;
  m.nvars = n;
  // variables are the coordinate functions on coweights; s acts by c -> s(c)
  for (int g = 0; g < rs.rank; ++g) {
    std::vector<IPoly> sub;
    for (int j = 0; j < n; ++j) {
      std::vector<long> row(n, 0);
      for (int k = 0; k < n; ++k) {
        IVec e(n, 0);
        e[k] = 1;
        row[k] = rs.reflect(g, e)[j];
      }
      sub.push_back(ipoly::linear(row));
    }
    m.generator_substitutions.push_back(std::move(sub));
  }
  for (int idx : rs.positive) {
    std::vector<long> row(n, 0);
    for (int k = 0; k < n; ++k) {
      IVec e(n, 0);
      e[k] = 1;
      row[k] = rs.pairing(rs.roots[idx], e);
    }
    m.positive_root_forms.push_back(ipoly::linear(row));
  }
  std::vector<IPoly> xs;
  for (int i = 0; i < n; ++i) xs.push_back(ipoly::variable(n, i));
  std::vector<IPoly> squares;
  for (const auto& x : xs) squares.push_back(ipoly::mul(x, x));
  switch (rs.type) {
    case LieType::A:
      for (int k = 1; k <= n; ++k) m.invariants.push_back(ipoly::elementary(xs, k));
      for (int k = 1; k <= n; ++k) m.fundamental_degrees.push_back(k);
      m.fundamental_degrees.erase(m.fundamental_degrees.begin());
      break;
    case LieType::B:
    case LieType::C:
      for (int k = 1; k <= n; ++k) {
        m.invariants.push_back(ipoly::elementary(squares, k));
        m.fundamental_degrees.push_back(2 * k);
      }
      break;
    case LieType::D: {
      for (int k = 1; k < n; ++k) {
        m.invariants.push_back(ipoly::elementary(squares, k));
        m.fundamental_degrees.push_back(2 * k);
      }
      m.invariants.push_back(ipoly::elementary(xs, n));
      m.fundamental_degrees.push_back(n);
      break;
    }
    case LieType::G2: {
      // quadratic form fixed by both reflections, and the square of the
      // product of the positive short roots
      m.invariants.push_back(ipoly::add(ipoly::add(ipoly::scale(squares[0], 3), ipoly::scale(ipoly::mul(xs[0], xs[1]), -3)), squares[1]));
      IPoly s = ipoly::constant(n, 1);
      for (std::size_t i = 0; i < rs.positive.size(); ++i)
        if (!rs.is_long(rs.positive[i])) s = ipoly::mul(s, m.positive_root_forms[i]);
      m.invariants.push_back(ipoly::mul(s, s));
      m.fundamental_degrees = {2, 6};
      break;
    }
  }
  // sanity: invariants are fixed by every generator
  for (const auto& f : m.invariants)
    for (const auto& sub : m.generator_substitutions)
      if (ipoly::substitute(f, sub) != f) throw ComputationFailure("fundamental invariant is not W-invariant for " + rs.name());
  return m;
}

}  // namespace springerlab
