#include <algorithm>

#include "springerlab/meataxe.hpp"

namespace springerlab::fp_poly {

FpPoly trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly mul(const FpPoly& a, const FpPoly& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) f.axpy(r.data() + i, b.data(), a[i], b.size());
  return trim(r);
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, const PrimeField& f) {
  if (b.empty()) throw ComputationFailure("polynomial division by zero");
  FpPoly r = trim(a);
  if (r.size() < b.size()) return {{}, r};
  FpPoly q(r.size() - b.size() + 1, 0);
  auto inv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    auto c = f.mul(r[k + b.size() - 1], inv);
    q[k] = c;
    if (c) f.axpy(r.data() + k, b.data(), f.neg(c), b.size());
  }
  r.resize(b.size() - 1);
  return {trim(q), trim(r)};
}

FpPoly monic(const FpPoly& a, const PrimeField& f) {
  FpPoly r = trim(a);
  if (r.empty()) return r;
  f.scale(r.data(), f.inv(r.back()), r.size());
  return r;
}

FpPoly gcd(FpPoly a, FpPoly b, const PrimeField& f) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b, f).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, f);
}

FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& m, const PrimeField& f) {
  FpPoly r = {f.one()};
  base = divmod(base, m, f).second;
  while (e) {
    if (e & 1) r = divmod(mul(r, base, f), m, f).second;
    base = divmod(mul(base, base, f), m, f).second;
    e >>= 1;
  }
  return divmod(r, m, f).second;
}

FpPoly derivative(const FpPoly& a, const PrimeField& f) {
  if (a.size() <= 1) return {};
  FpPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(a[i], f.from_int(static_cast<long>(i)));
  return trim(d);
}

namespace {

FpPoly sub(FpPoly a, const FpPoly& b, const PrimeField& f) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  return trim(a);
}

// f' = 0: f(x) = g(x^p), and over F_p, g(x^p) = g(x)^p.
FpPoly pth_root(const FpPoly& a, const PrimeField& f) {
  FpPoly r;
  for (std::size_t i = 0; i < a.size(); i += f.p) r.push_back(a[i]);
  return trim(r);
}

void squarefree_parts(const FpPoly& a, const PrimeField& f, std::vector<FpPoly>& out) {
  if (degree(a) < 1) return;
  FpPoly d = derivative(a, f);
  if (d.empty()) {
    squarefree_parts(pth_root(a, f), f, out);
    return;
  }
  FpPoly c = gcd(a, d, f);
  FpPoly w = divmod(a, c, f).first;
  while (degree(w) > 0) {
    FpPoly y = gcd(w, c, f);
    FpPoly z = divmod(w, y, f).first;
    if (degree(z) > 0) out.push_back(monic(z, f));
    w = y;
    c = divmod(c, y, f).first;
  }
  if (degree(c) > 0) squarefree_parts(c, f, out);
}

// Frobenius x -> x^p applied d times, mod m.
FpPoly frobenius_power(const FpPoly& x, int d, const FpPoly& m, const PrimeField& f) {
  FpPoly r = x;
  for (int i = 0; i < d; ++i) r = powmod(r, f.p, m, f);
  return r;
}

void equal_degree(const FpPoly& g, int d, const PrimeField& f, Rng& rng, std::vector<FpPoly>& out) {
  if (degree(g) == d) {
    out.push_back(monic(g, f));
    return;
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FpPoly a(degree(g), 0);
    for (auto& c : a) c = static_cast<std::uint32_t>(rng.below(f.p));
    a = trim(a);
    if (degree(a) < 1) continue;
    FpPoly b;
    if (f.p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      FpPoly t = a, cur = a;
      for (int i = 1; i < d; ++i) {
        cur = divmod(mul(cur, cur, f), g, f).second;
        t.resize(std::max(t.size(), cur.size()), 0);
        for (std::size_t k = 0; k < cur.size(); ++k) t[k] = f.add(t[k], cur[k]);
        t = trim(t);
      }
      b = t;
    } else {
      // a^((p^d - 1)/2) = prod_i (a^((p-1)/2))^(p^i)
      FpPoly h = powmod(a, (f.p - 1) / 2, g, f);
      FpPoly acc = h;
      FpPoly cur = h;
      for (int i = 1; i < d; ++i) {
        cur = powmod(cur, f.p, g, f);
        acc = divmod(mul(acc, cur, f), g, f).second;
      }
      b = sub(acc, {f.one()}, f);
    }
    FpPoly c = gcd(b, g, f);
    if (degree(c) > 0 && degree(c) < degree(g)) {
      equal_degree(c, d, f, rng, out);
      equal_degree(divmod(g, c, f).first, d, f, rng, out);
      return;
    }
  }
  throw ComputationFailure("equal-degree factorisation did not split");
}

}  // namespace

std::vector<FpPoly> irreducible_factors(const FpPoly& a, const PrimeField& f, Rng& rng) {
  std::vector<FpPoly> parts, out;
  squarefree_parts(trim(a), f, parts);
  for (FpPoly g : parts) {
    FpPoly x = {0, f.one()};
    for (int d = 1; degree(g) > 0; ++d) {
      if (degree(g) < 2 * d) {
        out.push_back(monic(g, f));
        break;
      }
      FpPoly h = frobenius_power(x, d, g, f);
      FpPoly e = gcd(sub(h, x, f), g, f);
      if (degree(e) > 0) {
        equal_degree(e, d, f, rng, out);
        g = divmod(g, e, f).first;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FpPoly& u, const FpPoly& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FpPoly charpoly(const FpMatrix& m) {
  const PrimeField& f = m.field();
  std::size_t n = m.rows();
  FpMatrix h = m;
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    auto inv = f.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      auto u = f.mul(h(k, j), inv);
      for (std::size_t c = 0; c < n; ++c) h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  std::vector<FpPoly> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    // (x - h_kk) p_{k-1}
    FpPoly t = mul({f.neg(h(k - 1, k - 1)), f.one()}, p[k - 1], f);
    std::uint32_t prod = f.one();
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = f.mul(prod, h(i, i - 1));
      if (prod == 0) break;
      auto c = f.mul(h(i - 1, k - 1), prod);
      if (c) {
        FpPoly s = p[i - 1];
        f.scale(s.data(), c, s.size());
        t = sub(t, s, f);
      }
    }
    p[k] = t;
  }
  return p[n];
}

FpMatrix evaluate(const FpPoly& q, const FpMatrix& m) {
  const PrimeField& f = m.field();
  FpMatrix r(f, m.rows(), m.cols());
  for (std::size_t k = q.size(); k-- > 0;) {
    r = r * m;
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) = f.add(r(i, i), q[k]);
  }
  return r;
}

}  // namespace springerlab::fp_poly
