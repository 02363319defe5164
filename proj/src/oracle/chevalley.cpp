#include <algorithm>

#include "springerlab/errors.hpp"
#include "springerlab/oracle.hpp"

namespace springerlab {

NatMatrix NatMatrix::identity(int dim) {
  NatMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

NatMatrix NatMatrix::operator*(const NatMatrix& o) const {
  NatMatrix r(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      long x = (*this)(i, k);
      if (x)
        for (int j = 0; j < d; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

NatMatrix NatMatrix::operator+(const NatMatrix& o) const {
  NatMatrix r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

NatMatrix NatMatrix::operator-(const NatMatrix& o) const {
  NatMatrix r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

NatMatrix NatMatrix::transpose() const {
  NatMatrix r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool NatMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

namespace {

IVec unit(int n, int i, long s = 1) {
  IVec v(n, 0);
  v[i] = s;
  return v;
}

IVec add(const IVec& a, const IVec& b, long s = 1) {
  IVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

/// Signed index s in {+-1..+-n} (and 0 when `zero`) to a basis position:
/// e_1..e_n, [e_0], e_-n..e_-1.
int pos(int s, int n, bool zero) {
  if (s > 0) return s - 1;
  if (s == 0) return n;
  return (zero ? 2 * n + 1 : 2 * n) + s;
}

std::vector<NatMatrix> divided_powers(const NatMatrix& x) {
  std::vector<NatMatrix> out{NatMatrix::identity(x.d)};
  NatMatrix p = NatMatrix::identity(x.d);
  for (int k = 1;; ++k) {
    p = p * x;
    if (p.is_zero()) break;
    NatMatrix q = p;
    long fact = 1;
    for (int j = 2; j <= k; ++j) fact *= j;
    for (auto& v : q.a) {
      if (v % fact) throw ComputationFailure("divided power is not integral on the natural module");
      v /= fact;
    }
    out.push_back(q);
    if (k > x.d) throw ComputationFailure("root operator is not nilpotent");
  }
  return out;
}

NatMatrix exp_sum(const std::vector<NatMatrix>& div, long t) {
  NatMatrix r(div[0].d);
  long tk = 1;
  for (const auto& m : div) {
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += tk * m.a[i];
    tk *= t;
  }
  return r;
}

void build_classical(NaturalModule& nm, const RootSystem& rs) {
  int n = rs.rank;
  int c = rs.coord_dim;
  auto set = [&](NatMatrix& m, int to, int from, long v) { m(to, from) = v; };
  switch (rs.type) {
    case LieType::A: {
      nm.dim = n + 1;
      nm.dual_group = "SL_" + std::to_string(n + 1);
      for (int a = 0; a <= n; ++a) nm.weights.push_back(unit(c, a));
      for (int i = 0; i < n; ++i) {
        NatMatrix e(nm.dim);
        set(e, i, i + 1, 1);
        nm.e.push_back(e);
        nm.f.push_back(e.transpose());
      }
      return;
    }
    case LieType::B:
    case LieType::C:
    case LieType::D: {
      bool zero = rs.type == LieType::C;
      nm.dim = 2 * n + (zero ? 1 : 0);
      nm.dual_group = rs.type == LieType::B ? "Sp_" + std::to_string(2 * n) : "SO_" + std::to_string(nm.dim);
      nm.weights.assign(nm.dim, IVec(c, 0));
      for (int s = 1; s <= n; ++s) {
        nm.weights[pos(s, n, zero)] = unit(c, s - 1);
        nm.weights[pos(-s, n, zero)] = unit(c, s - 1, -1);
      }
      for (int i = 1; i < n; ++i) {
        NatMatrix e(nm.dim);
        set(e, pos(i, n, zero), pos(i + 1, n, zero), 1);
        set(e, pos(-(i + 1), n, zero), pos(-i, n, zero), -1);
        nm.e.push_back(e);
        nm.f.push_back(e.transpose());
      }
      NatMatrix e(nm.dim), f(nm.dim);
      if (rs.type == LieType::B) {
        set(e, pos(n, n, zero), pos(-n, n, zero), 1);
        f = e.transpose();
      } else if (rs.type == LieType::C) {
        set(e, pos(0, n, zero), pos(-n, n, zero), -1);
        set(e, pos(n, n, zero), pos(0, n, zero), 2);
        set(f, pos(0, n, zero), pos(n, n, zero), 1);
        set(f, pos(-n, n, zero), pos(0, n, zero), -2);
      } else {
        set(e, pos(n - 1, n, zero), pos(-n, n, zero), 1);
        set(e, pos(n, n, zero), pos(-(n - 1), n, zero), -1);
        f = e.transpose();
      }
      nm.e.push_back(e);
      nm.f.push_back(f);
      return;
    }
    default:
      break;
  }
}

void build_g2(NaturalModule& nm) {
  // weights in the basis (a, b) = (long, short) simple roots of the dual group
  nm.dim = 7;
  nm.dual_group = "G2";
  nm.weights = {{1, 2}, {1, 1}, {0, 1}, {0, 0}, {0, -1}, {-1, -1}, {-1, -2}};
  NatMatrix es(7), fs(7), el(7), fl(7);
  // short simple root b
  es(0, 1) = 1;
  es(2, 3) = 2;
  es(3, 4) = 1;
  es(5, 6) = 1;
  fs(1, 0) = 1;
  fs(3, 2) = 1;
  fs(4, 3) = 2;
  fs(6, 5) = 1;
  // long simple root a
  el(1, 2) = 1;
  el(4, 5) = 1;
  fl = el.transpose();
  // generator 0 of G is the long root of the dual group
  nm.e = {el, es};
  nm.f = {fl, fs};
}

}  // namespace

NaturalModule natural_module(LieType type, int rank) {
  RootSystem rs = build_root_system(type, rank);
  NaturalModule nm;
  nm.g_type = type;
  nm.rank = rank;
  if (type == LieType::G2)
    build_g2(nm);
  else
    build_classical(nm, rs);
  int r = rs.rank;
  // weights shift by exactly the simple root
  for (int i = 0; i < r; ++i) {
    const IVec& beta = rs.simple_coroot(i);
    for (int row = 0; row < nm.dim; ++row)
      for (int col = 0; col < nm.dim; ++col) {
        if (nm.e[i](row, col) && nm.weights[row] != add(nm.weights[col], beta))
          throw ComputationFailure(nm.dual_group + ": raising operator does not shift weights by the simple root");
        if (nm.f[i](row, col) && nm.weights[row] != add(nm.weights[col], beta, -1))
          throw ComputationFailure(nm.dual_group + ": lowering operator does not shift weights by the simple root");
      }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      NatMatrix comm = nm.e[i] * nm.f[j] - nm.f[j] * nm.e[i];
      NatMatrix h(nm.dim);
      if (i == j)
        for (int v = 0; v < nm.dim; ++v) h(v, v) = rs.pairing(rs.simple_root(i), nm.weights[v]);
      if (!(comm == h)) throw ComputationFailure(nm.dual_group + ": [E_i, F_j] relation fails");
      if (i == j) continue;
      long a = rs.pairing(rs.simple_root(i), rs.simple_coroot(j));
      for (const auto* side : {&nm.e, &nm.f}) {
        NatMatrix x = (*side)[j];
        for (long k = 0; k < 1 - a; ++k) x = (*side)[i] * x - x * (*side)[i];
        if (!x.is_zero()) throw ComputationFailure(nm.dual_group + ": Serre relation fails");
      }
    }
  for (int i = 0; i < r; ++i) {
    nm.e_div.push_back(divided_powers(nm.e[i]));
    nm.f_div.push_back(divided_powers(nm.f[i]));
    NatMatrix x = exp_sum(nm.e_div[i], 1), y = exp_sum(nm.f_div[i], -1);
    NatMatrix xi = exp_sum(nm.e_div[i], -1), yi = exp_sum(nm.f_div[i], 1);
    nm.n_lift.push_back(x * y * x);
    nm.n_lift_inverse.push_back(xi * yi * xi);
    if (!(nm.n_lift.back() * nm.n_lift_inverse.back() == NatMatrix::identity(nm.dim)))
      throw ComputationFailure(nm.dual_group + ": Weyl lift is not invertible");
  }
  return nm;
}

ChevalleyRep::ChevalleyRep(NaturalModule nat, std::uint32_t ell, int copies, int dual_copies, std::size_t max_dim)
    : nat_(std::move(nat)), field_(ell), m_(copies + dual_copies), b_(dual_copies) {
  if (copies < 0 || dual_copies < 0) throw MalformedInput("negative tensor degree");
  dim_ = 1;
  for (int i = 0; i < m_; ++i) {
    dim_ *= nat_.dim;
    if (dim_ > max_dim)
      throw Unsupported("ambient dimension " + std::to_string(nat_.dim) + "^" + std::to_string(m_) + " exceeds the bound " + std::to_string(max_dim));
  }
  stride_.assign(m_, 1);
  for (int i = m_ - 2; i >= 0; --i) stride_[i] = stride_[i + 1] * nat_.dim;
}

IVec ChevalleyRep::weight(std::size_t idx) const {
  IVec w(nat_.weights[0].size(), 0);
  for (int p = 0; p < m_; ++p) {
    int digit = static_cast<int>((idx / stride_[p]) % nat_.dim);
    w = add(w, nat_.weights[digit], p < m_ - b_ ? 1 : -1);
  }
  return w;
}

int ChevalleyRep::max_power(int gen) const {
  return m_ * static_cast<int>(std::max(nat_.e_div[gen].size(), nat_.f_div[gen].size()) - 1);
}

ChevalleyRep::Sparse ChevalleyRep::sparse(const NatMatrix& m, bool dual_transpose, bool negate_odd, int power) const {
  Sparse s;
  s.by_col.resize(nat_.dim);
  bool neg = negate_odd && power % 2;
  for (int r = 0; r < nat_.dim; ++r)
    for (int c = 0; c < nat_.dim; ++c) {
      long v = dual_transpose ? m(c, r) : m(r, c);
      if (!v) continue;
      s.by_col[c].push_back({r, field_.from_int(neg ? -v : v)});
    }
  return s;
}

FpVec ChevalleyRep::apply_factor(const Sparse& s, int position, const FpVec& v) const {
  FpVec out(dim_, 0);
  std::size_t st = stride_[position];
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    auto x = v[idx];
    if (!x) continue;
    int digit = static_cast<int>((idx / st) % nat_.dim);
    for (auto [r, val] : s.by_col[digit]) {
      std::size_t to = idx + (static_cast<long>(r) - digit) * static_cast<long>(st);
      out[to] = field_.add(out[to], field_.mul(val, x));
    }
  }
  return out;
}

FpVec ChevalleyRep::apply_divided(const std::vector<NatMatrix>& div, int k, const FpVec& v) const {
  if (v.size() != dim_) throw MalformedInput("vector length does not match the ambient module");
  if (k == 0) return v;
  int top = static_cast<int>(div.size()) - 1;
  if (k > top * m_) return FpVec(dim_, 0);
  // coefficients of t^0..t^k in the product over factors of sum_a t^a X^(a)
  std::vector<FpVec> c(k + 1, FpVec(dim_, 0));
  c[0] = v;
  std::vector<Sparse> plain, dual;
  for (int a = 1; a <= top; ++a) {
    plain.push_back(sparse(div[a], false, false, a));
    dual.push_back(sparse(div[a], true, true, a));
  }
  for (int p = 0; p < m_; ++p) {
    bool is_dual = p >= m_ - b_;
    std::vector<FpVec> next = c;
    for (int t = 1; t <= k; ++t)
      for (int a = 1; a <= std::min(t, top); ++a) {
        const FpVec& src = c[t - a];
        if (std::all_of(src.begin(), src.end(), [](auto x) { return x == 0; })) continue;
        FpVec y = apply_factor(is_dual ? dual[a - 1] : plain[a - 1], p, src);
        field_.axpy(next[t].data(), y.data(), 1, dim_);
      }
    c = std::move(next);
  }
  return c[k];
}

FpVec ChevalleyRep::apply_e(int gen, int k, const FpVec& v) const { return apply_divided(nat_.e_div.at(gen), k, v); }
FpVec ChevalleyRep::apply_f(int gen, int k, const FpVec& v) const { return apply_divided(nat_.f_div.at(gen), k, v); }

FpVec ChevalleyRep::apply_n(int gen, const FpVec& v, bool inverse) const {
  const NatMatrix& n = inverse ? nat_.n_lift_inverse.at(gen) : nat_.n_lift.at(gen);
  const NatMatrix& ninv = inverse ? nat_.n_lift.at(gen) : nat_.n_lift_inverse.at(gen);
  Sparse plain = sparse(n, false, false, 0);
  Sparse dual = sparse(ninv, true, false, 0);
  FpVec out = v;
  for (int p = 0; p < m_; ++p) out = apply_factor(p >= m_ - b_ ? dual : plain, p, out);
  return out;
}

}  // namespace springerlab
