#include "springerlab/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "springerlab/errors.hpp"
#include "springerlab/linalg.hpp"
#include "springerlab/partition.hpp"

namespace springerlab {

std::string type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::G2: return "G";
  }
  return "?";
}

LieType parse_type(const std::string& s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "A") return LieType::A;
  if (u == "B") return LieType::B;
  if (u == "C") return LieType::C;
  if (u == "D") return LieType::D;
  if (u == "G" || u == "G2") return LieType::G2;
  throw MalformedInput("unknown Lie type: " + s);
}

LieType dual_type(LieType t) {
  if (t == LieType::B) return LieType::C;
  if (t == LieType::C) return LieType::B;
  return t;
}

namespace {

// G2 pairing <alpha_i, alpha_j^vee>, alpha_1 short.
const long kG2Pair[2][2] = {{2, -1}, {-3, 2}};
// G2 inner products (alpha_i, alpha_j) with short roots of squared length 2.
const long kG2Form[2][2] = {{2, -3}, {-3, 6}};

IVec unit(int n, int i, long v = 1) {
  IVec e(n, 0);
  e[i] = v;
  return e;
}

IVec add(IVec a, const IVec& b, long s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

bool lex_positive(const IVec& v) {
  for (long x : v)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

long RootSystem::pairing(const IVec& root, const IVec& coweight) const {
  long s = 0;
  if (type == LieType::G2) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += root[i] * kG2Pair[i][j] * coweight[j];
    return s;
  }
  for (int i = 0; i < coord_dim; ++i) s += root[i] * coweight[i];
  return s;
}

namespace {

// Coefficients of a root on the simple roots.
std::vector<mpq_class> simple_coefficients(const RootSystem& rs, const IVec& root) {
  if (rs.type == LieType::G2) return {mpq_class(root[0]), mpq_class(root[1])};
  QMatrix a(Rationals{}, rs.coord_dim, rs.rank);
  for (int j = 0; j < rs.rank; ++j)
    for (int i = 0; i < rs.coord_dim; ++i) a(i, j) = rs.simple_root(j)[i];
  QVec b(root.begin(), root.end());
  auto x = solve(a, b);
  if (!x) throw ComputationFailure("root outside the span of the simple roots");
  return *x;
}

}  // namespace

int RootSystem::highest_root() const {
  int best = positive[0];
  mpq_class best_h = -1;
  for (int idx : positive) {
    mpq_class h = 0;
    for (const auto& c : simple_coefficients(*this, roots[idx])) h += c;
    if (h > best_h) {
      best_h = h;
      best = idx;
    }
  }
  return best;
}

bool RootSystem::is_long(int idx) const {
  auto len = [&](const IVec& r) {
    long s = 0;
    if (type == LieType::G2) {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += r[i] * kG2Form[i][j] * r[j];
      return s;
    }
    for (long x : r) s += x * x;
    return s;
  };
  long mx = 0;
  for (const auto& r : roots) mx = std::max(mx, len(r));
  return len(roots[idx]) == mx;
}

IVec RootSystem::reflect(int i, const IVec& c) const {
  return add(c, simple_coroot(i), -pairing(simple_root(i), c));
}

bool RootSystem::in_coweight_lattice(const IVec& v) const {
  if (static_cast<int>(v.size()) != coord_dim) return false;
  long sum = 0;
  for (long x : v) sum += x;
  switch (type) {
    case LieType::A: return sum == 0;
    case LieType::B:
    case LieType::D: return sum % 2 == 0;
    case LieType::C:
    case LieType::G2: return true;
  }
  return false;
}

RootSystem build_root_system(LieType type, int n) {
  RootSystem rs;
  rs.type = type;
  rs.rank = n;
  auto bad = [&] { throw Unsupported("unsupported root system " + type_name(type) + std::to_string(n)); };
  if (n < 1 || n > 8) bad();
  switch (type) {
    case LieType::A: {
      int d = n + 1;
      rs.coord_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) {
            IVec r = add(unit(d, i), unit(d, j), -1);
            rs.roots.push_back(r);
            rs.coroots.push_back(r);
          }
      rs.weyl_order = factorial(d);
      break;
    }
    case LieType::B:
    case LieType::C:
    case LieType::D: {
      if ((type == LieType::D && n < 3) || ((type == LieType::B || type == LieType::C) && n < 2)) bad();
      rs.coord_dim = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              IVec r = add(unit(n, i, si), unit(n, j, sj));
              rs.roots.push_back(r);
              rs.coroots.push_back(r);
            }
      if (type != LieType::D)
        for (int i = 0; i < n; ++i)
          for (int s : {1, -1}) {
            IVec shortish = unit(n, i, s), doubled = unit(n, i, 2 * s);
            rs.roots.push_back(type == LieType::B ? shortish : doubled);
            rs.coroots.push_back(type == LieType::B ? doubled : shortish);
          }
      rs.weyl_order = (long(1) << (type == LieType::D ? n - 1 : n)) * factorial(n);
      break;
    }
    case LieType::G2: {
      if (n != 2) bad();
      rs.coord_dim = 2;
      const std::vector<IVec> pos = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
      for (const auto& r : pos) {
        long len = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) len += r[i] * kG2Form[i][j] * r[j];
        // coroot = 2 r / (r,r) written in simple coroots: coefficient a_i (alpha_i,alpha_i)/(r,r)
        IVec co = {r[0] * kG2Form[0][0] / len, r[1] * kG2Form[1][1] / len};
        for (int s : {1, -1}) {
          rs.roots.push_back({s * r[0], s * r[1]});
          rs.coroots.push_back({s * co[0], s * co[1]});
        }
      }
      rs.weyl_order = 12;
      break;
    }
  }
  for (int i = 0; i < static_cast<int>(rs.roots.size()); ++i)
    if (lex_positive(rs.roots[i])) rs.positive.push_back(i);
  auto find = [&](const IVec& r) {
    for (int i = 0; i < static_cast<int>(rs.roots.size()); ++i)
      if (rs.roots[i] == r) return i;
    throw ComputationFailure("simple root missing from root list");
  };
  int d = rs.coord_dim;
  switch (type) {
    case LieType::A:
      for (int i = 0; i < n; ++i) rs.simple.push_back(find(add(unit(d, i), unit(d, i + 1), -1)));
      break;
    case LieType::B:
    case LieType::C:
      for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(find(add(unit(d, i), unit(d, i + 1), -1)));
      rs.simple.push_back(find(unit(d, n - 1, type == LieType::B ? 1 : 2)));
      break;
    case LieType::D:
      for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(find(add(unit(d, i), unit(d, i + 1), -1)));
      rs.simple.push_back(find(add(unit(d, n - 2), unit(d, n - 1))));
      break;
    case LieType::G2:
      rs.simple = {find({1, 0}), find({0, 1})};
      break;
  }
  return rs;
}

bool is_dominant(const RootSystem& rs, const IVec& c) {
  for (int i = 0; i < rs.rank; ++i)
    if (rs.pairing(rs.simple_root(i), c) < 0) return false;
  return true;
}

IVec dominant_rep(const RootSystem& rs, IVec c) {
  if (static_cast<int>(c.size()) != rs.coord_dim) throw MalformedInput("coweight has wrong length for " + rs.name());
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i)
      if (rs.pairing(rs.simple_root(i), c) < 0) {
        c = rs.reflect(i, c);
        moved = true;
      }
  }
  return c;
}

bool leq_dominance(const RootSystem& rs, const IVec& mu, const IVec& lambda) {
  if (!is_dominant(rs, mu) || !is_dominant(rs, lambda)) throw MalformedInput("leq_dominance needs dominant coweights");
  QMatrix a(Rationals{}, rs.coord_dim, rs.rank);
  for (int j = 0; j < rs.rank; ++j)
    for (int i = 0; i < rs.coord_dim; ++i) a(i, j) = rs.simple_coroot(j)[i];
  QVec b(rs.coord_dim);
  for (int i = 0; i < rs.coord_dim; ++i) b[i] = lambda[i] - mu[i];
  auto x = solve(a, b);
  if (!x) return false;
  for (const auto& c : *x)
    if (sgn(c) < 0) return false;
  return true;
}

std::vector<IVec> doubled_coroot_reps(const RootSystem& rs) {
  std::set<IVec> reps;
  for (const auto& co : rs.coroots) {
    IVec d = co;
    for (auto& x : d) x *= 2;
    reps.insert(dominant_rep(rs, d));
  }
  return {reps.begin(), reps.end()};
}

namespace {

bool small_against(const RootSystem& rs, const std::vector<IVec>& reps, const IVec& lambda) {
  for (const auto& d : reps)
    if (leq_dominance(rs, d, lambda)) return false;
  return true;
}

}  // namespace

bool is_small(const RootSystem& rs, const IVec& lambda) {
  return small_against(rs, doubled_coroot_reps(rs), lambda);
}

long small_search_bound(const RootSystem& rs) {
  // Dominant lambda below B := dominant(2 theta^vee) + rho^vee in dominance
  // have every coordinate bounded by max |B_i|.
  IVec top = rs.coroots[rs.highest_root()];
  for (auto& x : top) x *= 2;
  top = dominant_rep(rs, top);
  std::vector<mpq_class> rho(rs.coord_dim, 0);
  for (int idx : rs.positive)
    for (int i = 0; i < rs.coord_dim; ++i) rho[i] += mpq_class(rs.coroots[idx][i], 2);
  mpq_class m = 0;
  for (int i = 0; i < rs.coord_dim; ++i) m = std::max(m, mpq_class(abs(top[i] + rho[i])));
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  return c.get_si();
}

std::vector<IVec> enumerate_small(const RootSystem& rs) { return enumerate_small(rs, small_search_bound(rs)); }

std::vector<IVec> enumerate_small(const RootSystem& rs, long bound) {
  const auto reps = doubled_coroot_reps(rs);
  std::vector<IVec> out;
  IVec v(rs.coord_dim, -bound);
  for (;;) {
    if (rs.in_coweight_lattice(v) && is_dominant(rs, v) && small_against(rs, reps, v)) out.push_back(v);
    int i = 0;
    while (i < rs.coord_dim && v[i] == bound) v[i++] = -bound;
    if (i == rs.coord_dim) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

IVec parse_ivec(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' && c != ']') s += c;
  IVec v;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    try {
      std::size_t used = 0;
      v.push_back(std::stol(s.substr(i, j - i), &used));
      if (used != j - i) throw MalformedInput("bad integer in vector: " + raw);
    } catch (const std::logic_error&) {
      throw MalformedInput("bad integer in vector: " + raw);
    }
    i = j + 1;
  }
  return v;
}

}  // namespace springerlab
