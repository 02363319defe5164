#include "springerlab/ordinary.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "springerlab/errors.hpp"

namespace springerlab {

namespace {

// A tableau is the row of each entry; a tabloid is determined by that map.
using Tabloid = std::vector<int>;

struct SpechtData {
  Partition lambda;
  int n = 0;
  std::vector<std::vector<std::vector<int>>> standard;  // tableaux as rows of entries
  std::map<Tabloid, int> tabloid_index;
  QMatrix basis;  // tabloids x standard polytabloids
};

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda) {
  int n = size(lambda);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> t(lambda.size());
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      int c = static_cast<int>(t[r].size());
      if (c >= lambda[r]) continue;
      if (r > 0 && static_cast<int>(t[r - 1].size()) <= c) continue;
      t[r].push_back(x);
      rec(x + 1);
      t[r].pop_back();
    }
  };
  rec(0);
  return out;
}

// Polytabloid of a tableau (rows of entries) as a map tabloid -> coefficient.
std::map<Tabloid, long> polytabloid(const std::vector<std::vector<int>>& t, int n) {
  std::map<Tabloid, long> out;
  int cols = t.empty() ? 0 : static_cast<int>(t[0].size());
  // column groups: for each column, the entries top to bottom
  std::vector<std::vector<int>> columns(cols);
  for (const auto& row : t)
    for (std::size_t c = 0; c < row.size(); ++c) columns[c].push_back(row[c]);
  // iterate over products of column permutations
  std::vector<std::vector<int>> perms(cols);
  for (int c = 0; c < cols; ++c) {
    perms[c].resize(columns[c].size());
    std::iota(perms[c].begin(), perms[c].end(), 0);
  }
  std::function<void(int, long, Tabloid&)> rec = [&](int c, long sgn, Tabloid& tab) {
    if (c == cols) {
      out[tab] += sgn;
      return;
    }
    std::vector<int> p(columns[c].size());
    std::iota(p.begin(), p.end(), 0);
    do {
      // entry columns[c][k] moves to row p[k]
      int inv = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
      for (std::size_t k = 0; k < p.size(); ++k) tab[columns[c][k]] = p[k];
      rec(c + 1, inv % 2 ? -sgn : sgn, tab);
    } while (std::next_permutation(p.begin(), p.end()));
  };
  Tabloid tab(n, 0);
  rec(0, 1, tab);
  return out;
}

const SpechtData& specht_data(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, std::unique_ptr<SpechtData>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(lambda);
  if (it != memo.end()) return *it->second;
  auto d = std::make_unique<SpechtData>();
  d->lambda = lambda;
  d->n = size(lambda);
  d->standard = standard_tableaux(lambda);
  std::vector<std::map<Tabloid, long>> polys;
  for (const auto& t : d->standard) {
    polys.push_back(polytabloid(t, d->n));
    for (const auto& [tab, c] : polys.back()) d->tabloid_index.emplace(tab, 0);
  }
  // index every tabloid of shape lambda, not only those in the basis support
  std::function<void(int, Tabloid&, std::vector<int>&)> all = [&](int x, Tabloid& tab, std::vector<int>& fill) {
    if (x == d->n) {
      d->tabloid_index.emplace(tab, 0);
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r)
      if (fill[r] < lambda[r]) {
        ++fill[r];
        tab[x] = static_cast<int>(r);
        all(x + 1, tab, fill);
        --fill[r];
      }
  };
  Tabloid tab(d->n, 0);
  std::vector<int> fill(lambda.size(), 0);
  all(0, tab, fill);
  int k = 0;
  for (auto& [t, idx] : d->tabloid_index) idx = k++;
  d->basis = QMatrix(Rationals{}, d->tabloid_index.size(), d->standard.size());
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& [t, c] : polys[j]) d->basis(d->tabloid_index.at(t), j) = c;
  return *memo.emplace(lambda, std::move(d)).first->second;
}

}  // namespace

QMatrix specht_matrix(const Partition& lambda, const std::vector<int>& perm) {
  const SpechtData& d = specht_data(lambda);
  if (static_cast<int>(perm.size()) != d.n) throw MalformedInput("permutation size does not match partition");
  std::size_t dim = d.standard.size();
  QMatrix m(Rationals{}, dim, dim);
  if (d.n == 0) return QMatrix::identity(Rationals{}, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto t = d.standard[j];
    for (auto& row : t)
      for (auto& x : row) x = perm[x];
    QVec v(d.tabloid_index.size(), 0);
    for (const auto& [tab, c] : polytabloid(t, d.n)) v[d.tabloid_index.at(tab)] += c;
    auto x = solve(d.basis, v);
    if (!x) throw ComputationFailure("polytabloid outside the Specht span");
    for (std::size_t i = 0; i < dim; ++i) {
      if ((*x)[i].get_den() != 1) throw ComputationFailure("non-integral Specht coordinates");
      m(i, j) = (*x)[i];
    }
  }
  return m;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

QMatrix bn_module_matrix(const Partition& a, const Partition& b, const std::vector<int>& perm, const std::vector<int>& sign) {
  int n = static_cast<int>(perm.size());
  int ka = size(a);
  if (ka + size(b) != n) throw MalformedInput("bipartition size does not match the signed permutation");
  auto blocks = subsets(n, ka);
  std::map<std::vector<int>, int> block_index;
  for (std::size_t i = 0; i < blocks.size(); ++i) block_index[blocks[i]] = static_cast<int>(i);
  long da = hook_dimension(a), db = hook_dimension(b);
  std::size_t bs = static_cast<std::size_t>(da * db);
  QMatrix m(Rationals{}, blocks.size() * bs, blocks.size() * bs);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& A = blocks[bi];
    std::vector<bool> in(n, false);
    for (int x : A) in[x] = true;
    std::vector<int> Ac;
    for (int x = 0; x < n; ++x)
      if (!in[x]) Ac.push_back(x);
    std::vector<int> image;
    for (int x : A) image.push_back(perm[x]);
    std::vector<int> sorted_img = image;
    std::sort(sorted_img.begin(), sorted_img.end());
    std::vector<int> cimage;
    for (int x : Ac) cimage.push_back(perm[x]);
    std::vector<int> sorted_cimg = cimage;
    std::sort(sorted_cimg.begin(), sorted_cimg.end());
    std::vector<int> sigma(ka), tau(n - ka);
    for (int i = 0; i < ka; ++i) sigma[i] = static_cast<int>(std::lower_bound(sorted_img.begin(), sorted_img.end(), image[i]) - sorted_img.begin());
    long coeff = 1;
    for (int i = 0; i < n - ka; ++i) {
      tau[i] = static_cast<int>(std::lower_bound(sorted_cimg.begin(), sorted_cimg.end(), cimage[i]) - sorted_cimg.begin());
      coeff *= sign[Ac[i]];
    }
    QMatrix block = kron(specht_matrix(a, sigma), specht_matrix(b, tau));
    std::size_t bj = static_cast<std::size_t>(block_index.at(sorted_img));
    for (std::size_t i = 0; i < bs; ++i)
      for (std::size_t j = 0; j < bs; ++j) m(bj * bs + i, bi * bs + j) = coeff * block(i, j);
  }
  return m;
}

namespace {

QRep type_a(const WeylGroup& w, const IrrLabel& l) {
  std::vector<QMatrix> gens;
  for (int g = 0; g < w.num_generators(); ++g) {
    std::vector<int> perm, sign;
    w.signed_permutation(w.generator(g), perm, sign);
    gens.push_back(specht_matrix(l.a, perm));
  }
  return QRep(Rationals{}, gens[0].rows(), gens, w.name());
}

QRep type_bcd_unsplit(const WeylGroup& w, const Partition& a, const Partition& b) {
  std::vector<QMatrix> gens;
  for (int g = 0; g < w.num_generators(); ++g) {
    std::vector<int> perm, sign;
    w.signed_permutation(w.generator(g), perm, sign);
    gens.push_back(bn_module_matrix(a, b, perm, sign));
  }
  return QRep(Rationals{}, gens[0].rows(), gens, w.name());
}

// The two halves of chi^(a,a) restricted to D_n, in the order (+, -).
std::pair<QRep, QRep> d_split(const WeylGroup& wd, const Partition& a) {
  int n = wd.rank();
  auto wb = weyl_group(LieType::B, n);
  QRep vb = type_bcd_unsplit(*wb, a, a);
  std::vector<QMatrix> eta_gens;
  for (int g = 0; g < wb->num_generators(); ++g) eta_gens.push_back(vb.gens[g].scaled(g == n - 1 ? -1 : 1));
  QRep vb_eta(Rationals{}, vb.dim, eta_gens, vb.group);
  auto hom = hom_space(vb, vb_eta);
  if (hom.size() != 1) throw ComputationFailure("expected a one-dimensional intertwiner space for the D split");
  QMatrix j = hom[0];
  QMatrix j2 = j * j;
  mpq_class c = j2(0, 0);
  if (!(j2 == QMatrix::identity(Rationals{}, vb.dim).scaled(c))) throw ComputationFailure("intertwiner square is not scalar");
  // c must be a rational square
  mpz_class num = c.get_num(), den = c.get_den();
  mpz_class rn = sqrt(num), rd = sqrt(den);
  if (c <= 0 || rn * rn != num || rd * rd != den) throw ComputationFailure("D split: eigenvalues are not rational");
  mpq_class root(rn, rd);
  QRep vd = type_bcd_unsplit(wd, a, a);
  auto eigen = [&](const mpq_class& ev) {
    QMatrix shifted = j - QMatrix::identity(Rationals{}, vb.dim).scaled(ev);
    auto basis = kernel(shifted);
    Subspace<Rationals> s(Rationals{}, vb.dim);
    for (const auto& v : basis) s.insert(v);
    return split_module(vd, s).sub;
  };
  QRep p = eigen(root), m = eigen(-root);
  // "+" is the half with the larger trace on the first "+" split class where
  // the halves differ.
  for (const auto& cls : wd.classes()) {
    if (cls.label.empty() || cls.label.back() != '+') continue;
    mpq_class tp = element_matrix(p, wd, cls.representative).trace();
    mpq_class tm = element_matrix(m, wd, cls.representative).trace();
    if (tp == tm) continue;
    if (tp < tm) std::swap(p, m);
    return {p, m};
  }
  throw ComputationFailure("D split halves are indistinguishable");
}

QRep type_g2(const WeylGroup& w, const IrrLabel& l) {
  auto refl = [&](int g) {
    const auto& m = w.element(w.generator(g)).matrix;
    return QMatrix::from_ints(Rationals{}, {{m[0], m[1]}, {m[2], m[3]}});
  };
  std::vector<QMatrix> gens;
  auto lin = [&](long x, long y) {
    gens = {QMatrix::from_ints(Rationals{}, {{x}}), QMatrix::from_ints(Rationals{}, {{y}})};
  };
  if (l.name == "phi1,0") lin(1, 1);
  else if (l.name == "phi1,6") lin(-1, -1);
  else if (l.name == "phi'1,3") lin(-1, 1);
  else if (l.name == "phi''1,3") lin(1, -1);
  else if (l.name == "phi2,1") gens = {refl(0), refl(1)};
  else if (l.name == "phi2,2") gens = {refl(0).scaled(-1), refl(1)};
  else throw MalformedInput("unknown G2 label " + l.name);
  return QRep(Rationals{}, gens[0].rows(), gens, w.name());
}

}  // namespace

QRep ordinary_matrices(const WeylGroup& w, const IrrLabel& l) {
  if (l.type != w.type() || l.rank != w.rank() || !is_valid(l)) throw MalformedInput("label " + to_string(l) + " does not belong to " + w.name());
  switch (w.type()) {
    case LieType::A: return type_a(w, l);
    case LieType::B:
    case LieType::C: return type_bcd_unsplit(w, l.a, l.b);
    case LieType::D: {
      if (l.a != l.b) return type_bcd_unsplit(w, l.a, l.b);
      static std::mutex mu;
      static std::map<std::pair<int, Partition>, std::pair<QRep, QRep>> memo;
      std::pair<QRep, QRep> halves;
      {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({w.rank(), l.a});
        if (it != memo.end()) halves = it->second;
      }
      if (halves.first.dim == 0) {
        halves = d_split(w, l.a);
        std::lock_guard<std::mutex> lock(mu);
        memo.emplace(std::make_pair(w.rank(), l.a), halves);
      }
      return l.sign > 0 ? halves.first : halves.second;
    }
    case LieType::G2: return type_g2(w, l);
  }
  throw MalformedInput("unsupported type");
}

}  // namespace springerlab
