#include <algorithm>
#include <deque>
#include <map>

#include "springerlab/decomposition.hpp"
#include "springerlab/errors.hpp"
#include "springerlab/meataxe.hpp"
#include "springerlab/oracle.hpp"
#include "springerlab/small_zero.hpp"

namespace springerlab {

namespace {

bool is_zero_vec(const FpVec& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

IVec shifted(const IVec& a, const IVec& b, long s) {
  IVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

long height(const RootSystem& rs, const IVec& mu) {
  long h = 0;
  for (int idx : rs.positive) h += rs.pairing(rs.roots[idx], mu);
  return h;
}

const RootSystem& roots_of(const ChevalleyRep& rep) {
  return weyl_group(rep.natural().g_type, rep.natural().rank)->roots();
}

FpVec to_quotient(const SimpleQuotient& l, const IVec& mu, const FpVec& ambient, const char* what) {
  auto it = l.delta.spaces.find(mu);
  if (it == l.delta.spaces.end()) {
    if (!is_zero_vec(ambient)) throw ComputationFailure(std::string(what) + ": image has a weight outside the module");
    return {};
  }
  auto c = it->second.coordinates(ambient);
  if (!c) throw ComputationFailure(std::string(what) + ": image leaves the highest-weight submodule");
  return l.projection.at(mu).apply(*c);
}

}  // namespace

std::size_t HighestWeightModule::dim() const {
  std::size_t d = 0;
  for (const auto& [w, s] : spaces) d += s.dim();
  return d;
}

std::size_t SimpleQuotient::dim() const {
  std::size_t d = 0;
  for (const auto& [w, l] : lifts) d += l.size();
  return d;
}

std::size_t SimpleQuotient::dim_at(const IVec& mu) const {
  auto it = lifts.find(mu);
  return it == lifts.end() ? 0 : it->second.size();
}

HighestWeightModule highest_weight_submodule(const ChevalleyRep& rep, const IVec& target) {
  const PrimeField& f = rep.field();
  const RootSystem& rs = roots_of(rep);
  int r = rs.rank;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < rep.dim(); ++i)
    if (rep.weight(i) == target) cols.push_back(i);
  if (cols.empty()) throw ComputationFailure("no ambient vector of weight " + to_string(target) + "; raise the tensor degree");
  // kernel of every raising divided power on the target weight space
  std::map<std::pair<int, std::size_t>, FpVec> rows;
  int op = 0;
  for (int i = 0; i < r; ++i)
    for (int k = 1; k <= rep.max_power(i); ++k, ++op)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        FpVec u(rep.dim(), 0);
        u[cols[j]] = 1;
        FpVec y = rep.apply_e(i, k, u);
        for (std::size_t t = 0; t < y.size(); ++t) {
          if (!y[t]) continue;
          auto& row = rows[{op, t}];
          if (row.empty()) row.assign(cols.size(), 0);
          row[j] = y[t];
        }
      }
  std::vector<FpVec> ker;
  if (rows.empty()) {
    FpVec e(cols.size(), 0);
    e[0] = 1;
    ker.push_back(e);
  } else {
    std::vector<FpVec> rv;
    for (auto& [key, row] : rows) rv.push_back(row);
    ker = kernel(FpMatrix::from_rows(f, rv, cols.size()));
  }
  if (ker.empty()) throw ComputationFailure("no highest-weight vector of weight " + to_string(target) + " in the ambient space");
  HighestWeightModule h;
  h.highest = target;
  h.generator.assign(rep.dim(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j) h.generator[cols[j]] = ker[0][j];
  std::deque<std::pair<IVec, FpVec>> queue;
  auto insert = [&](const IVec& w, const FpVec& v) {
    auto it = h.spaces.find(w);
    if (it == h.spaces.end()) it = h.spaces.emplace(w, FpSubspace(f, rep.dim())).first;
    if (it->second.insert(v)) queue.emplace_back(w, v);
  };
  insert(target, h.generator);
  while (!queue.empty()) {
    auto [w, v] = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < r; ++i)
      for (int k = 1; k <= rep.max_power(i); ++k) {
        FpVec y = rep.apply_f(i, k, v);
        if (!is_zero_vec(y)) insert(shifted(w, rs.simple_coroot(i), -k), y);
        FpVec z = rep.apply_e(i, k, v);
        if (!is_zero_vec(z)) insert(shifted(w, rs.simple_coroot(i), k), z);
      }
  }
  if (h.spaces.at(target).dim() != 1) throw ComputationFailure("highest weight space of the spun module is not one-dimensional");
  for (const auto& [w, s] : h.spaces) h.order.push_back(w);
  std::stable_sort(h.order.begin(), h.order.end(), [&](const IVec& a, const IVec& b) { return height(rs, a) > height(rs, b); });
  if (h.order.front() != target) throw ComputationFailure("spun module has a weight above the generator");
  return h;
}

SimpleQuotient simple_quotient(const ChevalleyRep& rep, HighestWeightModule delta) {
  const PrimeField& f = rep.field();
  const RootSystem& rs = roots_of(rep);
  SimpleQuotient l;
  l.delta = std::move(delta);
  for (const IVec& mu : l.delta.order) {
    const FpSubspace& s = l.delta.spaces.at(mu);
    if (mu == l.delta.highest) {
      l.projection[mu] = FpMatrix::identity(f, 1);
      l.lifts[mu] = {0};
      continue;
    }
    // u is in the radical iff every raising divided power lands in the radical
    std::vector<FpVec> rows;
    for (int i = 0; i < rs.rank; ++i)
      for (int k = 1; k <= rep.max_power(i); ++k) {
        IVec up = shifted(mu, rs.simple_coroot(i), k);
        auto it = l.delta.spaces.find(up);
        if (it == l.delta.spaces.end()) continue;
        const FpMatrix& p = l.projection.at(up);
        if (p.rows() == 0) continue;
        FpMatrix block(f, p.rows(), s.dim());
        for (std::size_t j = 0; j < s.dim(); ++j) {
          FpVec y = rep.apply_e(i, k, s.basis()[j]);
          auto c = it->second.coordinates(y);
          if (!c) throw ComputationFailure("raising operator leaves the highest-weight submodule");
          FpVec q = p.apply(*c);
          for (std::size_t t = 0; t < q.size(); ++t) block(t, j) = q[t];
        }
        for (std::size_t t = 0; t < block.rows(); ++t) rows.push_back(block.row_vec(t));
      }
    if (rows.empty()) {
      l.projection[mu] = FpMatrix(f, 0, s.dim());
      l.lifts[mu] = {};
      continue;
    }
    auto g = gauss(FpMatrix::from_rows(f, rows, s.dim()));
    FpMatrix p(f, g.rank, s.dim());
    for (std::size_t t = 0; t < g.rank; ++t)
      for (std::size_t j = 0; j < s.dim(); ++j) p(t, j) = g.rref(t, j);
    l.projection[mu] = std::move(p);
    l.lifts[mu] = g.pivots;
  }
  return l;
}

FpRep simple_module_rep(const ChevalleyRep& rep, const SimpleQuotient& l) {
  const PrimeField& f = rep.field();
  const RootSystem& rs = roots_of(rep);
  std::map<IVec, std::size_t> offset;
  std::size_t n = 0;
  for (const IVec& mu : l.delta.order) {
    offset[mu] = n;
    n += l.dim_at(mu);
  }
  std::vector<FpMatrix> gens;
  for (int i = 0; i < rs.rank; ++i)
    for (int k = 1; k <= rep.max_power(i); ++k)
      for (int sgn : {1, -1}) {
        FpMatrix m(f, n, n);
        bool nonzero = false;
        for (const IVec& mu : l.delta.order) {
          const auto& lifts = l.lifts.at(mu);
          IVec to = shifted(mu, rs.simple_coroot(i), sgn * k);
          for (std::size_t j = 0; j < lifts.size(); ++j) {
            const FpVec& b = l.delta.spaces.at(mu).basis()[lifts[j]];
            FpVec y = sgn > 0 ? rep.apply_e(i, k, b) : rep.apply_f(i, k, b);
            FpVec q = to_quotient(l, to, y, "simple module");
            for (std::size_t t = 0; t < q.size(); ++t)
              if (q[t]) {
                m(offset.at(to) + t, offset.at(mu) + j) = q[t];
                nonzero = true;
              }
          }
        }
        if (nonzero) gens.push_back(std::move(m));
      }
  for (const IVec& mu : l.delta.order) {
    if (l.dim_at(mu) == 0) continue;
    FpMatrix p(f, n, n);
    for (std::size_t j = 0; j < l.dim_at(mu); ++j) p(offset.at(mu) + j, offset.at(mu) + j) = 1;
    gens.push_back(std::move(p));
  }
  return FpRep(f, n, std::move(gens), rep.natural().dual_group);
}

FpRep zero_weight_W_module(const ChevalleyRep& rep, const SimpleQuotient& l, const IVec& zero, bool inverse_lift) {
  const PrimeField& f = rep.field();
  auto w = weyl_group(rep.natural().g_type, rep.natural().rank);
  std::size_t n = l.dim_at(zero);
  std::vector<FpMatrix> gens;
  for (int g = 0; g < w->rank(); ++g) {
    FpMatrix m(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const FpVec& b = l.delta.spaces.at(zero).basis()[l.lifts.at(zero)[j]];
      FpVec q = to_quotient(l, zero, rep.apply_n(g, b, inverse_lift), "Weyl lift");
      for (std::size_t t = 0; t < n; ++t) m(t, j) = q[t];
    }
    gens.push_back(std::move(m));
  }
  FpRep z(f, n, std::move(gens), w->name());
  if (!satisfies_weyl_relations(z, *w)) throw ComputationFailure("Weyl relations fail on the zero weight space");
  return z;
}

std::vector<OracleFactor> oracle_identify(const FpRep& z, LieType type, int rank, std::uint32_t ell, std::uint64_t seed) {
  std::vector<OracleFactor> out;
  if (z.dim == 0) return out;
  auto w = weyl_group(type, rank);
  auto d = decomposition_matrix(*w, ell, seed);
  for (const auto& fac : comp_factors(z, seed)) {
    OracleFactor o;
    o.dim = static_cast<long>(fac.module.dim);
    o.multiplicity = fac.multiplicity;
    auto idx = identify_simple(*d, fac.module);
    if (idx) {
      o.label = d->cols[*idx].label;
    } else {
      o.identified = false;
      o.label = "unidentified simple, dim " + std::to_string(o.dim);
    }
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const OracleFactor& a, const OracleFactor& b) { return a.label < b.label; });
  return out;
}

bool g2_oracle_enabled() {
#ifdef SPRINGERLAB_G2_ORACLE
  return true;
#else
  return false;
#endif
}

OracleResult run_oracle(LieType type, int rank, const IVec& lambda, std::uint32_t ell, std::uint64_t seed, std::size_t max_dim) {
  if (type == LieType::G2 && !g2_oracle_enabled()) throw Unsupported("the G2 oracle is disabled in this build");
  RootSystem rs = build_root_system(type, rank);
  if (static_cast<int>(lambda.size()) != rs.coord_dim) throw MalformedInput("coweight " + to_string(lambda) + " has the wrong length for " + rs.name());
  if (!rs.in_coweight_lattice(lambda)) throw MalformedInput("not in the coweight lattice: " + to_string(lambda));
  if (!is_dominant(rs, lambda)) throw MalformedInput("coweight is not dominant: " + to_string(lambda));
  if (!is_small(rs, lambda)) throw MalformedInput("coweight is not small: " + to_string(lambda));
  NaturalModule nat = natural_module(type, rank);
  int a = 0, b = 0;
  IVec shift(rs.coord_dim, 0);
  switch (type) {
    case LieType::A:
      if (lambda.back() >= -1) {
        a = rs.coord_dim;
        shift.assign(rs.coord_dim, 1);
      } else {
        b = rs.coord_dim;
        shift.assign(rs.coord_dim, -1);
      }
      break;
    case LieType::G2: {
      // smallest tensor degree whose weights reach lambda
      std::vector<IVec> reach{IVec(2, 0)};
      for (a = 0; std::find(reach.begin(), reach.end(), lambda) == reach.end(); ++a) {
        if (a > 4) throw ComputationFailure("no tensor power of the 7-dimensional module reaches " + to_string(lambda));
        std::vector<IVec> next;
        for (const auto& x : reach)
          for (const auto& w : nat.weights) next.push_back(shifted(x, w, 1));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reach = std::move(next);
      }
      break;
    }
    default:
      for (long x : lambda) a += static_cast<int>(std::labs(x));
  }
  IVec target = shifted(lambda, shift, 1);
  OracleResult res;
  res.group = nat.dual_group;
  res.type = type;
  res.rank = rank;
  res.lambda = lambda;
  res.ell = ell;
  ChevalleyRep rep(std::move(nat), ell, a, b, max_dim);
  res.ambient_dim = rep.dim();
  auto delta = highest_weight_submodule(rep, target);
  res.dim_weyl_surrogate = delta.dim();
  auto l = simple_quotient(rep, std::move(delta));
  res.dim_simple = l.dim();
  res.simple_certified = is_irreducible(simple_module_rep(rep, l), seed);
  if (!res.simple_certified) throw ComputationFailure("the quotient module failed the irreducibility certificate");
  FpRep z = zero_weight_W_module(rep, l, shift);
  FpRep z_alt = zero_weight_W_module(rep, l, shift, true);
  res.dim_zero_weight = z.dim;
  res.lift_independent = true;
  for (std::size_t g = 0; g < z.gens.size(); ++g)
    if (!(z.gens[g] == z_alt.gens[g])) res.lift_independent = false;
  res.factors = oracle_identify(z, type, rank, ell, seed);
  std::vector<std::string> found;
  for (const auto& fac : res.factors)
    for (int k = 0; k < fac.multiplicity; ++k) found.push_back(fac.label);
  auto compare = [&](std::vector<std::string> expected) {
    res.expected = expected;
    std::sort(expected.begin(), expected.end());
    std::sort(found.begin(), found.end());
    res.agrees_with_formula = expected == found;
  };
  if (type == LieType::A) {
    auto zw = zero_weight_typeA(lambda, ell);
    compare(zw.label ? std::vector<std::string>{zw.label_text()} : std::vector<std::string>{});
  } else if (type == LieType::G2) {
    if (ell > 2 && lambda == IVec{2, 3}) {
      res.expected = {"dim " + std::to_string(g2_recorded_zero_weight_dim(ell))};
      res.agrees_with_formula = static_cast<long>(res.dim_zero_weight) == g2_recorded_zero_weight_dim(ell);
    }
  } else if (ell > 2 && (type != LieType::D || rank >= 4)) {
    for (const auto& rec : table1_rows(type, rank, ell))
      if (rec.lambda == lambda) compare(rec.labels);
  }
  return res;
}

}  // namespace springerlab
