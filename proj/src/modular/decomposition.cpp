#include "springerlab/decomposition.hpp"

#include <map>
#include <mutex>

#include "springerlab/ordinary.hpp"

namespace springerlab {

std::vector<std::string> DecompositionMatrix::row_labels() const {
  std::vector<std::string> r;
  for (const auto& l : rows) r.push_back(to_string(l));
  return r;
}

std::vector<std::string> DecompositionMatrix::col_labels() const {
  std::vector<std::string> r;
  for (const auto& c : cols) r.push_back(c.label);
  return r;
}

bool uses_head_labels(LieType type, std::uint32_t ell) {
  switch (type) {
    case LieType::A: return true;
    case LieType::B:
    case LieType::C:
    case LieType::D: return ell != 2;
    case LieType::G2: return 12 % ell != 0;
  }
  return false;
}

bool is_regular_label(const IrrLabel& l, std::uint32_t ell) {
  int e = static_cast<int>(ell);
  switch (l.type) {
    case LieType::A: return is_regular(l.a, e);
    case LieType::B:
    case LieType::C:
    case LieType::D: return is_regular(l.a, e) && is_regular(l.b, e);
    case LieType::G2: return true;
  }
  return false;
}

namespace {

std::shared_ptr<const DecompositionMatrix> compute(const WeylGroup& w, std::uint32_t ell, std::uint64_t seed) {
  auto d = std::make_shared<DecompositionMatrix>();
  d->type = w.type();
  d->rank = w.rank();
  d->ell = ell;
  d->seed = seed;
  d->rows = all_irr_labels(w.type(), w.rank());
  d->order_note = "rows in the fixed label order (lexicographically decreasing, refining dominance); columns ordered by the row whose head names them";
  std::vector<FpRep> reduced;
  std::vector<std::vector<Factor>> factors;
  for (const auto& l : d->rows) {
    reduced.push_back(reduce_mod(ordinary_matrices(w, l), ell));
    factors.push_back(comp_factors(reduced.back(), seed));
  }
  // distinct simples
  std::vector<FpRep> simples;
  std::vector<int> first_row;
  std::vector<std::vector<long>> mult(d->rows.size());
  for (std::size_t r = 0; r < d->rows.size(); ++r) {
    for (const auto& f : factors[r]) {
      int idx = -1;
      for (std::size_t s = 0; s < simples.size(); ++s)
        if (is_isomorphic(simples[s], f.module, seed)) {
          idx = static_cast<int>(s);
          break;
        }
      if (idx < 0) {
        idx = static_cast<int>(simples.size());
        simples.push_back(f.module);
        first_row.push_back(static_cast<int>(r));
      }
      mult[r].resize(simples.size(), 0);
      mult[r][idx] += f.multiplicity;
    }
  }
  for (auto& row : mult) row.resize(simples.size(), 0);

  std::vector<int> source(simples.size(), -1);
  if (uses_head_labels(w.type(), ell)) {
    for (std::size_t r = 0; r < d->rows.size(); ++r) {
      if (!is_regular_label(d->rows[r], ell)) continue;
      int head = -1;
      long total = 0;
      for (std::size_t s = 0; s < simples.size(); ++s) {
        if (mult[r][s] == 0) continue;
        long h = head_multiplicity(reduced[r], simples[s]);
        total += h;
        if (h > 0) head = static_cast<int>(s);
      }
      if (total != 1) throw ComputationFailure("ambiguous head: reduction of " + to_string(d->rows[r]) + " mod " + std::to_string(ell) + " does not have a simple head");
      if (source[head] >= 0) throw ComputationFailure("ambiguous head: " + to_string(d->rows[r]) + " and " + to_string(d->rows[source[head]]) + " name the same simple");
      source[head] = static_cast<int>(r);
    }
    for (std::size_t s = 0; s < simples.size(); ++s)
      if (source[s] < 0) throw ComputationFailure("simple of dimension " + std::to_string(simples[s].dim) + " is not the head of any regular label");
  }
  // column order
  std::vector<std::size_t> order(simples.size());
  for (std::size_t s = 0; s < simples.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    int rx = source[x] >= 0 ? source[x] : first_row[x];
    int ry = source[y] >= 0 ? source[y] : first_row[y];
    if (rx != ry) return rx < ry;
    if (simples[x].dim != simples[y].dim) return simples[x].dim < simples[y].dim;
    std::vector<std::uint32_t> tx, ty;
    for (const auto& g : simples[x].gens) tx.push_back(g.trace());
    for (const auto& g : simples[y].gens) ty.push_back(g.trace());
    return tx < ty;
  });
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t s = order[k];
    ModularSimple c;
    c.module = simples[s];
    c.dim = static_cast<long>(simples[s].dim);
    c.source_row = source[s];
    c.opaque = source[s] < 0;
    c.label = c.opaque ? "simple#" + std::to_string(k + 1) + ", dim " + std::to_string(c.dim) : modular_label_text(d->rows[source[s]]);
    d->cols.push_back(std::move(c));
  }
  d->entries.assign(d->rows.size(), std::vector<long>(order.size(), 0));
  for (std::size_t r = 0; r < d->rows.size(); ++r)
    for (std::size_t k = 0; k < order.size(); ++k) d->entries[r][k] = mult[r][order[k]];
  if (!brauer_identity_holds(*d)) throw ComputationFailure("Brauer dimension identity fails for " + d->group() + " mod " + std::to_string(ell));
  if (uses_head_labels(w.type(), ell) && !is_unitriangular(*d))
    throw ComputationFailure("decomposition matrix of " + d->group() + " mod " + std::to_string(ell) + " is not unitriangular in the documented order");
  return d;
}

}  // namespace

std::shared_ptr<const DecompositionMatrix> decomposition_matrix(const WeylGroup& w, std::uint32_t ell, std::uint64_t seed) {
  PrimeField check(ell);
  (void)check;
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::uint32_t, std::uint64_t>, std::shared_ptr<const DecompositionMatrix>> memo;
  auto key = std::make_tuple(static_cast<int>(w.type()), w.rank(), ell, seed);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto d = compute(w, ell, seed);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, d).first->second;
}

bool brauer_identity_holds(const DecompositionMatrix& d) {
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    long total = 0;
    for (std::size_t c = 0; c < d.cols.size(); ++c) total += d.entries[r][c] * d.cols[c].dim;
    if (total != label_dimension(d.rows[r])) return false;
  }
  return true;
}

bool is_unitriangular(const DecompositionMatrix& d) {
  for (std::size_t c = 0; c < d.cols.size(); ++c) {
    int src = d.cols[c].source_row;
    if (src < 0) return false;
    if (d.entries[src][c] != 1) return false;
    for (int r = 0; r < src; ++r)
      if (d.entries[r][c] != 0) return false;
  }
  return true;
}

bool is_identity(const DecompositionMatrix& d) {
  if (d.rows.size() != d.cols.size()) return false;
  for (std::size_t r = 0; r < d.rows.size(); ++r)
    for (std::size_t c = 0; c < d.cols.size(); ++c)
      if (d.entries[r][c] != (r == c ? 1 : 0)) return false;
  return true;
}

std::optional<int> identify_simple(const DecompositionMatrix& d, const FpRep& m) {
  for (std::size_t c = 0; c < d.cols.size(); ++c)
    if (is_isomorphic(d.cols[c].module, m, d.seed)) return static_cast<int>(c);
  return std::nullopt;
}

}  // namespace springerlab
