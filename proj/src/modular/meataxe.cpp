#include "springerlab/meataxe.hpp"

#include <algorithm>

namespace springerlab {

namespace {

FpMatrix random_element(const FpRep& m, Rng& rng) {
  const PrimeField& f = m.field;
  FpMatrix theta = FpMatrix::identity(f, m.dim).scaled(static_cast<std::uint32_t>(rng.below(f.p)));
  int terms = 1 + static_cast<int>(rng.below(kMeataxeMaxTerms));
  for (int t = 0; t < terms; ++t) {
    int len = 1 + static_cast<int>(rng.below(kMeataxeMaxWord));
    FpMatrix w = m.gens[rng.below(m.gens.size())];
    for (int k = 1; k < len; ++k) w = w * m.gens[rng.below(m.gens.size())];
    std::uint32_t c = 1 + static_cast<std::uint32_t>(rng.below(f.p - 1));
    theta = theta + w.scaled(c);
  }
  return theta;
}

std::vector<FpMatrix> transposes(const std::vector<FpMatrix>& gens) {
  std::vector<FpMatrix> t;
  for (const auto& g : gens) t.push_back(g.transpose());
  return t;
}

}  // namespace

std::optional<FpSubspace> find_submodule(const FpRep& m, Rng& rng) {
  const PrimeField& f = m.field;
  const std::size_t n = m.dim;
  if (n <= 1) return std::nullopt;
  if (m.gens.empty()) {
    FpSubspace s(f, n);
    FpVec e(n, 0);
    e[0] = 1;
    s.insert(e);
    return s;
  }
  const auto gens_t = transposes(m.gens);
  for (int attempt = 0; attempt < kMeataxeRetryBudget; ++attempt) {
    FpMatrix theta = random_element(m, rng);
    for (const auto& q : fp_poly::irreducible_factors(fp_poly::charpoly(theta), f, rng)) {
      FpMatrix nmat = fp_poly::evaluate(q, theta);
      auto ker = kernel(nmat);
      if (ker.empty()) continue;
      FpSubspace s = spin(f, n, {ker[0]}, m.gens);
      if (s.dim() < n) return s;
      auto ker_t = kernel(nmat.transpose());
      FpSubspace st = spin(f, n, {ker_t[0]}, gens_t);
      if (st.dim() < n) {
        FpSubspace ann(f, n);
        for (const auto& v : kernel(st.as_matrix())) ann.insert(v);
        return ann;
      }
      if (static_cast<int>(ker.size()) == fp_poly::degree(q)) return std::nullopt;
    }
  }
  throw ComputationFailure("meataxe: no split or irreducibility certificate within " + std::to_string(kMeataxeRetryBudget) + " attempts (dim " + std::to_string(n) + ")");
}

bool is_irreducible(const FpRep& m, std::uint64_t seed) {
  Rng rng(seed);
  if (m.dim == 0) return false;
  return !find_submodule(m, rng).has_value();
}

namespace {

void collect(const FpRep& m, Rng& rng, std::vector<FpRep>& simples) {
  if (m.dim == 0) return;
  auto s = find_submodule(m, rng);
  if (!s) {
    simples.push_back(m);
    return;
  }
  auto parts = split_module(m, *s);
  collect(parts.sub, rng, simples);
  collect(parts.quotient, rng, simples);
}

std::vector<std::uint32_t> sort_key(const FpRep& m) {
  std::vector<std::uint32_t> k = {static_cast<std::uint32_t>(m.dim)};
  for (const auto& g : m.gens) k.push_back(g.trace());
  return k;
}

}  // namespace

std::vector<Factor> comp_factors(const FpRep& m, std::uint64_t seed, std::size_t dim_bound) {
  if (m.dim > dim_bound) throw ComputationFailure("module dimension " + std::to_string(m.dim) + " exceeds the meataxe bound " + std::to_string(dim_bound));
  Rng rng(seed);
  std::vector<FpRep> simples;
  collect(m, rng, simples);
  std::vector<Factor> out;
  for (auto& s : simples) {
    bool found = false;
    for (auto& fct : out)
      if (is_isomorphic(fct.module, s, seed)) {
        ++fct.multiplicity;
        found = true;
        break;
      }
    if (!found) out.push_back({std::move(s), 1});
  }
  std::stable_sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return sort_key(a.module) < sort_key(b.module); });
  return out;
}

long head_multiplicity(const FpRep& m, const FpRep& simple) {
  auto end = hom_space(simple, simple).size();
  return static_cast<long>(hom_space(m, simple).size() / end);
}

long socle_multiplicity(const FpRep& m, const FpRep& simple) {
  auto end = hom_space(simple, simple).size();
  return static_cast<long>(hom_space(simple, m).size() / end);
}

}  // namespace springerlab
