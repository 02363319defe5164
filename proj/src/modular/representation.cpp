#include "springerlab/representation.hpp"

namespace springerlab {

FpRep reduce_mod(const QRep& r, std::uint32_t ell) {
  PrimeField f(ell);
  std::vector<QVec> seeds;
  for (std::size_t i = 0; i < r.dim; ++i) {
    QVec e(r.dim, 0);
    e[i] = 1;
    seeds.push_back(e);
  }
  std::vector<QMatrix> gens = r.gens;
  if (r.dim == 0) return FpRep(f, 0, std::vector<FpMatrix>(r.gens.size(), FpMatrix(f, 0, 0)), r.group);
  IntegerLattice lat = invariant_lattice(gens, seeds);
  std::vector<FpMatrix> out;
  for (const auto& g : in_lattice_basis(gens, lat)) out.push_back(reduce(g, f));
  return FpRep(f, r.dim, std::move(out), r.group);
}

namespace {

template <class F>
bool isomorphic_impl(const Rep<F>& m, const Rep<F>& n, std::uint64_t seed, std::function<typename F::value_type(Rng&)> coeff) {
  if (m.dim != n.dim) return false;
  if (m.dim == 0) return true;
  auto hom = hom_space(m, n);
  if (hom.empty()) return false;
  if (hom.size() == 1) return inverse(hom[0]).has_value();
  Rng rng(seed);
  const F& f = m.field;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix<F> x(f, n.dim, m.dim);
    for (const auto& h : hom) x = x + h.scaled(coeff(rng));
    if (inverse(x)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FpRep& m, const FpRep& n, std::uint64_t seed) {
  if (!(m.field == n.field)) throw MalformedInput("is_isomorphic: different primes");
  const PrimeField f = m.field;
  return isomorphic_impl<PrimeField>(m, n, seed, [f](Rng& r) { return static_cast<std::uint32_t>(r.below(f.p)); });
}

bool is_isomorphic(const QRep& m, const QRep& n, std::uint64_t seed) {
  return isomorphic_impl<Rationals>(m, n, seed, [](Rng& r) { return mpq_class(static_cast<long>(r.below(1000)) - 500); });
}

}  // namespace springerlab
