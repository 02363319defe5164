#include "springerlab/coinvariants.hpp"

#include <algorithm>

#include "springerlab/errors.hpp"
#include "springerlab/meataxe.hpp"
#include "springerlab/ordinary.hpp"

namespace springerlab {

namespace {

template <class F>
GradedPiece<F> build_piece(const PolynomialModel& model, const GradedPiece<F>* prev, int d, const F& f) {
  GradedPiece<F> p;
  p.degree = d;
  p.all_monomials = monomials(model.nvars, d);
  for (std::size_t i = 0; i < p.all_monomials.size(); ++i) p.index[p.all_monomials[i]] = i;
  p.ideal = Subspace<F>(f, p.all_monomials.size());
  // x_j * (ideal in degree d-1), then the invariants of degree exactly d
  if (prev) {
    for (const auto& row : prev->ideal.basis())
      for (int j = 0; j < model.nvars; ++j) {
        Vec<F> v(p.all_monomials.size(), f.zero());
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (f.is_zero(row[k])) continue;
          Exponent e = prev->all_monomials[k];
          ++e[j];
          v[p.index.at(e)] = row[k];
        }
        p.ideal.insert(v);
      }
  }
  for (const auto& inv : model.invariants)
    if (ipoly::degree(inv) == d) p.ideal.insert(p.embed(inv, f));
  std::vector<bool> piv(p.all_monomials.size(), false);
  for (auto c : p.ideal.pivots()) piv[c] = true;
  for (std::size_t c = 0; c < piv.size(); ++c)
    if (!piv[c]) p.standard.push_back(c);
  return p;
}

template <class F>
void build_action(GradedPiece<F>& p, const PolynomialModel& model, const F& f, const std::string& group) {
  std::vector<Matrix<F>> gens;
  for (const auto& sub : model.generator_substitutions) {
    Matrix<F> m(f, p.dim(), p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) {
      IPoly mono{{p.all_monomials[p.standard[j]], 1}};
      auto c = p.coordinates(p.embed(ipoly::substitute(mono, sub), f));
      for (std::size_t i = 0; i < p.dim(); ++i) m(i, j) = c[i];
    }
    gens.push_back(std::move(m));
  }
  p.action = Rep<F>(f, p.dim(), std::move(gens), group);
}

Rationals::value_type normalise_top(const Rationals&, const mpq_class& c) { return sgn(c) < 0 ? mpq_class(-1) : mpq_class(1); }
PrimeField::value_type normalise_top(const PrimeField&, PrimeField::value_type c) { return c; }

}  // namespace

template <class F>
Vec<F> GradedPiece<F>::coordinates(const Vec<F>& poly) const {
  auto r = ideal.reduce(poly);
  Vec<F> c(standard.size());
  for (std::size_t i = 0; i < standard.size(); ++i) c[i] = r[standard[i]];
  return c;
}

template <class F>
Vec<F> GradedPiece<F>::embed(const IPoly& poly, const F& f) const {
  Vec<F> v(all_monomials.size(), f.zero());
  for (const auto& [e, c] : poly) {
    auto it = index.find(e);
    if (it == index.end()) throw MalformedInput("polynomial is not homogeneous of the piece degree");
    v[it->second] = f.from_int(c);
  }
  return v;
}

template <class F>
std::vector<std::size_t> GradedWModule<F>::graded_dims() const {
  std::vector<std::size_t> d;
  for (const auto& p : pieces) d.push_back(p.dim());
  return d;
}

template <class F>
std::size_t GradedWModule<F>::total_dim() const {
  std::size_t t = 0;
  for (const auto& p : pieces) t += p.dim();
  return t;
}

template <class F>
std::vector<Exponent> GradedWModule<F>::basis(int d) const {
  std::vector<Exponent> out;
  for (auto c : pieces.at(d).standard) out.push_back(pieces.at(d).all_monomials[c]);
  return out;
}

template <class F>
GradedWModule<F> coinvariant_algebra(const WeylGroup& w, F field) {
  GradedWModule<F> m;
  m.field = field;
  m.group = weyl_group(w.type(), w.rank());
  m.model = polynomial_model(w.roots());
  int n = w.roots().num_positive();
  m.top_degree = n;
  for (int d = 0; d <= n + 1; ++d) {
    const GradedPiece<F>* prev = d ? &m.pieces.back() : nullptr;
    m.pieces.push_back(build_piece(m.model, prev, d, field));
  }
  if (m.pieces.back().dim() != 0) throw ComputationFailure("coinvariant algebra does not vanish above degree N");
  m.pieces.pop_back();
  if (m.pieces[n].dim() != 1) throw ComputationFailure("top degree of the coinvariant algebra is not one-dimensional");
  for (auto& p : m.pieces) build_action(p, m.model, field, w.name());
  IPoly disc = ipoly::constant(m.model.nvars, 1);
  for (const auto& r : m.model.positive_root_forms) disc = ipoly::mul(disc, r);
  auto c = m.pieces[n].coordinates(m.pieces[n].embed(disc, field));
  if (field.is_zero(c[0])) {
    m.top_scalar = field.one();
    m.top_from_root_product = false;
  } else {
    m.top_scalar = normalise_top(field, c[0]);
  }
  return m;
}

std::vector<std::size_t> expected_graded_dims(const WeylGroup& w) {
  auto model = polynomial_model(w.roots());
  std::vector<std::size_t> poly{1};
  for (int d : model.fundamental_degrees) {
    std::vector<std::size_t> next(poly.size() + d - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + k] += poly[i];
    poly = std::move(next);
  }
  return poly;
}

template <>
std::vector<ClassFunction> graded_character(const GradedWModule<Rationals>& m) {
  std::vector<ClassFunction> out;
  for (const auto& p : m.pieces) out.push_back({m.group->name(), class_traces(p.action, *m.group)});
  return out;
}

template <>
std::vector<ClassFunction> graded_character(const GradedWModule<PrimeField>& m) {
  const WeylGroup& w = *m.group;
  if (w.order() % m.field.p == 0)
    throw Unsupported("graded character over " + m.field.name() + " for " + w.name() + ": characteristic divides |W|");
  auto table = character_table(w);
  std::vector<FpRep> simples;
  for (const auto& l : table->labels()) simples.push_back(reduce_mod(ordinary_matrices(w, l), m.field.p));
  std::vector<ClassFunction> out;
  for (const auto& p : m.pieces) {
    ClassFunction f = zero_function(w);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      long mult = p.dim() ? socle_multiplicity(p.action, simples[i]) : 0;
      covered += mult * simples[i].dim;
      for (std::size_t k = 0; k < f.values.size(); ++k) f.values[k] += mult * table->rows()[i].values[k];
    }
    if (covered != p.dim()) throw ComputationFailure("graded piece is not semisimple in coprime characteristic");
    out.push_back(std::move(f));
  }
  return out;
}

template <class F>
bool is_faithful(const GradedWModule<F>& m) {
  const WeylGroup& w = *m.group;
  std::vector<std::vector<Matrix<F>>> mats;
  std::size_t rows = 0;
  for (const auto& p : m.pieces) {
    mats.push_back(all_element_matrices(p.action, w));
    rows += p.dim() * p.dim();
  }
  Matrix<F> stacked(m.field, rows, w.order());
  for (long g = 0; g < w.order(); ++g) {
    std::size_t r = 0;
    for (const auto& per : mats)
      for (const auto& x : per[g].data()) stacked(r++, g) = x;
  }
  return rank(stacked) == static_cast<std::size_t>(w.order());
}

template <class F>
PairingMatrix<F> pairing_matrix(const GradedWModule<F>& m, int degree) {
  const F& f = m.field;
  int n = m.top_degree;
  if (degree < 0 || degree > n) throw MalformedInput("pairing degree out of range");
  const auto& a = m.pieces[degree];
  const auto& b = m.pieces[n - degree];
  const auto& top = m.pieces[n];
  auto inv = f.inv(m.top_scalar);
  Matrix<F> p(f, a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Exponent e = a.all_monomials[a.standard[i]];
      const Exponent& e2 = b.all_monomials[b.standard[j]];
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      Vec<F> v(top.all_monomials.size(), f.zero());
      v[top.index.at(e)] = f.one();
      p(i, j) = f.mul(top.coordinates(v)[0], inv);
    }
  return {degree, std::move(p)};
}

template <class F>
bool poincare_sign_check_scaled(const GradedWModule<F>& m, const typename F::value_type& c) {
  const F& f = m.field;
  if (f.is_zero(c)) throw MalformedInput("top class scale must be nonzero");
  int n = m.top_degree;
  auto minus_one = f.neg(f.one());
  for (int i = 0; i <= n; ++i) {
    auto pm = pairing_matrix(m, i).matrix.scaled(c);
    if (!pm.square() || f.is_zero(determinant(pm))) return false;
    const auto& a = m.pieces[i].action;
    const auto& b = m.pieces[n - i].action;
    for (std::size_t g = 0; g < a.gens.size(); ++g) {
      auto lhs = a.gens[g].transpose() * pm * b.gens[g];
      if (!(lhs == pm.scaled(minus_one))) return false;
    }
  }
  return true;
}

template <class F>
bool poincare_sign_check(const GradedWModule<F>& m) {
  return poincare_sign_check_scaled(m, m.field.one());
}

#define SPRINGERLAB_INSTANTIATE(F)                                                                 \
  template struct GradedPiece<F>;                                                                  \
  template struct GradedWModule<F>;                                                                \
  template GradedWModule<F> coinvariant_algebra(const WeylGroup&, F);                             \
  template bool is_faithful(const GradedWModule<F>&);                                              \
  template PairingMatrix<F> pairing_matrix(const GradedWModule<F>&, int);                          \
  template bool poincare_sign_check_scaled(const GradedWModule<F>&, const typename F::value_type&); \
  template bool poincare_sign_check(const GradedWModule<F>&);

SPRINGERLAB_INSTANTIATE(Rationals)
SPRINGERLAB_INSTANTIATE(PrimeField)

}  // namespace springerlab
