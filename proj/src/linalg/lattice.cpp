#include "springerlab/lattice.hpp"

#include "springerlab/linalg.hpp"

namespace springerlab {

std::vector<ZVec> hermite_normal_form(std::vector<ZVec> rows, std::size_t n) {
  std::vector<ZVec> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // gcd-eliminate column c below row r
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows.size() || rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

IntegerLattice::IntegerLattice(std::size_t ambient, const std::vector<ZVec>& generators) : n_(ambient) {
  for (const auto& g : generators)
    if (g.size() != n_) throw MalformedInput("lattice generator dimension mismatch");
  basis_ = hermite_normal_form(generators, n_);
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    pivots_.push_back(p);
  }
  // linear independence over Q follows from the echelon shape
}

std::optional<ZVec> IntegerLattice::coordinates(const QVec& v) const {
  if (v.size() != n_) throw MalformedInput("lattice membership: dimension mismatch");
  QVec rest = v;
  ZVec coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    mpq_class q = rest[pivots_[i]] / mpq_class(basis_[i][pivots_[i]]);
    if (q.get_den() != 1) return std::nullopt;
    coords[i] = q.get_num();
    if (coords[i] != 0)
      for (std::size_t j = pivots_[i]; j < n_; ++j) rest[j] -= mpq_class(coords[i] * basis_[i][j]);
  }
  for (const auto& x : rest)
    if (sgn(x) != 0) return std::nullopt;
  return coords;
}

QMatrix IntegerLattice::basis_columns() const {
  QMatrix m(Rationals{}, n_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < n_; ++i) m(i, j) = mpq_class(basis_[j][i]);
  return m;
}

namespace {

ZVec clear_denominators(const QVec& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  ZVec z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = v[i].get_num() * (l / v[i].get_den());
  return z;
}

QVec to_q(const ZVec& z) {
  QVec q(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) q[i] = mpq_class(z[i]);
  return q;
}

}  // namespace

IntegerLattice invariant_lattice(const std::vector<QMatrix>& generators, const std::vector<QVec>& seeds) {
  if (seeds.empty()) throw MalformedInput("invariant_lattice: no seeds");
  std::size_t n = seeds[0].size();
  for (const auto& g : generators)
    if (!g.square() || g.rows() != n) throw MalformedInput("invariant_lattice: generator dimension mismatch");
  std::vector<ZVec> gens;
  for (const auto& s : seeds) {
    if (s.size() != n) throw MalformedInput("invariant_lattice: seed dimension mismatch");
    gens.push_back(clear_denominators(s));
  }
  IntegerLattice lat(n, gens);
  for (int iter = 0; iter < kLatticeIterationBound; ++iter) {
    std::vector<ZVec> next = lat.basis();
    bool grew = false;
    for (const auto& b : lat.basis()) {
      QVec bq = to_q(b);
      for (const auto& g : generators) {
        QVec img = g.apply(bq);
        if (lat.contains(img)) continue;
        grew = true;
        // images of an integral basis can have denominators; the lattice
        // must then be rescaled, which keeps the Q-span and stability
        bool integral = true;
        for (const auto& x : img) integral &= (x.get_den() == 1);
        if (integral) {
          ZVec z(n);
          for (std::size_t i = 0; i < n; ++i) z[i] = img[i].get_num();
          next.push_back(std::move(z));
        } else {
          mpz_class l = 1;
          for (const auto& x : img) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
          for (auto& v : next)
            for (auto& x : v) x *= l;
          ZVec z(n);
          for (std::size_t i = 0; i < n; ++i) z[i] = img[i].get_num() * (l / img[i].get_den());
          next.push_back(std::move(z));
        }
      }
    }
    if (!grew) return lat;
    lat = IntegerLattice(n, next);
  }
  throw ComputationFailure("invariant_lattice did not stabilize within " + std::to_string(kLatticeIterationBound) + " iterations");
}

std::vector<QMatrix> in_lattice_basis(const std::vector<QMatrix>& generators, const IntegerLattice& lattice) {
  QMatrix b = lattice.basis_columns();
  std::vector<QMatrix> out;
  for (const auto& g : generators) {
    QMatrix gb = g * b;
    QMatrix r(Rationals{}, lattice.rank(), lattice.rank());
    for (std::size_t j = 0; j < lattice.rank(); ++j) {
      auto c = lattice.coordinates(gb.col_vec(j));
      if (!c) throw ComputationFailure("lattice is not stable under a generator");
      for (std::size_t i = 0; i < lattice.rank(); ++i) r(i, j) = mpq_class((*c)[i]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace springerlab
