#include "springerlab/characters.hpp"

#include <algorithm>
#include <mutex>

#include "springerlab/errors.hpp"
#include "springerlab/ordinary.hpp"
#include "springerlab/representation.hpp"

namespace springerlab {

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (group != o.group || values.size() != o.values.size()) throw MalformedInput("class functions on different groups");
  ClassFunction r{group, values};
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] *= o.values[i];
  return r;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (group != o.group || values.size() != o.values.size()) throw MalformedInput("class functions on different groups");
  ClassFunction r{group, values};
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

CharacterTable::CharacterTable(std::shared_ptr<const WeylGroup> w, std::vector<IrrLabel> labels, std::vector<ClassFunction> rows)
    : w_(std::move(w)), labels_(std::move(labels)), rows_(std::move(rows)) {}

int CharacterTable::index(const IrrLabel& l) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == l) return static_cast<int>(i);
  return -1;
}

const ClassFunction& CharacterTable::character(const IrrLabel& l) const {
  int i = index(l);
  if (i < 0) throw MalformedInput("no such irreducible: " + to_string(l));
  return rows_[i];
}

namespace {

// Beta-set removal of rim hooks of length r; calls back with sign and result.
template <class Fn>
void remove_rim_hooks(const Partition& lambda, int r, Fn&& fn) {
  int k = static_cast<int>(lambda.size());
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
  for (int i = 0; i < k; ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Partition mu;
    for (int j = 0; j < k; ++j) {
      int part = nb[j] - (k - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    fn(between % 2 ? -1 : 1, mu);
  }
}

}  // namespace

mpq_class sn_character(const Partition& lambda, const Partition& rho) {
  if (size(lambda) != size(rho)) throw MalformedInput("cycle type and partition sizes differ");
  if (rho.empty()) return 1;
  Partition rest(rho.begin() + 1, rho.end());
  mpq_class total = 0;
  remove_rim_hooks(lambda, rho[0], [&](int s, const Partition& mu) { total += s * sn_character(mu, rest); });
  return total;
}

mpq_class bn_character(const Bipartition& label, const Partition& pos, const Partition& neg) {
  if (size(label.first) + size(label.second) != size(pos) + size(neg)) throw MalformedInput("bipartition and class sizes differ");
  if (pos.empty() && neg.empty()) return 1;
  bool negative = pos.empty();
  int r = negative ? neg[0] : pos[0];
  Partition rp = pos, rn = neg;
  if (negative) rn.erase(rn.begin());
  else rp.erase(rp.begin());
  mpq_class total = 0;
  remove_rim_hooks(label.first, r, [&](int s, const Partition& mu) { total += s * bn_character({mu, label.second}, rp, rn); });
  remove_rim_hooks(label.second, r, [&](int s, const Partition& mu) {
    total += (negative ? -s : s) * bn_character({label.first, mu}, rp, rn);
  });
  return total;
}

ClassFunction zero_function(const WeylGroup& w) { return {w.name(), std::vector<mpq_class>(w.num_classes(), 0)}; }

ClassFunction sign_character(const WeylGroup& w) {
  ClassFunction f = zero_function(w);
  for (int c = 0; c < w.num_classes(); ++c) f.values[c] = w.element(w.classes()[c].representative).sign();
  return f;
}

ClassFunction trivial_character(const WeylGroup& w) {
  ClassFunction f = zero_function(w);
  for (auto& v : f.values) v = 1;
  return f;
}

ClassFunction regular_character(const WeylGroup& w) {
  ClassFunction f = zero_function(w);
  f.values[0] = w.order();
  return f;
}

mpq_class inner_product(const WeylGroup& w, const ClassFunction& f, const ClassFunction& g) {
  if (f.group != w.name() || g.group != w.name() || f.values.size() != g.values.size()) throw MalformedInput("inner_product: group mismatch");
  mpq_class s = 0;
  for (int c = 0; c < w.num_classes(); ++c) s += w.classes()[c].size() * f.values[c] * g.values[c];
  return s / w.order();
}

std::map<IrrLabel, long> decompose(const CharacterTable& t, const ClassFunction& f) {
  std::map<IrrLabel, long> out;
  ClassFunction rebuilt = zero_function(t.group());
  for (std::size_t i = 0; i < t.size(); ++i) {
    mpq_class m = inner_product(t.group(), f, t.rows()[i]);
    if (m.get_den() != 1 || m < 0) throw MalformedInput("not a character: multiplicity " + m.get_str() + " of " + to_string(t.labels()[i]));
    long k = m.get_num().get_si();
    if (k) out[t.labels()[i]] = k;
    for (int c = 0; c < t.group().num_classes(); ++c) rebuilt.values[c] += k * t.rows()[i].values[c];
  }
  if (!(rebuilt.values == f.values)) throw MalformedInput("not a character: not in the span of irreducibles");
  return out;
}

namespace {

std::shared_ptr<const CharacterTable> build_table(std::shared_ptr<const WeylGroup> w) {
  auto labels = all_irr_labels(w->type(), w->rank());
  std::vector<ClassFunction> rows;
  for (const auto& l : labels) {
    ClassFunction f = zero_function(*w);
    switch (w->type()) {
      case LieType::A:
        for (int c = 0; c < w->num_classes(); ++c)
          f.values[c] = sn_character(l.a, w->cycle_type(w->classes()[c].representative).positive);
        break;
      case LieType::B:
      case LieType::C:
        for (int c = 0; c < w->num_classes(); ++c) {
          auto t = w->cycle_type(w->classes()[c].representative);
          f.values[c] = bn_character({l.a, l.b}, t.positive, t.negative);
        }
        break;
      case LieType::D:
        if (l.a == l.b) {
          f.values = class_traces(ordinary_matrices(*w, l), *w);
        } else {
          for (int c = 0; c < w->num_classes(); ++c) {
            auto t = w->cycle_type(w->classes()[c].representative);
            f.values[c] = bn_character({l.a, l.b}, t.positive, t.negative);
          }
        }
        break;
      case LieType::G2:
        f.values = class_traces(ordinary_matrices(*w, l), *w);
        break;
    }
    rows.push_back(std::move(f));
  }
  return std::make_shared<const CharacterTable>(w, std::move(labels), std::move(rows));
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(LieType type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const CharacterTable>> memo;
  auto key = std::make_pair(static_cast<int>(type), rank);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto t = build_table(weyl_group(type, rank));
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, t).first->second;
}

std::shared_ptr<const CharacterTable> character_table(const WeylGroup& w) { return character_table(w.type(), w.rank()); }

}  // namespace springerlab
