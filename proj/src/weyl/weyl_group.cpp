#include "springerlab/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "springerlab/errors.hpp"

namespace springerlab {

namespace {

IMat mat_mul(const IMat& a, const IMat& b, int d) {
  IMat c(d * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      long x = a[i * d + k];
      if (x == 0) continue;
      for (int j = 0; j < d; ++j) c[i * d + j] += x * b[k * d + j];
    }
  return c;
}

IMat reflection_matrix(const RootSystem& rs, int i) {
  int d = rs.coord_dim;
  IMat m(d * d, 0);
  for (int j = 0; j < d; ++j) {
    IVec e(d, 0);
    e[j] = 1;
    IVec img = rs.reflect(i, e);
    for (int r = 0; r < d; ++r) m[r * d + j] = img[r];
  }
  return m;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs, long order_bound) : rs_(rs), d_(rs.coord_dim) {
  if (rs.weyl_order > order_bound)
    throw Unsupported("Weyl group of " + rs.name() + " has order " + std::to_string(rs.weyl_order) + ", above the bound " + std::to_string(order_bound));
  std::vector<IMat> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(reflection_matrix(rs, i));
  IMat id(d_ * d_, 0);
  for (int i = 0; i < d_; ++i) id[i * d_ + i] = 1;
  elements_.push_back({id, {}});
  index_[id] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int g = 0; g < rs.rank; ++g) {
      IMat m = mat_mul(elements_[cur].matrix, gens[g], d_);
      if (index_.count(m)) continue;
      std::vector<int> w = elements_[cur].word;
      w.push_back(g);
      index_[m] = static_cast<int>(elements_.size());
      elements_.push_back({m, w});
      queue.push_back(index_[m]);
    }
  }
  if (static_cast<long>(elements_.size()) != rs.weyl_order)
    throw ComputationFailure("Weyl group enumeration gave the wrong order");
  for (int g = 0; g < rs.rank; ++g) generators_.push_back(index_.at(gens[g]));
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    int x = 0;
    const auto& w = elements_[i].word;
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = multiply(x, generators_[*it]);
    inverse_[i] = x;
  }
  // conjugacy classes by brute force
  class_of_.assign(elements_.size(), -1);
  std::vector<std::vector<int>> raw;
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    if (class_of_[x] >= 0) continue;
    std::vector<int> orbit;
    for (std::size_t g = 0; g < elements_.size(); ++g) {
      int y = multiply(multiply(static_cast<int>(g), static_cast<int>(x)), inverse_[g]);
      if (class_of_[y] < 0) {
        class_of_[y] = static_cast<int>(raw.size());
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw.push_back(orbit);
  }
  for (auto& orbit : raw) {
    ConjugacyClass c;
    c.members = orbit;
    c.representative = orbit.front();  // shortest word: BFS order
    c.label = class_label(c.representative);
    classes_.push_back(std::move(c));
  }
  std::sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    bool ai = a.members.front() == 0, bi = b.members.front() == 0;
    if (ai != bi) return ai;
    return a.label < b.label;
  });
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (int m : classes_[c].members) class_of_[m] = static_cast<int>(c);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (std::size_t e = c + 1; e < classes_.size(); ++e)
      if (classes_[c].label == classes_[e].label) throw ComputationFailure("duplicate class label " + classes_[c].label);
}

int WeylGroup::multiply(int a, int b) const {
  auto it = index_.find(mat_mul(elements_[a].matrix, elements_[b].matrix, d_));
  if (it == index_.end()) throw ComputationFailure("product left the Weyl group");
  return it->second;
}

int WeylGroup::index_of(const IMat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::find_class(const std::string& label) const {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].label == label) return static_cast<int>(c);
  return -1;
}

void WeylGroup::signed_permutation(int element, std::vector<int>& perm, std::vector<int>& sign) const {
  if (rs_.type == LieType::G2) throw MalformedInput("G2 elements are not signed permutations");
  const IMat& m = elements_[element].matrix;
  perm.assign(d_, -1);
  sign.assign(d_, 0);
  for (int j = 0; j < d_; ++j)
    for (int i = 0; i < d_; ++i)
      if (m[i * d_ + j] != 0) {
        perm[j] = i;
        sign[j] = static_cast<int>(m[i * d_ + j]);
      }
}

SignedCycleType WeylGroup::cycle_type(int element) const {
  std::vector<int> perm, sign;
  signed_permutation(element, perm, sign);
  SignedCycleType t;
  std::vector<bool> seen(d_, false);
  for (int s = 0; s < d_; ++s) {
    if (seen[s]) continue;
    int len = 0, prod = 1;
    for (int x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
      prod *= sign[x];
    }
    (prod > 0 ? t.positive : t.negative).push_back(len);
  }
  std::sort(t.positive.rbegin(), t.positive.rend());
  std::sort(t.negative.rbegin(), t.negative.rend());
  if (rs_.type == LieType::D && t.negative.empty() &&
      std::all_of(t.positive.begin(), t.positive.end(), [](int p) { return p % 2 == 0; })) {
    // Split class. The "+" class contains the element cycling consecutive
    // blocks with all signs +. Map each cycle x, perm(x), ... onto
    // consecutive positions with the signs that make every step positive and
    // count the sign changes of that conjugator.
    std::vector<std::vector<int>> cycles;
    std::fill(seen.begin(), seen.end(), false);
    for (int s = 0; s < d_; ++s) {
      if (seen[s]) continue;
      std::vector<int> cyc;
      for (int x = s; !seen[x]; x = perm[x]) {
        seen[x] = true;
        cyc.push_back(x);
      }
      cycles.push_back(cyc);
    }
    int negatives = 0;
    for (const auto& cyc : cycles) {
      int running = 1;
      for (int x : cyc) {
        if (running < 0) ++negatives;
        running *= sign[x];
      }
    }
    // The conjugator sending cycle entries to consecutive block positions
    // with these running signs maps the element
    // to the standard block form; it lies in W(D) iff the number of -1 signs
    // is even, and the split classes are exchanged by odd conjugators.
    t.split = (negatives % 2 == 0) ? 1 : -1;
  }
  return t;
}

std::string signed_class_label(const SignedCycleType& t, LieType type) {
  if (type == LieType::A) return to_string(t.positive);
  std::string s = "(" + to_string(t.positive) + "," + to_string(t.negative) + ")";
  if (t.split > 0) s += "+";
  if (t.split < 0) s += "-";
  return s;
}

std::string WeylGroup::class_label(int element) const {
  if (rs_.type != LieType::G2) return signed_class_label(cycle_type(element), rs_.type);
  const IMat& m = elements_[element].matrix;
  if (element == 0) return "A0";
  long tr = m[0] + m[3];
  // element order from the trace in the dihedral group of order 12
  if (tr == 0 && elements_[element].length() % 2 == 1) {
    // reflection: decide short vs long by conjugacy to s1
    int s1 = generators_[0];
    for (std::size_t g = 0; g < elements_.size(); ++g)
      if (multiply(multiply(static_cast<int>(g), s1), inverse_[g]) == element) return "A~1";
    return "A1";
  }
  if (tr == 1) return "G2";
  if (tr == -1) return "A2";
  if (tr == -2) return "A1+A~1";
  throw ComputationFailure("unrecognised G2 element");
}

IVec WeylGroup::act(int element, const IVec& c) const {
  if (static_cast<int>(c.size()) != d_) throw MalformedInput("coweight length mismatch");
  const IMat& m = elements_[element].matrix;
  IVec r(d_, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) r[i] += m[i * d_ + j] * c[j];
  return r;
}

std::shared_ptr<const WeylGroup> weyl_group(LieType type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const WeylGroup>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(type), rank);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto g = std::make_shared<const WeylGroup>(build_root_system(type, rank));
  memo[key] = g;
  return g;
}

}  // namespace springerlab
