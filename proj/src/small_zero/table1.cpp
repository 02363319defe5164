#include "springerlab/small_zero.hpp"

#include <algorithm>

#include "springerlab/errors.hpp"
#include "springerlab/field.hpp"

namespace springerlab {

namespace {

IVec pattern(int n, std::vector<std::pair<long, int>> runs) {
  IVec v;
  for (auto [value, count] : runs) v.insert(v.end(), count, value);
  if (static_cast<int>(v.size()) != n) throw ComputationFailure("table row pattern has wrong length");
  return v;
}

IrrLabel bc_label(LieType t, int n, Partition a, Partition b) {
  IrrLabel l;
  l.type = t;
  l.rank = n;
  l.a = std::move(a);
  l.b = std::move(b);
  return l;
}

std::string key(LieType t, const std::string& family) { return "table1:" + type_name(t) + "_n:" + family; }

void finish(SmallRepRecord& r) {
  for (const auto& s : r.sources) {
    std::string text = r.ell ? modular_label_text(s) : to_string(s);
    r.labels_prefilter.push_back(text);
    if (survives_filter(s, r.ell)) r.labels.push_back(text);
  }
  if (r.type == LieType::B && r.rank == 3 && r.ell == 3) {
    for (const auto& s : r.sources)
      if (s.a == Partition{1, 1, 1} && s.b.empty())
        r.notes.push_back("B3, ell = 3: D^((1,1,1),()) is read as 0");
  }
}

void check_ell(std::uint32_t ell) {
  if (ell == 2) throw Unsupported("the classical zero-weight table assumes ell > 2");
  if (ell != 0 && !is_prime(ell)) throw MalformedInput("ell must be a prime: " + std::to_string(ell));
}

}  // namespace

bool survives_filter(const IrrLabel& s, std::uint32_t ell) {
  if (ell == 0) return true;
  return is_regular(s.a, ell) && is_regular(s.b, ell);
}

std::vector<SmallRepRecord> table1_rows(LieType type, int n, std::uint32_t ell) {
  check_ell(ell);
  std::vector<SmallRepRecord> out;
  auto add = [&](IVec lambda, std::string family, int dcase, std::vector<IrrLabel> sources, std::vector<std::string> notes = {}) {
    SmallRepRecord r;
    r.type = type;
    r.rank = n;
    r.ell = ell;
    r.lambda = std::move(lambda);
    r.family = family;
    r.dichotomy_case = dcase;
    r.sources = std::move(sources);
    r.notes = std::move(notes);
    r.citations.push_back(key(type, family));
    finish(r);
    out.push_back(std::move(r));
  };
  switch (type) {
    case LieType::B: {
      if (n < 2 || n > 8) throw Unsupported("table1 for B needs 2 <= n <= 8");
      for (int j = 1; 2 * j <= n - 1; ++j)
        add(pattern(n, {{2, 1}, {1, 2 * j}, {0, n - 2 * j - 1}}), "(2 1^{2j} 0^{n-2j-1}), j=" + std::to_string(j), 2,
            {bc_label(type, n, {n - j - 1, j}, {1}), bc_label(type, n, {n - j - 1, j, 1}, {})});
      add(pattern(n, {{2, 1}, {0, n - 1}}), "(2 0^{n-1})", 1, {bc_label(type, n, {n - 1}, {1})});
      for (int j = 1; 2 * j <= n; ++j)
        add(pattern(n, {{1, 2 * j}, {0, n - 2 * j}}), "(1^{2j} 0^{n-2j}), j=" + std::to_string(j), 1,
            {bc_label(type, n, {n - j, j}, {})},
            {"printed exponent 0^{2n-j} has the wrong length for rank n; row read as (1^{2j} 0^{n-2j}), which matches the enumerated small coweights"});
      break;
    }
    case LieType::C: {
      if (n < 2 || n > 8) throw Unsupported("table1 for C needs 2 <= n <= 8");
      for (int j = 1; j <= n; ++j) {
        IrrLabel l = j % 2 == 0 ? bc_label(type, n, {n - j / 2}, {j / 2}) : bc_label(type, n, {(j - 1) / 2}, {n - (j - 1) / 2});
        if (!l.a.empty() && l.a[0] == 0) l.a.clear();
        if (!l.b.empty() && l.b[0] == 0) l.b.clear();
        add(pattern(n, {{1, j}, {0, n - j}}), "(1^j 0^{n-j}), j=" + std::to_string(j), 1, {l});
      }
      break;
    }
    case LieType::D: {
      if (n < 4 || n > 8) throw Unsupported("table1 for D needs 4 <= n <= 8");
      if (n % 2 == 1)
        for (int s : {1, -1}) {
          IVec v = pattern(n, {{2, 1}, {1, n - 2}, {s, 1}});
          add(v, std::string("(2 1^{n-2} ") + (s > 0 ? "1" : "-1") + ")", 1, {make_d_label(n, {(n - 1) / 2, 1}, {(n - 1) / 2})});
        }
      for (int j = 1; 2 * j < n - 1; ++j)
        add(pattern(n, {{2, 1}, {1, 2 * j}, {0, n - 2 * j - 1}}), "(2 1^{2j} 0^{n-2j-1}), j=" + std::to_string(j), 2,
            {make_d_label(n, {n - j - 1, 1}, {j}), make_d_label(n, {n - j - 1}, {j, 1})});
      add(pattern(n, {{2, 1}, {0, n - 1}}), "(2 0^{n-1})", 1, {make_d_label(n, {n - 1, 1}, {})});
      if (n % 2 == 0)
        for (int s : {1, -1}) {
          IVec v = pattern(n, {{1, n - 1}, {s, 1}});
          add(v, std::string("(1^{n-1} ") + (s > 0 ? "1" : "-1") + ")", 1, {make_d_label(n, {n / 2}, {n / 2}, s)});
        }
      for (int j = 0; 2 * j < n; ++j) {
        Partition b;
        if (j) b = {j};
        add(pattern(n, {{1, 2 * j}, {0, n - 2 * j}}), "(1^{2j} 0^{n-2j}), j=" + std::to_string(j), 1, {make_d_label(n, {n - j}, b)});
      }
      break;
    }
    default:
      throw Unsupported("table1 covers types B, C and D");
  }
  std::sort(out.begin(), out.end(), [](const SmallRepRecord& a, const SmallRepRecord& b) { return a.lambda < b.lambda; });
  return out;
}

bool is_restricted_typeA(const IVec& lambda, std::uint32_t ell) {
  if (ell == 0) return true;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] - lambda[i + 1] > static_cast<long>(ell) - 1) return false;
  return true;
}

std::string TypeAZeroWeight::label_text() const { return label ? "D^" + to_string(*label) : "0"; }

TypeAZeroWeight zero_weight_typeA(const IVec& lambda, std::uint32_t ell) {
  if (ell != 0 && !is_prime(ell)) throw MalformedInput("ell must be a prime: " + std::to_string(ell));
  int n = static_cast<int>(lambda.size());
  if (n < 2) throw MalformedInput("type A coweight needs at least two entries");
  long sum = 0;
  for (long x : lambda) sum += x;
  if (sum != 0) throw MalformedInput("type A coweight must have zero sum: " + to_string(lambda));
  auto rs = build_root_system(LieType::A, n - 1);
  if (!is_dominant(rs, lambda)) throw MalformedInput("coweight is not dominant: " + to_string(lambda));
  if (!is_small(rs, lambda)) throw MalformedInput("coweight is not small: " + to_string(lambda));
  TypeAZeroWeight z;
  z.lambda = lambda;
  z.ell = ell;
  z.effective = lambda;
  if (lambda.back() < -1) {
    z.dual_family = true;
    for (int i = 0; i < n; ++i) z.effective[i] = -lambda[n - 1 - i];
  }
  if (z.effective.back() < -1) throw MalformedInput("small coweight outside both families: " + to_string(lambda));
  for (long x : z.effective)
    if (x + 1 > 0) z.lambda_hat.push_back(static_cast<int>(x + 1));
  z.restricted = is_restricted_typeA(lambda, ell);
  Partition t = transpose(z.lambda_hat);
  if (ell == 0 || is_regular(t, ell)) z.label = t;
  if (z.label.has_value() != z.restricted) throw ComputationFailure("restrictedness and regularity of the transposed shift disagree");
  return z;
}

int dichotomy_case(const SmallRepRecord& r) { return r.dichotomy_case; }

const std::vector<ExceptionalNote>& exceptional_notes() {
  static const std::vector<ExceptionalNote> notes = [] {
    std::vector<ExceptionalNote> v;
    ExceptionalNote g2;
    g2.group = "G2";
    g2.lambda = "higher fundamental coweight (2,3) in the simple coroot basis";
    g2.orbit = "subregular";
    g2.dichotomy_case = 2;
    g2.zero_weight_dims = {{0, 2}, {3, 1}, {5, 2}, {7, 2}, {11, 2}, {13, 2}};
    g2.statement = "L(lambda) is the adjoint module of the dual group, or its simple quotient at ell = 3; the summand for the nontrivial local system is killed, so L(lambda)_0 has dimension 1 at ell = 3 and 2 at ell > 3";
    g2.citations = {"exceptional:G2:higher-fundamental-coweight"};
    v.push_back(g2);
    for (const char* w : {"3w1", "3w6"}) {
      ExceptionalNote e6;
      e6.group = "E6";
      e6.lambda = w;
      e6.orbit = "2A2";
      e6.dichotomy_case = 1;
      e6.zero_weight_dims = {{3, 0}};
      e6.statement = "L(lambda)_0 is the image of IC(2A2); it vanishes at ell = 3, where L(lambda) is a Frobenius twist of a minuscule module";
      e6.citations = {std::string("exceptional:E6:") + w};
      v.push_back(e6);
    }
    ExceptionalNote e7;
    e7.group = "E7";
    e7.lambda = "w3";
    e7.orbit = "unspecified";
    e7.dichotomy_case = 2;
    e7.statement = "at ell = 2, L(lambda)_0 has four distinct simple constituents with multiplicities 2, 2, 2, 1";
    e7.citations = {"exceptional:E7:w3:ell=2"};
    v.push_back(e7);
    return v;
  }();
  return notes;
}

long g2_recorded_zero_weight_dim(std::uint32_t ell) {
  if (ell == 0) return 2;
  if (ell == 2 || !is_prime(ell)) throw Unsupported("G2 zero-weight data is recorded for ell > 2 prime");
  return ell == 3 ? 1 : 2;
}

}  // namespace springerlab
