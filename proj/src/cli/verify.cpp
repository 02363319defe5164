#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <thread>

#include "springerlab/cli.hpp"
#include "springerlab/coinvariants.hpp"

namespace springerlab::cli {

namespace {

CheckResult check(const std::string& suite, std::string name, bool ok, std::string detail = "") {
  return CheckResult{suite, std::move(name), ok, std::move(detail)};
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Group {
  LieType type;
  int rank;
};

std::vector<Group> selected(const VerifyOptions& opt, std::vector<Group> defaults) {
  if (!opt.type) return defaults;
  if (!opt.rank) {
    std::vector<Group> g;
    for (const auto& d : defaults)
      if (d.type == *opt.type) g.push_back(d);
    if (g.empty()) throw MalformedInput("--rank is required for this type");
    return g;
  }
  return {Group{*opt.type, *opt.rank}};
}

// ---- coinvariants ----

template <class F>
std::vector<CheckResult> coinvariant_checks(const WeylGroup& w, F field, bool coprime) {
  const std::string tag = w.name() + "/" + field.name();
  std::vector<CheckResult> out;
  auto m = coinvariant_algebra(w, field);
  out.push_back(check("coinvariants", tag + ": total dimension = |W|", m.total_dim() == static_cast<std::size_t>(w.order()),
                      std::to_string(m.total_dim()) + " vs " + std::to_string(w.order())));
  out.push_back(check("coinvariants", tag + ": graded dimensions", m.graded_dims() == expected_graded_dims(w), join(m.graded_dims())));
  out.push_back(check("coinvariants", tag + ": top degree = N", m.top_degree == w.roots().num_positive(),
                      std::to_string(m.top_degree)));
  out.push_back(check("coinvariants", tag + ": Poincare pairing is (W, sign)-equivariant", poincare_sign_check(m)));
  if (!coprime) return out;
  auto chars = graded_character(m);
  ClassFunction total = zero_function(w);
  for (const auto& c : chars) total = total + c;
  out.push_back(check("coinvariants", tag + ": top degree affords the sign character", chars.back() == sign_character(w)));
  out.push_back(check("coinvariants", tag + ": total character is regular", total == regular_character(w)));
  out.push_back(check("coinvariants", tag + ": faithful", is_faithful(m)));
  return out;
}

std::vector<CheckTask> coinvariant_tasks(const VerifyOptions& opt) {
  std::vector<CheckTask> tasks;
  auto groups = selected(opt, {{LieType::A, 2}, {LieType::A, 3}, {LieType::B, 2}, {LieType::B, 3}, {LieType::G2, 2}});
  for (const auto& g : groups) {
    auto w = weyl_group(g.type, g.rank);
    std::vector<std::uint32_t> fields;
    if (opt.field) {
      const std::string& f = *opt.field;
      if (f == "Q" || f == "0") {
        fields.push_back(0);
      } else {
        std::string digits = f.rfind("F_", 0) == 0 ? f.substr(2) : (f.rfind("F", 0) == 0 ? f.substr(1) : f);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
          throw MalformedInput("--field must be Q or a prime: " + f);
        fields.push_back(PrimeField(std::stoul(digits)).p);
      }
    } else {
      fields = {0, 2, 3, 5, 7};
    }
    for (std::uint32_t p : fields) {
      tasks.push_back([w, p]() {
        if (p == 0) return coinvariant_checks(*w, Rationals{}, true);
        return coinvariant_checks(*w, PrimeField(p), w->order() % p != 0);
      });
    }
  }
  return tasks;
}

// ---- springer ----

std::vector<CheckTask> springer_tasks(const VerifyOptions& opt) {
  std::vector<CheckTask> tasks;
  const std::uint64_t seed = opt.seed;
  std::vector<Group> twist = selected(opt, {{LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3}, {LieType::A, 4},
                                            {LieType::B, 2}, {LieType::B, 3}, {LieType::C, 2}, {LieType::C, 3},
                                            {LieType::D, 4}});
  for (const auto& g : twist) {
    std::vector<std::uint32_t> ells = {0};
    if (g.type == LieType::A) ells = opt.ell ? std::vector<std::uint32_t>{0, *opt.ell} : std::vector<std::uint32_t>{0, 2, 3, 5};
    for (std::uint32_t ell : ells) {
      tasks.push_back([g, ell, seed]() {
        std::string name = type_name(g.type) + std::to_string(g.rank) + (ell ? ", ell = " + std::to_string(ell) : ", char 0") +
                           ": rho = phi o sgn";
        return std::vector<CheckResult>{check("springer", name, sign_twist_theorem_check(g.type, g.rank, ell, seed))};
      });
    }
  }
  std::vector<Group> labelled = selected(opt, {{LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3}, {LieType::A, 4},
                                               {LieType::A, 5}, {LieType::B, 2}, {LieType::B, 3}, {LieType::B, 4},
                                               {LieType::C, 2}, {LieType::C, 3}, {LieType::C, 4}, {LieType::D, 4},
                                               {LieType::G2, 2}});
  for (const auto& g : labelled) {
    tasks.push_back([g]() {
      auto t = character_table(g.type, g.rank);
      const WeylGroup& w = t->group();
      ClassFunction eps = sign_character(w);
      bool ok = true;
      std::string bad;
      for (const auto& l : t->labels()) {
        IrrLabel s = tensor_sign_label(l);
        if (!(t->character(s) == t->character(l) * eps) || !(tensor_sign_label(s) == l)) {
          ok = false;
          bad = to_string(l);
          break;
        }
      }
      return std::vector<CheckResult>{check("springer", w.name() + ": tensor_sign_label matches chi * sign", ok, bad)};
    });
  }
  return tasks;
}

// ---- table1 ----

std::vector<CheckTask> table1_tasks(const VerifyOptions& opt) {
  std::vector<CheckTask> tasks;
  auto groups = selected(opt, {{LieType::B, 2}, {LieType::B, 3}, {LieType::B, 4}, {LieType::C, 2}, {LieType::C, 3},
                               {LieType::C, 4}, {LieType::D, 4}});
  std::vector<std::uint32_t> ells = opt.ell ? std::vector<std::uint32_t>{*opt.ell} : std::vector<std::uint32_t>{3, 5, 7};
  for (const auto& g : groups)
    for (std::uint32_t ell : ells)
      tasks.push_back([g, ell]() {
        std::vector<CheckResult> out;
        const std::string tag = type_name(g.type) + std::to_string(g.rank) + ", ell = " + std::to_string(ell);
        auto rows = table1_rows(g.type, g.rank, ell);
        std::vector<IVec> lambdas;
        for (const auto& r : rows) lambdas.push_back(r.lambda);
        auto small = enumerate_small(build_root_system(g.type, g.rank));
        if (g.type != LieType::D) small.erase(std::remove(small.begin(), small.end(), IVec(g.rank, 0)), small.end());
        out.push_back(check("table1", tag + ": lambda column = nonzero small coweights", lambdas == small,
                            std::to_string(lambdas.size()) + " rows, " + std::to_string(small.size()) + " small"));
        bool cases = true;
        for (const auto& r : rows) cases = cases && static_cast<std::size_t>(r.dichotomy_case) == r.labels_prefilter.size();
        out.push_back(check("table1", tag + ": case 2 rows carry two summands", cases));
        bool caveat_expected = g.type == LieType::B && g.rank == 3 && ell == 3;
        bool caveat_seen = false;
        for (const auto& r : rows)
          for (const auto& n : r.notes)
            if (n.find("read as 0") != std::string::npos) caveat_seen = true;
        out.push_back(check("table1", tag + ": killed-summand note", caveat_seen == caveat_expected));
        return out;
      });
  return tasks;
}

// ---- oracle ----

std::vector<CheckTask> oracle_tasks(const VerifyOptions& opt) {
  std::vector<CheckTask> tasks;
  const std::uint64_t seed = opt.seed;
  const std::size_t max_dim = opt.max_dim;
  auto groups = selected(opt, {{LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3}, {LieType::C, 2}, {LieType::G2, 2}});
  for (const auto& g : groups) {
    std::vector<std::uint32_t> ells;
    if (opt.ell)
      ells = {*opt.ell};
    else if (g.type == LieType::A)
      ells = {2, 3, 5};
    else if (g.type == LieType::G2)
      ells = {3, 5, 7};
    else
      ells = {3, 5};
    auto small = enumerate_small(build_root_system(g.type, g.rank));
    for (const IVec& lambda : small) {
      if (g.type == LieType::G2 && lambda != IVec{2, 3}) continue;
      if (g.type != LieType::A && g.type != LieType::G2 && lambda == IVec(g.rank, 0)) continue;
      for (std::uint32_t ell : ells) {
        if (g.type == LieType::G2 && !g2_oracle_enabled()) continue;
        tasks.push_back([g, lambda, ell, seed, max_dim]() {
          auto r = run_oracle(g.type, g.rank, lambda, ell, seed, max_dim);
          std::string tag = r.group + " " + to_string(lambda) + ", ell = " + std::to_string(ell);
          std::string got;
          for (const auto& f : r.factors) got += (got.empty() ? "" : " + ") + f.label;
          std::vector<CheckResult> out;
          out.push_back(check("oracle", tag + ": simple quotient certified", r.simple_certified && r.lift_independent));
          if (r.agrees_with_formula)
            out.push_back(check("oracle", tag + ": zero weight space matches the formula", *r.agrees_with_formula,
                                "dim " + std::to_string(r.dim_zero_weight) + ": " + (got.empty() ? "0" : got)));
          if (g.type == LieType::G2)
            out.push_back(check("oracle", tag + ": recorded dimension", static_cast<long>(r.dim_zero_weight) == g2_recorded_zero_weight_dim(ell),
                                std::to_string(r.dim_zero_weight)));
          return out;
        });
      }
    }
  }
  if (!opt.type || *opt.type == LieType::G2)
    tasks.push_back([]() {
      std::vector<CheckResult> out;
      bool found = false;
      for (const auto& n : exceptional_notes())
        if (n.group == "G2") {
          found = n.zero_weight_dims.at(3) == 1 && n.zero_weight_dims.at(5) == 2 && n.zero_weight_dims.at(7) == 2 && !n.citations.empty();
        }
      out.push_back(check("oracle", "G2: recorded exceptional data", found));
      return out;
    });
  return tasks;
}

// ---- decomp ----

std::vector<CheckTask> decomp_tasks(const VerifyOptions& opt) {
  std::vector<CheckTask> tasks;
  auto groups = selected(opt, {{LieType::A, 2}, {LieType::A, 3}, {LieType::B, 2}});
  for (const auto& g : groups) {
    std::vector<std::uint32_t> ells = opt.ell ? std::vector<std::uint32_t>{*opt.ell} : std::vector<std::uint32_t>{2, 3, 5};
    for (std::uint32_t ell : ells)
      tasks.push_back([g, ell]() {
        auto w = weyl_group(g.type, g.rank);
        const std::string tag = w->name() + ", ell = " + std::to_string(ell);
        std::vector<CheckResult> out;
        std::shared_ptr<const DecompositionMatrix> first;
        bool same = true;
        for (std::uint64_t seed : {1ull, 42ull, 1337ull}) {
          auto d = decomposition_matrix(*w, ell, seed);
          std::string s = tag + ", seed " + std::to_string(seed);
          out.push_back(check("decomp", s + ": Brauer dimension identity", brauer_identity_holds(*d)));
          if (uses_head_labels(g.type, ell)) out.push_back(check("decomp", s + ": unitriangular", is_unitriangular(*d)));
          if (w->order() % ell != 0) out.push_back(check("decomp", s + ": identity matrix", is_identity(*d)));
          if (!first)
            first = d;
          else
            same = same && d->entries == first->entries && d->col_labels() == first->col_labels() &&
                   d->row_labels() == first->row_labels();
        }
        out.push_back(check("decomp", tag + ": seed independent", same));
        if (g.type == LieType::A && g.rank == 2 && ell == 3)
          out.push_back(check("decomp", tag + ": [[1,0],[1,1],[0,1]]",
                              first->entries == std::vector<std::vector<long>>{{1, 0}, {1, 1}, {0, 1}}));
        return out;
      });
  }
  return tasks;
}

}  // namespace

std::vector<CheckTask> suite_tasks(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "coinvariants") return coinvariant_tasks(opt);
  if (suite == "springer") return springer_tasks(opt);
  if (suite == "table1") return table1_tasks(opt);
  if (suite == "oracle") return oracle_tasks(opt);
  if (suite == "decomp") return decomp_tasks(opt);
  if (suite == "all") {
    std::vector<CheckTask> all;
    for (const char* s : {"coinvariants", "springer", "table1", "oracle", "decomp"}) {
      auto t = suite_tasks(s, opt);
      all.insert(all.end(), t.begin(), t.end());
    }
    return all;
  }
  throw MalformedInput("unknown suite: " + suite);
}

std::vector<CheckResult> run_checks(const std::vector<CheckTask>& tasks, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, tasks.size()));
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = tasks[i]();
      } catch (const std::invalid_argument& e) {
        slots[i] = {CheckResult{"error", "usage error", false, e.what()}};
      } catch (const std::exception& e) {
        slots[i] = {CheckResult{"error", "computation failure", false, e.what()}};
      }
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned k = 0; k < workers; ++k) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  std::vector<CheckResult> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace springerlab::cli
