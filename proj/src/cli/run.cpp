#include <iostream>

#include "CLI11.hpp"
#include "springerlab/cli.hpp"
#include "springerlab/coinvariants.hpp"

namespace springerlab::cli {

namespace {

struct Options {
  std::string type;
  int rank = -1;
  std::string lambda;
  std::uint32_t ell = 0;
  std::uint64_t seed = 42;
  bool json_out = false;
  bool pretty = false;
  std::string cache_dir;
  std::size_t max_dim = 4096;
  bool oracle = false;
  std::string convention;
  std::string field;
  std::string suite = "all";
  unsigned jobs = 0;
};

/// In the CLI a type-A group is named by n (SL_n, S_n); everything else by
/// its Lie rank.
struct GroupArg {
  LieType type;
  int lie_rank;
};

GroupArg group_arg(const Options& o) {
  if (o.type.empty()) throw MalformedInput("--type is required");
  if (o.rank < 0) throw MalformedInput("--rank is required");
  LieType t = parse_type(o.type);
  if (t == LieType::A) {
    if (o.rank < 2) throw MalformedInput("type A needs --rank n >= 2 (the group SL_n)");
    return {t, o.rank - 1};
  }
  if (t == LieType::G2 && o.rank != 2) throw MalformedInput("G2 has rank 2");
  return {t, o.rank};
}

std::uint32_t prime_ell(const Options& o, bool required) {
  if (o.ell == 0) {
    if (required) throw MalformedInput("--ell must be a prime");
    return 0;
  }
  if (!is_prime(o.ell)) throw MalformedInput("--ell must be a prime: " + std::to_string(o.ell));
  return o.ell;
}

json with_schema(json j) {
  j["schema"] = kSchema;
  return j;
}

std::optional<Cache> open_cache(const Options& o) {
  if (auto dir = resolve_cache_dir(o.cache_dir)) return Cache(*dir);
  return std::nullopt;
}

IVec parse_lambda(const Options& o, const RootSystem& rs) {
  if (o.lambda.empty()) throw MalformedInput("--lambda is required");
  IVec lambda = parse_ivec(o.lambda);
  if (static_cast<int>(lambda.size()) != rs.coord_dim)
    throw MalformedInput("lambda needs " + std::to_string(rs.coord_dim) + " entries for " + rs.name());
  if (rs.type == LieType::A) {
    long sum = 0;
    for (long x : lambda) sum += x;
    if (sum != 0) throw MalformedInput("type A coweight must have zero sum");
  }
  if (!rs.in_coweight_lattice(lambda)) throw MalformedInput("not a coweight of " + rs.name() + ": " + to_string(lambda));
  if (!is_dominant(rs, lambda)) throw MalformedInput("lambda is not dominant: " + to_string(lambda));
  if (!is_small(rs, lambda)) throw MalformedInput("lambda is not small: " + to_string(lambda));
  return lambda;
}

// ---- subcommands ----

int cmd_table1(const Options& o, json& result) {
  GroupArg g = group_arg(o);
  json records = json::array();
  for (const auto& r : table1_rows(g.type, g.lie_rank, prime_ell(o, false))) records.push_back(to_json(r));
  result = {{"type", type_name(g.type)}, {"rank", g.lie_rank}, {"ell", o.ell}, {"records", records}};
  return kOk;
}

json trivial_record(LieType t, int n, std::uint32_t ell) {
  IrrLabel l;
  l.type = t;
  l.rank = n;
  l.a = {n};
  std::string text = ell ? modular_label_text(l) : to_string(l);
  return {{"type", type_name(t)},
          {"rank", n},
          {"lambda", IVec(n, 0)},
          {"case", 1},
          {"labels_prefilter", {text}},
          {"labels", {text}},
          {"notes", {"zero coweight: L(0) is the trivial module"}},
          {"citations", json::array()}};
}

int cmd_zero_weight(const Options& o, json& result) {
  GroupArg g = group_arg(o);
  RootSystem rs = build_root_system(g.type, g.lie_rank);
  IVec lambda = parse_lambda(o, rs);
  if (o.oracle) {
    std::uint32_t ell = prime_ell(o, true);
    CacheKey key{"oracle", rs.name(), ell, o.seed, to_string(lambda)};
    auto cache = open_cache(o);
    std::optional<json> payload;
    if (cache) payload = cache->load(key);
    if (!payload || !payload->contains("agrees_with_formula") || !payload->contains("certified")) {
      OracleResult r = run_oracle(g.type, g.lie_rank, lambda, ell, o.seed, o.max_dim);
      json j = to_json(r);
      j["certified"] = r.simple_certified && r.lift_independent;
      payload = j;
      if (cache) cache->store(key, *payload);
    }
    bool certified = (*payload)["certified"].get<bool>();
    json agrees = (*payload)["agrees_with_formula"];
    payload->erase("certified");
    result = *payload;
    return (!certified || (agrees.is_boolean() && !agrees.get<bool>())) ? kVerifyFalse : kOk;
  }
  std::uint32_t ell = prime_ell(o, false);
  switch (g.type) {
    case LieType::A:
      result = to_json(zero_weight_typeA(lambda, ell));
      return kOk;
    case LieType::G2:
      for (const auto& n : exceptional_notes()) {
        if (n.group != "G2" || lambda != IVec{2, 3}) continue;
        result = to_json(n);
        if (ell > 2) result["zero_weight_dim"] = g2_recorded_zero_weight_dim(ell);
        return kOk;
      }
      throw Unsupported("no recorded zero weight data for G2 " + to_string(lambda) + "; try --oracle");
    default:
      break;
  }
  if (std::all_of(lambda.begin(), lambda.end(), [](long x) { return x == 0; }) && g.type != LieType::D) {
    if (ell == 2) throw Unsupported("the classical zero-weight table assumes ell > 2");
    result = trivial_record(g.type, g.lie_rank, ell);
    return kOk;
  }
  for (const auto& r : table1_rows(g.type, g.lie_rank, ell))
    if (r.lambda == lambda) {
      result = to_json(r);
      return kOk;
    }
  throw ComputationFailure("small coweight missing from the zero-weight table: " + to_string(lambda));
}

int cmd_springer(const Options& o, json& result) {
  GroupArg g = group_arg(o);
  Convention c = parse_convention(o.convention);
  std::uint32_t ell = prime_ell(o, false);
  json entries = json::array();
  for (const auto& e : correspondence(g.type, g.lie_rank, c, ell, o.seed)) entries.push_back(to_json(e));
  result = {{"group", build_root_system(g.type, g.lie_rank).name()},
            {"convention", to_string(c)},
            {"ell", ell},
            {"entries", entries}};
  return kOk;
}

template <class F>
json coinvariant_report(const WeylGroup& w, F field, bool characters) {
  auto m = coinvariant_algebra(w, field);
  json r = {{"group", w.name()},
            {"field", field.name()},
            {"order", w.order()},
            {"graded_dims", m.graded_dims()},
            {"expected_graded_dims", expected_graded_dims(w)},
            {"total_dim", m.total_dim()},
            {"top_degree", m.top_degree},
            {"top_class_from_root_product", m.top_from_root_product},
            {"is_faithful", is_faithful(m)},
            {"poincare_sign_check", poincare_sign_check(m)}};
  json chars = nullptr;
  if (characters) {
    auto table = character_table(w);
    chars = json::array();
    auto graded = graded_character(m);
    for (std::size_t d = 0; d < graded.size(); ++d) {
      json values = json::array();
      for (const auto& v : graded[d].values) values.push_back(rational_json(v));
      json decomposition = json::object();
      for (const auto& [label, mult] : decompose(*table, graded[d]))
        if (mult) decomposition[to_string(label)] = mult;
      chars.push_back({{"degree", d}, {"values", values}, {"decomposition", decomposition}});
    }
  }
  r["graded_characters"] = chars;
  return r;
}

int cmd_coinv(const Options& o, json& result) {
  GroupArg g = group_arg(o);
  auto w = weyl_group(g.type, g.lie_rank);
  const std::string& f = o.field;
  if (f.empty() || f == "Q" || f == "0") {
    result = coinvariant_report(*w, Rationals{}, true);
    return kOk;
  }
  std::string digits = f.rfind("F_", 0) == 0 ? f.substr(2) : f;
  if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw MalformedInput("--field must be Q or a prime: " + f);
  PrimeField field(std::stoul(digits));
  result = coinvariant_report(*w, field, w->order() % field.p != 0);
  return kOk;
}

void check_decomp_payload(const json& p) {
  for (const char* k : {"group", "ell", "row_labels", "col_labels", "entries", "seed", "tool_version"})
    if (!p.contains(k)) throw ComputationFailure(std::string("cached decomposition matrix lacks ") + k);
}

int cmd_decomp(const Options& o, json& result) {
  GroupArg g = group_arg(o);
  std::uint32_t ell = prime_ell(o, true);
  auto w = weyl_group(g.type, g.lie_rank);
  CacheKey key{"decomp", w->name(), ell, o.seed, ""};
  auto cache = open_cache(o);
  if (cache) {
    if (auto p = cache->load(key)) {
      check_decomp_payload(*p);
      result = *p;
      return kOk;
    }
  }
  result = to_json(*decomposition_matrix(*w, ell, o.seed));
  if (cache) cache->store(key, result);
  return kOk;
}

int cmd_chartable(const Options& o, json& result) {
  GroupArg g = group_arg(o);
  result = to_json(*character_table(g.type, g.lie_rank));
  return kOk;
}

int cmd_small(const Options& o, json& result) {
  GroupArg g = group_arg(o);
  RootSystem rs = build_root_system(g.type, g.lie_rank);
  json list = json::array();
  for (const auto& c : enumerate_small(rs)) list.push_back(c);
  result = {{"group", rs.name()}, {"coweights", list}};
  return kOk;
}

int cmd_verify(const Options& o, json& result) {
  VerifyOptions v;
  if (!o.type.empty() || o.rank >= 0) {
    GroupArg g = group_arg(o);
    v.type = g.type;
    v.rank = g.lie_rank;
  }
  if (!o.field.empty()) v.field = o.field;
  if (o.ell) v.ell = prime_ell(o, true);
  v.seed = o.seed;
  v.max_dim = o.max_dim;
  auto checks = run_checks(suite_tasks(o.suite, v), o.jobs);
  json list = json::array();
  bool passed = true, usage = false, failure = false;
  for (const auto& c : checks) {
    list.push_back(to_json(c));
    passed = passed && c.passed;
    if (c.suite == "error") (c.name == "usage error" ? usage : failure) = true;
  }
  result = {{"suite", o.suite}, {"passed", passed}, {"checks", list}};
  if (usage) return kUsage;
  if (failure) return kFailure;
  return passed ? kOk : kVerifyFalse;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Weyl group modules, modular Springer labels and zero weight spaces of small representations"};
  app.name("springerlab");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "PRNG seed for the meataxe")->capture_default_str();
  auto* json_flag = app.add_flag("--json", o.json_out, "JSON output (default)");
  app.add_flag("--pretty", o.pretty, "plain-text tables")->excludes(json_flag);
  app.add_option("--cache-dir", o.cache_dir, "cache directory (default: $SPRINGERLAB_CACHE)");
  app.add_option("--max-dim", o.max_dim, "largest ambient dimension the oracle may build")->capture_default_str();

  auto group_opts = [&o](CLI::App* s, bool ell) {
    s->add_option("--type", o.type, "A, B, C, D or G2")->required();
    s->add_option("--rank", o.rank, "n for type A (SL_n, S_n), Lie rank otherwise")->required();
    if (ell) s->add_option("--ell", o.ell, "characteristic (0 or a prime)");
  };

  auto* table1 = app.add_subcommand("table1", "zero weight spaces of small representations, types B/C/D");
  group_opts(table1, true);
  auto* zero = app.add_subcommand("zero-weight", "zero weight space of L(lambda) for a small coweight");
  group_opts(zero, true);
  zero->add_option("--lambda", o.lambda, "coweight, comma separated")->required();
  zero->add_flag("--oracle", o.oracle, "construct L(lambda) explicitly over F_ell");
  auto* springer = app.add_subcommand("springer", "Springer correspondence labels");
  group_opts(springer, true);
  springer->add_option("--convention", o.convention, "phi or rho")->required()->check(CLI::IsMember({"phi", "rho"}));
  auto* coinv = app.add_subcommand("coinv", "coinvariant algebra as a graded W-module");
  group_opts(coinv, false);
  coinv->add_option("--field", o.field, "Q (default) or a prime");
  auto* decomp = app.add_subcommand("decomp", "decomposition matrix of W over F_ell");
  group_opts(decomp, true);
  auto* chartable = app.add_subcommand("chartable", "ordinary character table of W");
  group_opts(chartable, false);
  auto* small = app.add_subcommand("small-coweights", "dominant small coweights");
  group_opts(small, false);
  auto* verify = app.add_subcommand("verify", "run a check suite");
  verify->add_option("--suite", o.suite, "all, coinvariants, springer, table1, oracle or decomp")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "coinvariants", "springer", "table1", "oracle", "decomp"}));
  verify->add_option("--type", o.type, "restrict to one group");
  verify->add_option("--rank", o.rank, "n for type A, Lie rank otherwise");
  verify->add_option("--field", o.field, "Q or a prime (coinvariants)");
  verify->add_option("--ell", o.ell, "restrict to one characteristic");
  verify->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
  auto* cache = app.add_subcommand("cache", "inspect the result cache");
  cache->require_subcommand(1);
  auto* cache_ls = cache->add_subcommand("ls", "list cache entries");
  auto* cache_clear = cache->add_subcommand("clear", "delete cache entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  json result;
  int code = kOk;
  try {
    if (*table1)
      code = cmd_table1(o, result);
    else if (*zero)
      code = cmd_zero_weight(o, result);
    else if (*springer)
      code = cmd_springer(o, result);
    else if (*coinv)
      code = cmd_coinv(o, result);
    else if (*decomp)
      code = cmd_decomp(o, result);
    else if (*chartable)
      code = cmd_chartable(o, result);
    else if (*small)
      code = cmd_small(o, result);
    else if (*verify)
      code = cmd_verify(o, result);
    else if (*cache) {
      auto c = open_cache(o);
      if (!c) throw MalformedInput("no cache directory: pass --cache-dir or set SPRINGERLAB_CACHE");
      if (*cache_ls) {
        json entries = json::array();
        for (auto& e : c->list()) entries.push_back(e);
        result = {{"dir", c->dir().string()}, {"entries", entries}};
      } else if (*cache_clear) {
        result = {{"dir", c->dir().string()}, {"removed", c->clear()}};
      }
    }
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const ComputationFailure& e) {
    err << "computation failed: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << "\n";
    return kFailure;
  }
  result = with_schema(std::move(result));
  out << (o.pretty ? render_pretty(result) : dump(result));
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("springerlab");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace springerlab::cli
