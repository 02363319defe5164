#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/cli.hpp"

using namespace springerlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("springerlab-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented examples") {
    auto t = invoke({"table1", "--type", "C", "--rank", "3", "--ell", "5"});
    CHECK(t.code == 0);
    auto j = nlohmann::json::parse(t.out);
    CHECK(j["schema"] == "springerlab/1");
    CHECK(j["records"].size() == 3);
    for (const auto& r : j["records"])
      for (const char* k : {"type", "rank", "lambda", "case", "labels_prefilter", "labels", "notes", "citations"}) CHECK(r.contains(k));
    CHECK(invoke({"verify", "--suite", "coinvariants", "--type", "B", "--rank", "2", "--field", "Q"}).code == 0);
    CHECK(invoke({"zero-weight", "--type", "A", "--rank", "3", "--lambda", "2,0,-2", "--ell", "3"}).code == 2);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"table1", "--type", "C"}).code == 2);
    CHECK(invoke({"table1", "--type", "Q", "--rank", "3"}).code == 2);
    CHECK(invoke({"table1", "--type", "B", "--rank", "3", "--ell", "2"}).code == 2);
    CHECK(invoke({"table1", "--type", "B", "--rank", "3", "--ell", "4"}).code == 2);
    CHECK(invoke({"zero-weight", "--type", "A", "--rank", "3", "--lambda", "1,0"}).code == 2);
    CHECK(invoke({"zero-weight", "--type", "A", "--rank", "3", "--lambda", "1,0,-1", "--oracle"}).code == 2);
    CHECK(invoke({"springer", "--type", "A", "--rank", "3", "--convention", "psi"}).code == 2);
    CHECK(invoke({"decomp", "--type", "A", "--rank", "3"}).code == 2);
    CHECK(invoke({"verify", "--suite", "nothing"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
  }

  TEST_CASE("subcommands produce schema-tagged JSON") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"zero-weight", "--type", "A", "--rank", "3", "--lambda", "1,0,-1", "--ell", "3"},
             {"zero-weight", "--type", "B", "--rank", "3", "--lambda", "2,1,1", "--ell", "3"},
             {"zero-weight", "--type", "G2", "--rank", "2", "--lambda", "2,3", "--ell", "5"},
             {"springer", "--type", "A", "--rank", "4", "--convention", "rho", "--ell", "2"},
             {"springer", "--type", "C", "--rank", "3", "--convention", "phi", "--ell", "5"},
             {"coinv", "--type", "A", "--rank", "3", "--field", "5"},
             {"coinv", "--type", "B", "--rank", "2", "--field", "2"},
             {"chartable", "--type", "G2", "--rank", "2"},
             {"small-coweights", "--type", "D", "--rank", "4"},
             {"decomp", "--type", "A", "--rank", "4", "--ell", "2"}}) {
      auto r = invoke(args);
      CAPTURE(args[0]);
      CHECK(r.code == 0);
      auto j = nlohmann::json::parse(r.out);
      CHECK(j["schema"] == "springerlab/1");
    }
    auto z = nlohmann::json::parse(invoke({"zero-weight", "--type", "A", "--rank", "3", "--lambda", "1,0,-1", "--ell", "3"}).out);
    CHECK(z["zero_weight_space"] == "D^(2,1)");
    auto s = nlohmann::json::parse(invoke({"small-coweights", "--type", "A", "--rank", "3"}).out);
    CHECK(s["coweights"].size() == 4);
  }

  TEST_CASE("oracle path") {
    auto r = invoke({"zero-weight", "--type", "C", "--rank", "2", "--lambda", "1,1", "--ell", "5", "--oracle"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char* k : {"group", "lambda", "ell", "dim_weyl_surrogate", "dim_simple", "dim_zero_weight", "factors", "agrees_with_formula"})
      CHECK(j.contains(k));
    CHECK(j["dim_zero_weight"] == 2);
    CHECK(j["agrees_with_formula"] == true);
    auto big = invoke({"zero-weight", "--type", "A", "--rank", "4", "--lambda", "1,1,-1,-1", "--ell", "3", "--oracle", "--max-dim", "8"});
    CHECK(big.code == 2);
  }

  TEST_CASE("determinism and pretty output") {
    std::vector<std::string> args{"decomp", "--type", "B", "--rank", "2", "--ell", "3", "--seed", "1337"};
    auto a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto p = invoke({"table1", "--type", "D", "--rank", "4", "--ell", "3", "--pretty"});
    CHECK(p.code == 0);
    CHECK(p.out.find("labels") != std::string::npos);
    CHECK(p.out.find("\"schema\"") == std::string::npos);
  }

  TEST_CASE("cache: warm equals cold, ls and clear") {
    fs::path dir = fresh_dir("cache");
    std::vector<std::string> args{"decomp", "--type", "A", "--rank", "4", "--ell", "3", "--cache-dir", dir.string()};
    auto cold = invoke(args);
    CHECK(cold.code == 0);
    CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
    auto warm = invoke(args);
    CHECK(warm.out == cold.out);
    auto o1 = invoke({"zero-weight", "--type", "A", "--rank", "3", "--lambda", "1,0,-1", "--ell", "2", "--oracle", "--cache-dir", dir.string()});
    auto o2 = invoke({"zero-weight", "--type", "A", "--rank", "3", "--lambda", "1,0,-1", "--ell", "2", "--oracle", "--cache-dir", dir.string()});
    CHECK(o1.code == 0);
    CHECK(o1.out == o2.out);
    auto ls = nlohmann::json::parse(invoke({"cache", "ls", "--cache-dir", dir.string()}).out);
    CHECK(ls["entries"].size() == 2);
    for (const auto& e : ls["entries"]) CHECK(e["current"] == true);

    // a file from another tool version is ignored and replaced
    cli::CacheKey key{"decomp", "A3", 3, 42, ""};
    cli::Cache cache(dir);
    auto stored = nlohmann::json::parse(std::ifstream(cache.file_for(key)));
    stored["tool_version"] = "0.0.0";
    stored["payload"]["entries"] = nlohmann::json::array();
    std::ofstream(cache.file_for(key)) << stored.dump();
    CHECK_FALSE(cache.load(key).has_value());
    CHECK(invoke(args).out == cold.out);

    auto cleared = nlohmann::json::parse(invoke({"cache", "clear", "--cache-dir", dir.string()}).out);
    CHECK(cleared["removed"] == 2);
    CHECK(invoke({"cache", "ls"}).code == (std::getenv("SPRINGERLAB_CACHE") ? 0 : 2));
    fs::remove_all(dir);
  }

  TEST_CASE("cache file names are stable") {
    cli::CacheKey k{"decomp", "A3", 3, 42, ""};
    CHECK(cli::fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(cli::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    cli::Cache c("/tmp/x");
    CHECK(c.file_for(k) == c.file_for(cli::CacheKey{"decomp", "A3", 3, 42, ""}));
    CHECK(c.file_for(k) != c.file_for(cli::CacheKey{"decomp", "A3", 3, 1, ""}));
  }

  TEST_CASE("verify reports false checks with exit 4") {
    std::vector<cli::CheckTask> tasks{[]() { return std::vector<cli::CheckResult>{{"t", "ok", true, ""}}; },
                                      []() { return std::vector<cli::CheckResult>{{"t", "bad", false, ""}}; },
                                      []() -> std::vector<cli::CheckResult> { throw ComputationFailure("boom"); }};
    auto res = cli::run_checks(tasks, 3);
    REQUIRE(res.size() == 3);
    CHECK(res[0].passed);
    CHECK_FALSE(res[1].passed);
    CHECK(res[2].name == "computation failure");
  }
}
