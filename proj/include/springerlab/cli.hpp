#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "springerlab/characters.hpp"
#include "springerlab/decomposition.hpp"
#include "springerlab/oracle.hpp"
#include "springerlab/small_zero.hpp"
#include "springerlab/springer.hpp"

namespace springerlab::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "springerlab/1";

enum ExitCode : int { kOk = 0, kUsage = 2, kFailure = 3, kVerifyFalse = 4 };

std::string tool_version();

// ---- JSON export ----------------------------------------------------------

/// Integer when the denominator is 1, otherwise "p/q".
json rational_json(const mpq_class& q);
json to_json(const SmallRepRecord& r);
json to_json(const TypeAZeroWeight& z);
json to_json(const ExceptionalNote& n);
json to_json(const CorrespondenceEntry& e);
json to_json(const CharacterTable& t);
/// {group, ell, row_labels, col_labels, entries, seed, tool_version}
json to_json(const DecompositionMatrix& d);
/// {group, lambda, ell, dim_weyl_surrogate, dim_simple, dim_zero_weight, factors, agrees_with_formula}
json to_json(const OracleResult& r);

/// Two-space indented dump with a trailing newline. Object keys are sorted,
/// so equal documents print identically.
std::string dump(const json& j);
/// Plain-text rendering for --pretty.
std::string render_pretty(const json& j);

// ---- cache ----------------------------------------------------------------

struct CacheKey {
  std::string kind;   ///< "decomp", "oracle"
  std::string group;
  std::uint32_t ell = 0;
  std::uint64_t seed = 42;
  std::string extra;  ///< artifact-specific discriminator (e.g. lambda)

  std::string text() const;
};

std::uint64_t fnv1a64(const std::string& s);

class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const CacheKey& key) const;

  /// Payload when present, parseable, and written by this tool version for
  /// exactly this key.
  std::optional<json> load(const CacheKey& key) const;
  /// Atomic: written to a temporary file in the same directory, then renamed.
  void store(const CacheKey& key, const json& payload) const;

  /// One summary object per cache file, sorted by file name.
  std::vector<json> list() const;
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

/// --cache-dir if given, else $SPRINGERLAB_CACHE, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

// ---- verify ---------------------------------------------------------------

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::optional<LieType> type;
  std::optional<int> rank;            ///< Lie rank
  std::optional<std::string> field;   ///< "Q" or a prime
  std::optional<std::uint32_t> ell;
  std::uint64_t seed = 42;
  std::size_t max_dim = 4096;
  unsigned workers = 0;               ///< 0: hardware concurrency
};

using CheckTask = std::function<std::vector<CheckResult>()>;

/// "all", "coinvariants", "springer", "table1", "oracle", "decomp";
/// MalformedInput for anything else.
std::vector<CheckTask> suite_tasks(const std::string& suite, const VerifyOptions& opt);

/// Runs tasks on a pool of workers; results keep task order. A task that
/// throws becomes one failed check carrying the message.
std::vector<CheckResult> run_checks(const std::vector<CheckTask>& tasks, unsigned workers);

json to_json(const CheckResult& c);

// ---- entry point ----------------------------------------------------------

/// Parses argv, runs the subcommand, writes the result to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springerlab::cli
