#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "springerlab/cli.hpp"

namespace springerlab::cli {

namespace fs = std::filesystem;

std::string CacheKey::text() const {
  return kind + "|" + group + "|ell=" + std::to_string(ell) + "|seed=" + std::to_string(seed) + "|" + extra;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::file_for(const CacheKey& key) const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key.text())));
  return dir_ / (key.kind + "-" + buf + ".json");
}

namespace {

std::optional<json> read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

}  // namespace

std::optional<json> Cache::load(const CacheKey& key) const {
  auto j = read_json(file_for(key));
  if (!j) return std::nullopt;
  if (j->value("schema", "") != kSchema || j->value("tool_version", "") != tool_version() ||
      j->value("key", "") != key.text() || !j->contains("payload"))
    return std::nullopt;
  return (*j)["payload"];
}

void Cache::store(const CacheKey& key, const json& payload) const {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(dir_);
  json entry{{"schema", kSchema},
             {"key", key.text()},
             {"kind", key.kind},
             {"group", key.group},
             {"ell", key.ell},
             {"seed", key.seed},
             {"tool_version", tool_version()},
             {"payload", payload}};
  fs::path target = file_for(key);
  std::ostringstream tag;
  tag << ".tmp-" << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "-" << counter++;
  fs::path tmp = target;
  tmp += tag.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ComputationFailure("cannot write cache file " + tmp.string());
    out << entry.dump(1) << "\n";
    if (!out.flush()) throw ComputationFailure("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ComputationFailure("cannot rename cache file into " + target.string());
  }
}

std::vector<json> Cache::list() const {
  std::vector<json> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    json row{{"file", f.filename().string()}};
    if (auto j = read_json(f)) {
      row["key"] = j->value("key", "");
      row["kind"] = j->value("kind", "");
      row["tool_version"] = j->value("tool_version", "");
      row["current"] = j->value("tool_version", "") == tool_version();
    } else {
      row["key"] = nullptr;
      row["current"] = false;
    }
    out.push_back(row);
  }
  return out;
}

std::size_t Cache::clear() const {
  std::size_t n = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  std::vector<fs::path> victims;
  for (const auto& e : fs::directory_iterator(dir_)) {
    const std::string name = e.path().filename().string();
    if (!e.is_regular_file()) continue;
    if (e.path().extension() == ".json" || name.find(".json.tmp-") != std::string::npos) victims.push_back(e.path());
  }
  for (const auto& v : victims)
    if (fs::remove(v, ec)) ++n;
  return n;
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("SPRINGERLAB_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace springerlab::cli
