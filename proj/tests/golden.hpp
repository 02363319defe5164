#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "springerlab/small_zero.hpp"

namespace golden {

using nlohmann::json;
using namespace springerlab;

inline json load_table1() {
  std::ifstream in(std::string(SPRINGERLAB_TEST_DATA) + "/table1_golden.json");
  return json::parse(in);
}

inline IrrLabel label_of(LieType t, int n, const json& s) {
  Partition a = s["a"].get<Partition>(), b = s["b"].get<Partition>();
  if (t == LieType::D) return make_d_label(n, a, b, s["sign"].get<int>());
  IrrLabel l;
  l.type = t;
  l.rank = n;
  l.a = a;
  l.b = b;
  return l;
}

/// Compares table1_rows against every golden record; returns the mismatches.
inline std::vector<std::string> compare_table1(const json& g) {
  std::vector<std::string> bad;
  std::set<std::tuple<std::string, int, unsigned>> groups;
  for (const auto& r : g["records"])
    groups.insert(std::make_tuple(r["type"].get<std::string>(), r["rank"].get<int>(), r["ell"].get<unsigned>()));
  for (const auto& [ts, n, ell] : groups) {
    LieType t = parse_type(ts);
    auto rows = table1_rows(t, n, ell);
    std::vector<const json*> want;
    for (const auto& r : g["records"])
      if (r["type"] == ts && r["rank"] == n && r["ell"] == ell) want.push_back(&r);
    const std::string tag = ts + std::to_string(n) + "/" + std::to_string(ell);
    if (rows.size() != want.size()) bad.push_back(tag + ": record count");
    for (const json* w : want) {
      IVec lambda = (*w)["lambda"].get<IVec>();
      auto it = std::find_if(rows.begin(), rows.end(), [&](const SmallRepRecord& r) { return r.lambda == lambda; });
      if (it == rows.end()) {
        bad.push_back(tag + ": missing " + to_string(lambda));
        continue;
      }
      std::set<std::string> pre, post, got_pre(it->labels_prefilter.begin(), it->labels_prefilter.end()),
          got_post(it->labels.begin(), it->labels.end());
      for (const auto& s : (*w)["prefilter"]) pre.insert(modular_label_text(label_of(t, n, s)));
      for (const auto& s : (*w)["labels"]) post.insert(modular_label_text(label_of(t, n, s)));
      if (pre != got_pre) bad.push_back(tag + " " + to_string(lambda) + ": labels before filtering");
      if (post != got_post) bad.push_back(tag + " " + to_string(lambda) + ": labels after filtering");
      if ((*w)["case"].get<int>() != it->dichotomy_case) bad.push_back(tag + " " + to_string(lambda) + ": case");
    }
  }
  return bad;
}

/// The killed summand appears before filtering, not after, and a note says so.
inline bool caveat_holds(const json& g) {
  const json& c = g["caveat"];
  LieType t = parse_type(c["type"]);
  int n = c["rank"];
  auto rows = table1_rows(t, n, c["ell"].get<unsigned>());
  std::string killed = modular_label_text(label_of(t, n, c["killed"]));
  for (const auto& r : rows) {
    if (r.lambda != c["lambda"].get<IVec>()) continue;
    bool pre = std::find(r.labels_prefilter.begin(), r.labels_prefilter.end(), killed) != r.labels_prefilter.end();
    bool post = std::find(r.labels.begin(), r.labels.end(), killed) != r.labels.end();
    bool note = std::any_of(r.notes.begin(), r.notes.end(), [&](const std::string& s) {
      return s.find(killed) != std::string::npos && s.find("0") != std::string::npos;
    });
    return pre && !post && note;
  }
  return false;
}

}  // namespace golden
