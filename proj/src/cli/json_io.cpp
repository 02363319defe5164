#include <algorithm>
#include <sstream>

#include "springerlab/cli.hpp"

namespace springerlab::cli {

std::string tool_version() { return SPRINGERLAB_VERSION; }

json rational_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

json to_json(const SmallRepRecord& r) {
  return json{{"type", type_name(r.type)},
              {"rank", r.rank},
              {"lambda", r.lambda},
              {"case", r.dichotomy_case},
              {"labels_prefilter", r.labels_prefilter},
              {"labels", r.labels},
              {"notes", r.notes},
              {"citations", r.citations}};
}

json to_json(const TypeAZeroWeight& z) {
  return json{{"group", "SL_" + std::to_string(z.lambda.size())},
              {"lambda", z.lambda},
              {"ell", z.ell},
              {"dual_family", z.dual_family},
              {"effective", z.effective},
              {"lambda_hat", to_string(z.lambda_hat)},
              {"restricted", z.restricted},
              {"case", dichotomy_case(z)},
              {"zero_weight_space", z.label_text()}};
}

json to_json(const ExceptionalNote& n) {
  json dims = json::object();
  for (const auto& [ell, d] : n.zero_weight_dims) dims[std::to_string(ell)] = d;
  return json{{"group", n.group},
              {"lambda", n.lambda},
              {"orbit", n.orbit},
              {"case", n.dichotomy_case},
              {"zero_weight_dims", dims},
              {"statement", n.statement},
              {"citations", n.citations}};
}

json to_json(const CorrespondenceEntry& e) {
  return json{{"orbit", e.orbit ? json(to_string(*e.orbit)) : json(nullptr)},
              {"local_system", to_string(e.local)},
              {"irr", e.irr.text()},
              {"in_image", e.irr.in_image},
              {"table_driven", e.table_driven},
              {"note", e.note}};
}

json to_json(const CharacterTable& t) {
  const WeylGroup& w = t.group();
  json classes = json::array();
  for (const auto& c : w.classes()) classes.push_back({{"label", c.label}, {"size", c.size()}});
  json labels = json::array();
  json values = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    labels.push_back(to_string(t.labels()[i]));
    json row = json::array();
    for (const auto& v : t.rows()[i].values) row.push_back(rational_json(v));
    values.push_back(row);
  }
  return json{{"group", w.name()}, {"order", w.order()}, {"classes", classes}, {"labels", labels}, {"values", values}};
}

json to_json(const DecompositionMatrix& d) {
  return json{{"group", d.group()},
              {"ell", d.ell},
              {"row_labels", d.row_labels()},
              {"col_labels", d.col_labels()},
              {"entries", d.entries},
              {"seed", d.seed},
              {"tool_version", tool_version()}};
}

json to_json(const OracleResult& r) {
  json factors = json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"label", f.label}, {"dim", f.dim}, {"multiplicity", f.multiplicity}, {"identified", f.identified}});
  return json{{"group", r.group},
              {"lambda", r.lambda},
              {"ell", r.ell},
              {"dim_weyl_surrogate", r.dim_weyl_surrogate},
              {"dim_simple", r.dim_simple},
              {"dim_zero_weight", r.dim_zero_weight},
              {"factors", factors},
              {"agrees_with_formula", r.agrees_with_formula ? json(*r.agrees_with_formula) : json(nullptr)}};
}

json to_json(const CheckResult& c) {
  return json{{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += v[i].is_array() ? "; " : ", ";
      s += scalar_text(v[i]);
    }
    return v.empty() ? "[]" : s;
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

bool is_record_list(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); });
}

void render_table(std::ostringstream& os, const json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (auto it = r.begin(); it != r.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::string t = r.contains(cols[k]) ? scalar_text(r[cols[k]]) : "";
      width[k] = std::max(width[k], t.size());
      line.push_back(std::move(t));
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t k = 0; k < line.size(); ++k) {
      os << line[k];
      if (k + 1 < line.size()) os << std::string(width[k] - line[k].size() + 2, ' ');
    }
    os << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render(std::ostringstream& os, const json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (it.key() == "schema") continue;
    if (is_record_list(v)) {
      os << indent << it.key() << ":\n";
      render_table(os, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_array()) {
      os << indent << it.key() << ":\n";
      for (const auto& row : v) os << indent << "  " << scalar_text(row) << "\n";
    } else if (v.is_object()) {
      os << indent << it.key() << ":\n";
      render(os, v, indent + "  ");
    } else {
      os << indent << it.key() << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

std::string render_pretty(const json& j) {
  std::ostringstream os;
  if (j.is_object())
    render(os, j, "");
  else
    os << scalar_text(j) << "\n";
  return os.str();
}

}  // namespace springerlab::cli
