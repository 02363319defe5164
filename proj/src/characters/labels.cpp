#include "springerlab/labels.hpp"

#include <algorithm>
#include <tuple>

#include "springerlab/errors.hpp"

namespace springerlab {

bool IrrLabel::operator<(const IrrLabel& o) const {
  return std::tie(type, rank, a, b, sign, name) < std::tie(o.type, o.rank, o.a, o.b, o.sign, o.name);
}

bool d_pair_before(const Partition& x, const Partition& y) {
  if (size(x) != size(y)) return size(x) > size(y);
  return x > y;
}

IrrLabel make_d_label(int rank, const Partition& x, const Partition& y, int sign) {
  IrrLabel l;
  l.type = LieType::D;
  l.rank = rank;
  if (x == y) {
    l.a = l.b = x;
    l.sign = sign;
  } else if (d_pair_before(x, y)) {
    l.a = x;
    l.b = y;
  } else {
    l.a = y;
    l.b = x;
  }
  return l;
}

std::string to_string(const IrrLabel& l) {
  switch (l.type) {
    case LieType::A: return "S^" + to_string(l.a);
    case LieType::B:
    case LieType::C: return "chi^(" + to_string(l.a) + "," + to_string(l.b) + ")";
    case LieType::D: {
      std::string s = "E^[" + to_string(l.a) + "," + to_string(l.b) + "]";
      if (l.sign > 0) s += "+";
      if (l.sign < 0) s += "-";
      return s;
    }
    case LieType::G2: return l.name;
  }
  return "?";
}

std::string modular_label_text(const IrrLabel& l) {
  switch (l.type) {
    case LieType::A: return "D^" + to_string(l.a);
    case LieType::B:
    case LieType::C: return "D^(" + to_string(l.a) + "," + to_string(l.b) + ")";
    case LieType::D: return to_string(l);
    case LieType::G2: return l.name;
  }
  return "?";
}

namespace {

// Splits "(x),(y)" at the top-level comma.
std::pair<std::string, std::string> split_pair(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw MalformedInput("expected a pair of partitions: " + s);
}

std::string strip(const std::string& s, char open, char close) {
  if (s.size() >= 2 && s.front() == open && s.back() == close) return s.substr(1, s.size() - 2);
  throw MalformedInput("malformed label: " + s);
}

}  // namespace

IrrLabel parse_irr_label(LieType type, int rank, const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  IrrLabel l;
  l.type = type;
  l.rank = rank;
  auto body = [&](const std::string& prefix) {
    if (s.rfind(prefix, 0) == 0) return s.substr(prefix.size());
    return s;
  };
  switch (type) {
    case LieType::A: {
      std::string t = body("S^");
      if (t == s) t = body("D^");
      l.a = parse_partition(t);
      break;
    }
    case LieType::B:
    case LieType::C: {
      std::string t = body("chi^");
      if (t == s) t = body("D^");
      auto [x, y] = split_pair(strip(t, '(', ')'));
      l.a = parse_partition(x);
      l.b = parse_partition(y);
      break;
    }
    case LieType::D: {
      std::string t = body("E^");
      int sign = 0;
      if (!t.empty() && (t.back() == '+' || t.back() == '-')) {
        sign = t.back() == '+' ? 1 : -1;
        t.pop_back();
      }
      auto [x, y] = split_pair(strip(t, '[', ']'));
      l = make_d_label(rank, parse_partition(x), parse_partition(y), sign);
      break;
    }
    case LieType::G2: {
      const auto& names = g2_names();
      if (std::find(names.begin(), names.end(), s) == names.end()) throw MalformedInput("unknown G2 label: " + raw);
      l.name = s;
      break;
    }
  }
  if (!is_valid(l)) throw MalformedInput("invalid label for " + type_name(type) + std::to_string(rank) + ": " + raw);
  return l;
}

bool is_valid(const IrrLabel& l) {
  switch (l.type) {
    case LieType::A: return is_partition(l.a) && size(l.a) == l.rank + 1 && l.b.empty() && l.sign == 0;
    case LieType::B:
    case LieType::C: return is_partition(l.a) && is_partition(l.b) && size(l.a) + size(l.b) == l.rank && l.sign == 0;
    case LieType::D: {
      if (!is_partition(l.a) || !is_partition(l.b) || size(l.a) + size(l.b) != l.rank) return false;
      if (l.a == l.b) return l.sign == 1 || l.sign == -1;
      return l.sign == 0 && d_pair_before(l.a, l.b);
    }
    case LieType::G2: {
      const auto& n = g2_names();
      return l.rank == 2 && std::find(n.begin(), n.end(), l.name) != n.end();
    }
  }
  return false;
}

std::vector<IrrLabel> all_irr_labels(LieType type, int rank) {
  std::vector<IrrLabel> out;
  switch (type) {
    case LieType::A:
      for (auto& p : partitions(rank + 1)) {
        IrrLabel l;
        l.type = type;
        l.rank = rank;
        l.a = p;
        out.push_back(l);
      }
      break;
    case LieType::B:
    case LieType::C:
      for (auto& [x, y] : bipartitions(rank)) {
        IrrLabel l;
        l.type = type;
        l.rank = rank;
        l.a = x;
        l.b = y;
        out.push_back(l);
      }
      break;
    case LieType::D:
      for (auto& [x, y] : bipartitions(rank)) {
        if (x == y) {
          out.push_back(make_d_label(rank, x, y, 1));
          out.push_back(make_d_label(rank, x, y, -1));
        } else if (d_pair_before(x, y)) {
          out.push_back(make_d_label(rank, x, y));
        }
      }
      break;
    case LieType::G2:
      for (const auto& n : g2_names()) {
        IrrLabel l;
        l.type = type;
        l.rank = 2;
        l.name = n;
        out.push_back(l);
      }
      break;
  }
  return out;
}

long label_dimension(const IrrLabel& l) {
  switch (l.type) {
    case LieType::A: return hook_dimension(l.a);
    case LieType::B:
    case LieType::C: return binomial(l.rank, size(l.a)) * hook_dimension(l.a) * hook_dimension(l.b);
    case LieType::D: {
      long d = binomial(l.rank, size(l.a)) * hook_dimension(l.a) * hook_dimension(l.b);
      return l.a == l.b ? d / 2 : d;
    }
    case LieType::G2: return l.name.rfind("phi2", 0) == 0 ? 2 : 1;
  }
  return 0;
}

IrrLabel tensor_sign_label(const IrrLabel& l) {
  IrrLabel r = l;
  switch (l.type) {
    case LieType::A: r.a = transpose(l.a); break;
    case LieType::B:
    case LieType::C:
      r.a = transpose(l.b);
      r.b = transpose(l.a);
      break;
    case LieType::D: {
      int flip = (l.rank / 2) % 2 ? -1 : 1;
      r = make_d_label(l.rank, transpose(l.a), transpose(l.b), l.sign * flip);
      break;
    }
    case LieType::G2: {
      static const std::vector<std::pair<std::string, std::string>> swap = {
          {"phi1,0", "phi1,6"}, {"phi'1,3", "phi''1,3"}, {"phi2,1", "phi2,1"}, {"phi2,2", "phi2,2"}};
      for (const auto& [x, y] : swap) {
        if (l.name == x) r.name = y;
        if (l.name == y) r.name = x;
      }
      break;
    }
  }
  return r;
}

}  // namespace springerlab
