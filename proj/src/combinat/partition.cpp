#include "springerlab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "springerlab/errors.hpp"

namespace springerlab {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int j = 1; j <= p[0]; ++j) {
    int c = 0;
    for (int x : p) c += (x >= j);
    t.push_back(c);
  }
  return t;
}

bool is_regular(const Partition& p, int ell) {
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (static_cast<int>(j - i) >= ell) return false;
    i = j;
  }
  return true;
}

bool is_restricted(const Partition& p, int ell) { return is_regular(transpose(p), ell); }

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& alpha : partitions(a))
      for (const auto& beta : partitions(n - a)) out.emplace_back(alpha, beta);
  return out;
}

bool dominated_by(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string to_string(const Bipartition& p) { return "(" + to_string(p.first) + "," + to_string(p.second) + ")"; }

Partition parse_partition(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "\xE2\x88\x85") return {};
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw MalformedInput("unbalanced partition: " + raw);
    s = s.substr(1, s.size() - 2);
  }
  Partition p;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw MalformedInput("bad partition part in: " + raw);
    p.push_back(std::stoi(tok));
    i = j + 1;
  }
  if (!is_partition(p)) throw MalformedInput("not a partition: " + raw);
  return p;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long hook_dimension(const Partition& p) {
  Partition t = transpose(p);
  long hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (t[j] - static_cast<int>(i) - 1) + 1;
  return factorial(size(p)) / hooks;
}

}  // namespace springerlab
