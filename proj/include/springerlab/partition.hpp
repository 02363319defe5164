#pragma once

#include <string>
#include <utility>
#include <vector>

namespace springerlab {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;
using Bipartition = std::pair<Partition, Partition>;

int size(const Partition& p);
bool is_partition(const Partition& p);
Partition transpose(const Partition& p);
/// No part repeated ell or more times.
bool is_regular(const Partition& p, int ell);
/// Consecutive part differences (and the last part) all below ell.
bool is_restricted(const Partition& p, int ell);

/// All partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);
std::vector<Bipartition> bipartitions(int n);

/// Dominance: a <= b iff every partial sum of a is at most that of b.
bool dominated_by(const Partition& a, const Partition& b);

/// "(2,1)", empty as "()".
std::string to_string(const Partition& p);
std::string to_string(const Bipartition& p);
/// Parses "(2,1)", "2,1", "()", "", "∅"; throws MalformedInput.
Partition parse_partition(const std::string& s);

/// Number of standard Young tableaux.
long hook_dimension(const Partition& p);

long factorial(int n);
long binomial(int n, int k);

}  // namespace springerlab
