#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "springerlab/labels.hpp"
#include "springerlab/weyl_group.hpp"

namespace springerlab {

/// Rational values on the conjugacy classes of one group, in class order.
struct ClassFunction {
  std::string group;
  std::vector<mpq_class> values;

  bool operator==(const ClassFunction& o) const { return group == o.group && values == o.values; }
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction operator+(const ClassFunction& o) const;
};

class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const WeylGroup> w, std::vector<IrrLabel> labels, std::vector<ClassFunction> rows);

  const WeylGroup& group() const { return *w_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return w_; }
  const std::vector<IrrLabel>& labels() const { return labels_; }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const ClassFunction& character(const IrrLabel& l) const;
  int index(const IrrLabel& l) const;
  std::size_t size() const { return labels_.size(); }

 private:
  std::shared_ptr<const WeylGroup> w_;
  std::vector<IrrLabel> labels_;
  std::vector<ClassFunction> rows_;
};

/// Memoised per (type, rank).
std::shared_ptr<const CharacterTable> character_table(LieType type, int rank);
std::shared_ptr<const CharacterTable> character_table(const WeylGroup& w);

mpq_class inner_product(const WeylGroup& w, const ClassFunction& f, const ClassFunction& g);

/// Multiplicities of every irreducible; throws MalformedInput for non-characters.
std::map<IrrLabel, long> decompose(const CharacterTable& t, const ClassFunction& f);

ClassFunction sign_character(const WeylGroup& w);
ClassFunction trivial_character(const WeylGroup& w);
ClassFunction regular_character(const WeylGroup& w);
ClassFunction zero_function(const WeylGroup& w);

/// Murnaghan-Nakayama for S_n.
mpq_class sn_character(const Partition& lambda, const Partition& cycle_type);
/// Bipartition Murnaghan-Nakayama for the hyperoctahedral group.
mpq_class bn_character(const Bipartition& label, const Partition& positive_cycles, const Partition& negative_cycles);

}  // namespace springerlab
