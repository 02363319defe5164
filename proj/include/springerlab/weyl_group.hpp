#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "springerlab/partition.hpp"
#include "springerlab/root_system.hpp"

namespace springerlab {

/// Integer matrix acting on coweight coordinates (row-major, d x d).
using IMat = std::vector<long>;

struct WeylElement {
  IMat matrix;
  std::vector<int> word;  ///< reduced word in the simple reflections
  int length() const { return static_cast<int>(word.size()); }
  int sign() const { return word.size() % 2 ? -1 : 1; }
};

/// Signed cycle type; for D the split classes carry a +1/-1 tag, 0 otherwise.
struct SignedCycleType {
  Partition positive;  ///< cycles with sign product +1
  Partition negative;  ///< cycles with sign product -1
  int split = 0;
};

struct ConjugacyClass {
  std::string label;
  std::vector<int> members;  ///< element indices, ascending
  int representative;        ///< element index used for character values
  long size() const { return static_cast<long>(members.size()); }
};

/// Default order bound; covers every classical group of rank <= 4 and G2.
inline constexpr long kWeylOrderBound = 4000;

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, long order_bound = kWeylOrderBound);

  const RootSystem& roots() const { return rs_; }
  LieType type() const { return rs_.type; }
  int rank() const { return rs_.rank; }
  std::string name() const { return rs_.name(); }
  long order() const { return static_cast<long>(elements_.size()); }
  int num_generators() const { return rs_.rank; }

  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(int i) const { return elements_[i]; }
  int identity() const { return 0; }
  int generator(int i) const { return generators_[i]; }

  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_[a]; }
  int index_of(const IMat& m) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int element) const { return class_of_[element]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  /// Index of the class with the given label, or -1.
  int find_class(const std::string& label) const;

  /// Signed permutation data for classical types (in e-coordinates; type A
  /// permutes n+1 coordinates). perm[i] = j means e_i -> sign[i] e_j.
  void signed_permutation(int element, std::vector<int>& perm, std::vector<int>& sign) const;
  SignedCycleType cycle_type(int element) const;

  IVec act(int element, const IVec& coweight) const;

 private:
  std::string class_label(int element) const;

  RootSystem rs_;
  int d_;
  std::vector<WeylElement> elements_;
  std::map<IMat, int> index_;
  std::vector<int> generators_;
  std::vector<int> inverse_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

/// Shared immutable instance per (type, rank).
std::shared_ptr<const WeylGroup> weyl_group(LieType type, int rank);

/// Label of a class of signed cycle type, e.g. "((2),(1))" or "((2,2),())+".
std::string signed_class_label(const SignedCycleType& t, LieType type);

}  // namespace springerlab
