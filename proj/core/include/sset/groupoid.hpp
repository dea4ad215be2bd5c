#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sset/simplicial_set.hpp"

namespace sset {

class FiniteGroupoid {
 public:
  struct Morphism {
    int source = 0;
    int target = 0;
    std::string name;
  };

  /// compose[g * size + f] is g ∘ f, or -1 when not composable.
  FiniteGroupoid(int objects, std::vector<Morphism> morphisms, std::vector<int> compose);

  /// One object, the cyclic group of the given order ("e", "g", "g2", ...).
  static FiniteGroupoid cyclic(int order);
  /// Exactly one morphism between any two objects ("0>1", ...).
  static FiniteGroupoid codiscrete(int objects);

  int object_count() const { return objects_; }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const Morphism& morphism(int f) const { return morphisms_[static_cast<std::size_t>(f)]; }
  int identity(int object) const { return identities_[static_cast<std::size_t>(object)]; }
  bool is_identity(int f) const;
  /// g ∘ f; throws if not composable.
  int compose(int g, int f) const;
  int inverse(int f) const;
  /// First morphism (in declaration order) from a to b.
  std::optional<int> first_between(int a, int b) const;

 private:
  int objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> compose_;
  std::vector<int> identities_;
};

/// A simplex of a nerve: start object and the morphisms between consecutive vertices.
struct NerveString {
  int start = 0;
  std::vector<int> morphisms;
};

/// Nerve of a finite groupoid truncated at a bound; non-degenerate simplices are
/// strings of non-identity morphisms.
class GroupoidNerve {
 public:
  GroupoidNerve(FiniteGroupoid groupoid, int bound);

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  const ComplexPtr& complex() const { return complex_; }
  EZPair simplex_of(const NerveString& s) const;
  NerveString string_of(const EZPair& x) const;
  /// Object at vertex p of a string.
  int object_at(const NerveString& s, int p) const;

 private:
  std::string key(const NerveString& s) const;

  FiniteGroupoid groupoid_;
  ComplexPtr complex_;
  std::vector<NerveString> strings_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace sset
