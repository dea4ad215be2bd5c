#pragma once

#include <vector>

#include "sset/simplicial_map.hpp"

namespace sset {

/// A face-closed set of non-degenerate simplices of an ambient complex.
class Subcomplex {
 public:
  /// Throws std::invalid_argument if members are not closed under faces.
  Subcomplex(ComplexPtr ambient, std::vector<int> members);

  static Subcomplex generated_by(ComplexPtr ambient, const std::vector<int>& generators);
  static Subcomplex full(ComplexPtr ambient);
  static Subcomplex empty(ComplexPtr ambient);

  const FiniteSimplicialSet& ambient() const { return *ambient_; }
  const ComplexPtr& ambient_ptr() const { return ambient_; }
  /// Sorted indices into the ambient complex.
  const std::vector<int>& members() const { return members_; }
  bool contains(int index) const { return mask_[static_cast<std::size_t>(index)]; }
  bool contains(const EZPair& x) const { return contains(x.core); }
  std::size_t size() const { return members_.size(); }

  struct Materialized {
    ComplexPtr complex;
    SimplicialMap inclusion;
  };
  /// Standalone copy of the subcomplex (same ids) with its inclusion.
  Materialized materialize() const;

  Subcomplex unite(const Subcomplex& other) const;

 private:
  ComplexPtr ambient_;
  std::vector<int> members_;
  std::vector<bool> mask_;
};

}  // namespace sset
