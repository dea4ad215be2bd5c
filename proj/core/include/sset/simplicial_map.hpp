#pragma once

#include <vector>

#include "sset/simplicial_set.hpp"

namespace sset {

/// A simplicial map given on non-degenerate simplices; validated on construction.
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<EZPair> assignment);

  static SimplicialMap identity(ComplexPtr x);

  const FiniteSimplicialSet& source() const { return *source_; }
  const FiniteSimplicialSet& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  const std::vector<EZPair>& assignment() const { return assignment_; }

  const EZPair& image_of(int source_index) const {
    return assignment_[static_cast<std::size_t>(source_index)];
  }
  EZPair operator()(const EZPair& x) const;

  bool is_injective_up_to(int dim) const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.assignment_ == b.assignment_;
  }

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<EZPair> assignment_;
};

/// g ∘ f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

}  // namespace sset
