#pragma once

#include <map>
#include <optional>
#include <utility>

#include "sset/simplicial_map.hpp"

namespace sset {

/// X ×_Z Y with its two projections. Simplices are compatible pairs.
class Pullback {
 public:
  Pullback(const SimplicialMap& f, const SimplicialMap& g);

  const ComplexPtr& complex() const { return complex_; }
  const SimplicialMap& first() const { return *first_; }
  const SimplicialMap& second() const { return *second_; }

  /// The simplex (a, b); a and b must have equal dimension and image in Z.
  EZPair pair(const EZPair& a, const EZPair& b) const;

 private:
  ComplexPtr complex_;
  std::optional<SimplicialMap> first_;
  std::optional<SimplicialMap> second_;
  ComplexPtr left_;
  ComplexPtr right_;
  std::map<std::pair<EZPair, EZPair>, int> index_;
};

/// Unique map to Δ⁰ (given as a complex with a single vertex).
SimplicialMap terminal_map(ComplexPtr x, ComplexPtr point);

/// X × Y, computed as the pullback over Δ⁰. Both bounds must agree.
Pullback product(ComplexPtr x, ComplexPtr y);

}  // namespace sset
