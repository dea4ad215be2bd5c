#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "sset/simplicial_map.hpp"
#include "sset/subcomplex.hpp"

namespace sset {

class FinitePoset {
 public:
  /// leq(i, j) decides i <= j; validated to be a partial order.
  FinitePoset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq);

  static FinitePoset chain(int n);
  /// Non-empty subsets of {0..n} under inclusion, labelled "[0,2]" etc.
  static FinitePoset nonempty_subsets(int n);
  /// Element order used by nonempty_subsets(n): by size, then by mask.
  static std::vector<unsigned> nonempty_subset_masks(int n);
  static FinitePoset product(const FinitePoset& a, const FinitePoset& b);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i * size() + j)]; }
  bool less(int i, int j) const { return i != j && leq(i, j); }

 private:
  std::vector<std::string> labels_;
  std::vector<bool> leq_;
};

/// Nerve of a finite poset, truncated at a dimension bound. Non-degenerate
/// d-simplices are the strict chains of d+1 elements; ids are "[a,b,c]" over
/// the element labels.
class PosetNerve {
 public:
  PosetNerve(FinitePoset poset, int bound);

  const FinitePoset& poset() const { return poset_; }
  const ComplexPtr& complex() const { return complex_; }
  const std::vector<int>& chain(int index) const { return chains_[static_cast<std::size_t>(index)]; }
  int index_of_chain(const std::vector<int>& chain) const;
  /// The simplex spelled by a weakly increasing sequence of elements.
  EZPair simplex_of(const std::vector<int>& sequence) const;
  /// Element at every position of a simplex.
  std::vector<int> sequence_of(const EZPair& x) const;
  /// Nerve of a monotone map of posets into another nerve.
  SimplicialMap map_to(const PosetNerve& target, const std::function<int(int)>& f) const;

 private:
  FinitePoset poset_;
  ComplexPtr complex_;
  std::vector<std::vector<int>> chains_;
  std::unordered_map<std::string, int> chain_index_;
};

using NervePtr = std::shared_ptr<const PosetNerve>;

NervePtr nerve(const FinitePoset& poset, int bound);

/// Δⁿ truncated at bound (default n). Vertex i is poset element i.
NervePtr standard(int n, int bound = -1);
/// ∂Δⁿ as a subcomplex of the given standard simplex.
Subcomplex boundary(const NervePtr& standard_simplex);
/// Λⁿ_k: all faces d_i, i ≠ k.
Subcomplex horn(const NervePtr& standard_simplex, int k);
/// Subcomplex of Δⁿ generated by the faces with the given vertex masks.
Subcomplex standard_subcomplex(const NervePtr& standard_simplex, const std::vector<unsigned>& face_masks);
/// Vertex mask of a non-degenerate simplex of a standard simplex.
unsigned vertex_mask(const PosetNerve& standard_simplex, int index);

/// Δᵐ × Δⁿ as the nerve of the grid poset; non-degenerate simplices are lattice walks.
struct PrismComplex {
  int m = 0;
  int n = 0;
  NervePtr grid;
  NervePtr left;   ///< Δᵐ
  NervePtr right;  ///< Δⁿ
  SimplicialMap to_left;
  SimplicialMap to_right;

  /// Row/column of every point of a walk.
  std::vector<std::pair<int, int>> walk(int index) const;
  int index_of_walk(const std::vector<std::pair<int, int>>& walk) const;
  /// Δᵐ × ∂Δⁿ: walks that skip a column.
  Subcomplex boundary_part() const;
  /// Λᵐ_k × Δⁿ: walks that skip a row other than k.
  Subcomplex horn_part(int k) const;
};

PrismComplex product_standard(int m, int n, int bound = -1);

}  // namespace sset
