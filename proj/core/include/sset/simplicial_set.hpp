#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sset/operator.hpp"

namespace sset {

/// Eilenberg-Zilber normal form of a simplex: degeneracy^* core, with the
/// degeneracy a surjection and core a non-degenerate simplex (by index).
struct EZPair {
  MonotoneOperator degeneracy;
  int core = 0;

  int dim() const { return degeneracy.source_dim(); }
  bool is_nondegenerate() const { return degeneracy.source_dim() == degeneracy.target_dim(); }

  static EZPair nondegenerate(int core, int dim) { return {MonotoneOperator::identity(dim), core}; }

  friend bool operator==(const EZPair&, const EZPair&) = default;
  friend std::strong_ordering operator<=>(const EZPair& a, const EZPair& b) {
    if (auto c = a.core <=> b.core; c != 0) return c;
    return a.degeneracy <=> b.degeneracy;
  }
};

struct EZPairHash {
  std::size_t operator()(const EZPair& p) const noexcept;
};

struct NondegSimplex {
  std::string id;
  int dim = 0;
  /// d_0 .. d_dim, each a (dim-1)-simplex; empty for vertices.
  std::vector<EZPair> faces;
};

/// All d-simplices of a complex with integer ids and a flattened face table.
struct SimplexTable {
  int dim = 0;
  std::vector<EZPair> simplices;
  std::unordered_map<EZPair, std::uint32_t, EZPairHash> index;
  /// faces[(dim+1)*id + i] is the id of d_i in the (dim-1) table.
  std::vector<std::uint32_t> faces;

  std::size_t size() const { return simplices.size(); }
  std::uint32_t face(std::uint32_t id, int i) const {
    return faces[static_cast<std::size_t>(dim + 1) * id + static_cast<std::size_t>(i)];
  }
};

class FiniteSimplicialSet;
using ComplexPtr = std::shared_ptr<const FiniteSimplicialSet>;

/// A simplicial set truncated at dim_bound, presented by its non-degenerate
/// simplices and their face tables. Immutable after construction.
class FiniteSimplicialSet {
 public:
  class Builder {
   public:
    explicit Builder(int dim_bound) : dim_bound_(dim_bound) {}

    /// Faces must reference simplices added earlier.
    int add(std::string id, int dim, std::vector<EZPair> faces);
    std::optional<int> find(std::string_view id) const;
    const NondegSimplex& get(int index) const { return simplices_[static_cast<std::size_t>(index)]; }
    std::size_t size() const { return simplices_.size(); }

    /// Validates the simplicial identities and produces the complex.
    FiniteSimplicialSet build() &&;
    ComplexPtr build_shared() &&;

   private:
    int dim_bound_;
    std::vector<NondegSimplex> simplices_;
    std::unordered_map<std::string, int> ids_;
  };

  FiniteSimplicialSet(const FiniteSimplicialSet&) = delete;
  FiniteSimplicialSet& operator=(const FiniteSimplicialSet&) = delete;
  FiniteSimplicialSet(FiniteSimplicialSet&&) noexcept;
  FiniteSimplicialSet& operator=(FiniteSimplicialSet&&) noexcept;
  ~FiniteSimplicialSet();

  int dim_bound() const { return dim_bound_; }
  /// Number of non-degenerate simplices.
  std::size_t size() const { return simplices_.size(); }
  const NondegSimplex& nondeg(int index) const { return simplices_[static_cast<std::size_t>(index)]; }
  const std::vector<NondegSimplex>& nondeg_simplices() const { return simplices_; }
  std::span<const int> nondeg_of_dim(int d) const;
  /// Largest dimension carrying a non-degenerate simplex, or -1 when empty.
  int top_dim() const;

  std::optional<int> find(std::string_view id) const;
  int index_of(std::string_view id) const;
  const std::string& id(int index) const { return nondeg(index).id; }
  int dim_of(int index) const { return nondeg(index).dim; }

  EZPair simplex(int index) const { return EZPair::nondegenerate(index, dim_of(index)); }
  /// The action x ↦ x·op of a monotone operator; op.target_dim() must equal x.dim().
  EZPair apply(const EZPair& x, const MonotoneOperator& op) const;
  EZPair face(const EZPair& x, int i) const;
  EZPair degeneracy(const EZPair& x, int j) const;
  /// Vertex (non-degenerate 0-simplex index) at every position of x.
  std::vector<int> vertices(const EZPair& x) const;

  /// Canonical key "core" or "core*[surjection]".
  std::string key(const EZPair& x) const;
  /// Validates an EZPair against this complex.
  bool is_valid(const EZPair& x) const;

  /// All d-simplices. Throws std::out_of_range when d exceeds dim_bound.
  const std::vector<EZPair>& simplices(int d) const { return table(d).simplices; }
  const SimplexTable& table(int d) const;
  std::uint32_t table_id(const EZPair& x) const;

  /// Re-checks all simplicial identities d_i d_j = d_{j-1} d_i on non-degenerate simplices.
  void validate() const;

 private:
  FiniteSimplicialSet(int dim_bound, std::vector<NondegSimplex> simplices,
                      std::unordered_map<std::string, int> ids);

  struct TableCache;

  int dim_bound_;
  std::vector<NondegSimplex> simplices_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::vector<int>> by_dim_;
  std::unique_ptr<TableCache> cache_;
};

}  // namespace sset
