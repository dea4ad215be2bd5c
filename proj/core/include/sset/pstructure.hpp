#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sset/simplicial_set.hpp"

namespace sset {

struct PairRecord {
  int child = 0;
  int parent = 0;
  int face_index = 0;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

/// Parent/child pairing of nond B ∖ nond A. Simplices are indices into the
/// ambient complex. `deferred` lists children whose parents lie above the
/// dimension bound; they are excluded from verification.
struct PStructure {
  ComplexPtr ambient;
  std::vector<int> base;
  std::vector<PairRecord> pairs;
  std::vector<int> deferred;
};

struct Violation {
  std::string kind;
  std::string subject;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// The relation generated by faces among non-base simplices, parent edges, and
/// base simplices sitting below every non-base simplex they are faces of.
class AncestralGraph {
 public:
  explicit AncestralGraph(const PStructure& p);

  int size() const { return static_cast<int>(below_.size()); }
  const std::vector<int>& below(int v) const { return below_[static_cast<std::size_t>(v)]; }
  bool in_base(int v) const { return role_[static_cast<std::size_t>(v)] == Role::base; }
  bool is_child(int v) const { return role_[static_cast<std::size_t>(v)] == Role::child; }
  bool is_parent(int v) const { return role_[static_cast<std::size_t>(v)] == Role::parent; }
  bool excluded(int v) const { return role_[static_cast<std::size_t>(v)] == Role::excluded; }
  /// Paired simplex, or -1.
  int partner(int v) const { return partner_[static_cast<std::size_t>(v)]; }

  /// Strongly connected component of every vertex; components are numbered in
  /// reverse topological order (every edge goes to an equal or smaller number).
  const std::vector<int>& components() const { return scc_; }
  int component_count() const { return scc_count_; }

  /// Strict down-set of x, by graph reachability.
  std::vector<int> predecessors(int x) const;
  /// Strict down-set of x, by iterated saturation under faces and parents.
  std::vector<int> predecessors_by_saturation(int x) const;

 private:
  enum class Role : unsigned char { base, child, parent, excluded, unassigned };

  std::vector<std::vector<int>> below_;
  std::vector<Role> role_;
  std::vector<int> partner_;
  std::vector<int> scc_;
  int scc_count_ = 0;
};

Report verify_pstructure(const PStructure& p);

/// Distinct non-degenerate cores of the codimension-one faces of a simplex.
std::vector<int> facet_cores(const FiniteSimplicialSet& b, int x);

/// Face indices i with d_i parent = child.
std::vector<int> face_positions(const FiniteSimplicialSet& b, int parent, int child);

struct HornAttachment {
  int parent = 0;
  int child = 0;
  int horn_dim = 0;
  int horn_index = 0;

  friend bool operator==(const HornAttachment&, const HornAttachment&) = default;
};

struct AnodynePresentation {
  std::vector<std::vector<HornAttachment>> stages;
};

/// The filtration level F of every base simplex (0) and child (>= 1); -1 elsewhere.
std::vector<int> filtration_levels(const PStructure& p);

/// Stage n holds the pairs whose child has F = n+1. Throws
/// std::invalid_argument when the P-structure does not verify.
AnodynePresentation compile_presentation(const PStructure& p);

/// Replays a presentation from `base`, checking each stage is a pushout of
/// horns and that the result is `target` (all of nond B when empty).
Report verify_presentation(const FiniteSimplicialSet& b, const std::vector<int>& base,
                           const AnodynePresentation& pres, const std::vector<int>& target = {});

/// Horn data forced by the set of simplices added at one stage.
std::optional<std::vector<HornAttachment>> infer_horns(const FiniteSimplicialSet& b, const std::vector<bool>& present,
                                                       const std::vector<int>& added);

/// nond B minus the deferred children: the part a truncated P-structure covers.
std::vector<int> complete_fragment(const PStructure& p);

}  // namespace sset
