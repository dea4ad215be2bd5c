#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sset/pstructure.hpp"
#include "sset/subcomplex.hpp"
#include "sset/subdivision.hpp"

namespace sset {

/// Thrown when an enumeration exceeds its simplex budget or deadline.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExBudget {
  std::size_t max_simplices = 5'000'000;
  double timeout_seconds = 0;

  /// Defaults, with max_simplices overridden by SSET_BUDGET when set.
  static ExBudget from_environment();
};

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
};

/// Ex X truncated at a bound. Every n-simplex (degenerate or not) is a map
/// sd Δⁿ → X, stored as the X table id of its value on each chain of sd Δⁿ
/// and numbered in enumeration order ("enumeration ids").
class ExComplex {
 public:
  ExComplex(ComplexPtr x, int bound, ExBudget budget = ExBudget::from_environment());

  const FiniteSimplicialSet& base() const { return *x_; }
  const ComplexPtr& base_ptr() const { return x_; }
  const ComplexPtr& complex() const { return ex_; }
  int bound() const { return bound_; }

  std::size_t count(int n) const { return dims_[static_cast<std::size_t>(n)].simplices.size(); }
  const std::vector<std::uint32_t>& values(int n, std::uint32_t id) const {
    return dims_[static_cast<std::size_t>(n)].simplices[id];
  }
  std::optional<std::uint32_t> find(int n, const std::vector<std::uint32_t>& values) const;
  /// Values of σ ∘ g on the chains of sd Δ^{g.n_src()}; g.n_tgt() must be n.
  std::vector<std::uint32_t> precompose(int n, std::uint32_t id, const JoinMap& g) const;
  /// Enumeration id of σ ∘ g; throws std::out_of_range above the bound.
  std::uint32_t precompose_id(int n, std::uint32_t id, const JoinMap& g) const;
  std::uint32_t face(int n, std::uint32_t id, int i) const;

  bool is_nondegenerate(int n, std::uint32_t id) const;
  /// Eilenberg-Zilber form as a simplex of complex().
  EZPair ez(int n, std::uint32_t id) const { return dims_[static_cast<std::size_t>(n)].ez[id]; }
  std::uint32_t id_of(const EZPair& x) const;
  /// Dimension and enumeration id of a non-degenerate simplex of complex().
  std::pair<int, std::uint32_t> locate(int nondeg_index) const {
    return located_[static_cast<std::size_t>(nondeg_index)];
  }

  /// Least k with σ ∘ j_n^k = σ.
  int level(int n, std::uint32_t id) const;
  /// Image of an n-simplex of X (by table id) under the unit.
  std::uint32_t unit_of(int n, std::uint32_t x_table_id) const;
  SimplicialMap unit() const;

  /// Key of an X simplex value.
  std::string value_key(int dim, std::uint32_t x_table_id) const;

 private:
  struct Dim {
    std::vector<std::vector<std::uint32_t>> simplices;
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> index;
    std::vector<EZPair> ez;
    std::vector<std::uint32_t> from_table;
  };
  struct Plan {
    std::vector<int> core;
    std::vector<std::optional<MonotoneOperator>> surj;
  };

  void enumerate(int n, const ExBudget& budget, std::size_t& total,
                 std::chrono::steady_clock::time_point deadline);
  const Plan& plan(const JoinMap& g) const;
  std::string simplex_id(int n, std::uint32_t id) const;

  ComplexPtr x_;
  int bound_;
  std::vector<Dim> dims_;
  ComplexPtr ex_;
  std::vector<std::pair<int, std::uint32_t>> located_;
  mutable std::mutex plan_mu_;
  mutable std::map<std::tuple<int, int, std::vector<unsigned>>, std::unique_ptr<Plan>> plans_;
};

using ExPtr = std::shared_ptr<const ExComplex>;

enum class ExType { unit_image, type_i, type_ii };

struct Decomposition {
  int h = 0;
  std::uint32_t tau = 0;
};

struct ExClass {
  ExType type = ExType::unit_image;
  int level = 0;
  /// Type I: the decomposition σ = τ ∘ r_{n-1}^h.
  std::optional<Decomposition> decomposition;
  /// Type II: enumeration id of σ ∘ r_n^level in dimension n+1, when within bound.
  std::optional<std::uint32_t> parent;
};

/// Type I/II classification of a non-degenerate simplex of level >= 1.
/// Throws std::invalid_argument for degenerate or level-0 simplices.
ExClass classify(const ExComplex& ex, int n, std::uint32_t id);

/// Every (h, τ) with h >= 1, τ of exact level h and σ = τ ∘ r_{n-1}^h, found by
/// scanning all (n-1)-simplices.
std::vector<Decomposition> all_decompositions(const ExComplex& ex, int n, std::uint32_t id);

struct ExCertificate {
  PStructure structure;
  /// Classification of every non-degenerate simplex of Ex X, by index.
  std::vector<ExClass> classes;
};

/// P-structure for X → Ex X within the bound; type II simplices of top
/// dimension are deferred.
ExCertificate ex_pstructure(const ExComplex& ex);

/// Violations of "rank (n, level) strictly decreases along ancestral edges
/// between distinct pair-collapsed nodes".
std::vector<Violation> check_rank_descent(const ExComplex& ex, const ExCertificate& cert);

struct ExTower {
  std::vector<ComplexPtr> stages;
  std::vector<ExPtr> ex;
  /// X → Ex^i X for every i.
  std::vector<SimplicialMap> units;
};

/// X, Ex X, ..., Ex^m X with composite units.
ExTower ex_iterate(ComplexPtr x, int m, int bound, ExBudget budget = ExBudget::from_environment());

/// Ex f : Ex X → Ex Y, σ ↦ f ∘ σ.
SimplicialMap ex_map(const SimplicialMap& f, const ExComplex& ex_x, const ExComplex& ex_y);

struct Subextension {
  Subcomplex sub;
  /// The P-structure restricted to the materialized subcomplex.
  PStructure structure;
  ComplexPtr complex;
  SimplicialMap inclusion;
};

/// X[τ]: nond X together with the EZ core υ of τ and everything below it in
/// the ancestral preorder. Throws std::out_of_range when a needed parent lies
/// above the bound.
Subextension minimal_subextension(const ExComplex& ex, const ExCertificate& cert, const EZPair& tau);

struct J1Report {
  std::size_t simplices = 0;
  std::size_t level0 = 0;
  std::size_t level_at_most1 = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Levels in Ex Y of the images of all non-degenerate simplices under g.
J1Report j1_membership_check(const SimplicialMap& g, const ExComplex& ex_y);

/// Restriction of a P-structure to a subcomplex, re-indexed into its materialization.
PStructure restrict_structure(const PStructure& p, const Subcomplex& sub, const ComplexPtr& materialized);

}  // namespace sset
