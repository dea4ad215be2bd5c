#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sset/nerve.hpp"
#include "sset/pstructure.hpp"

namespace sset {

/// Strictly increasing sequence of non-empty subsets of {0..n}, as bit masks.
using Chain = std::vector<unsigned>;

/// A map of subset posets determined by its values on singletons and
/// extended by joins.
class JoinMap {
 public:
  JoinMap(int n_src, int n_tgt, std::vector<unsigned> singleton_values);

  static JoinMap identity(int n);
  /// Direct image along a monotone operator.
  static JoinMap of(const MonotoneOperator& op);

  int n_src() const { return n_src_; }
  int n_tgt() const { return n_tgt_; }
  const std::vector<unsigned>& singleton_values() const { return values_; }
  unsigned operator()(unsigned subset) const;
  Chain operator()(const Chain& c) const;

  friend bool operator==(const JoinMap&, const JoinMap&) = default;

 private:
  int n_src_;
  int n_tgt_;
  std::vector<unsigned> values_;
};

/// g ∘ f.
JoinMap compose(const JoinMap& g, const JoinMap& f);
/// Equality checked on every non-empty subset rather than on singletons only.
bool agree_on_all_subsets(const JoinMap& a, const JoinMap& b);

/// j_n^k: i ↦ {i} for i <= k, {0..i} for i > k.
JoinMap j_join(int n, int k);
/// r_n^k : sd Δ^{n+1} → sd Δⁿ.
JoinMap r_join(int n, int k);

/// sd Δⁿ as the nerve of non-empty subsets of {0..n}. Cached per n.
class SdComplex {
 public:
  explicit SdComplex(int n);

  int n() const { return n_; }
  const PosetNerve& nerve() const { return nerve_; }
  const ComplexPtr& complex() const { return nerve_.complex(); }
  /// Masks of the chain of a non-degenerate simplex.
  Chain chain(int index) const;
  int index_of(const Chain& c) const;
  /// The simplex spelled by a weakly increasing sequence of subsets.
  EZPair simplex_of(const Chain& sequence) const;
  int element_of(unsigned mask) const { return element_[mask]; }
  unsigned mask_of(int element) const { return masks_[static_cast<std::size_t>(element)]; }
  /// Indices of the maximal chains ((n+1)! of them).
  const std::vector<int>& maximal() const { return maximal_; }

 private:
  int n_;
  std::vector<unsigned> masks_;
  std::vector<int> element_;
  PosetNerve nerve_;
  std::vector<int> maximal_;
};

using SdPtr = std::shared_ptr<const SdComplex>;

SdPtr sd_standard(int n);

/// Nerve of a join map between the cached sd complexes.
SimplicialMap sd_map(const JoinMap& f);
SimplicialMap sd_monotone(const MonotoneOperator& op);
SimplicialMap j_map(int n, int k);
SimplicialMap r_map(int n, int k);
/// sd Δⁿ → Δⁿ, σ ↦ max σ. The target is standard(n).
SimplicialMap last_vertex(int n);

/// Chains all of whose subsets lie in a face of A.
Subcomplex sd_sub(const Subcomplex& a);

struct EquationReport {
  int equation = 0;
  std::size_t instances = 0;
  std::vector<std::vector<int>> failures;
};

/// All ten j/r equations over every index tuple whose dimensions are <= n_max.
std::vector<EquationReport> check_equations(int n_max);

/// Form (a)..(f) of a chain outside sd Λⁿ_0, or nothing for chains in sd Λⁿ_0.
std::optional<char> sd_horn_form(const Chain& c, int n);

/// Exchanges elements 0 and k in every subset.
Chain swap_elements(const Chain& c, int k);

struct SdHornCertificate {
  SdPtr sd;
  PStructure structure;
};

/// P-structure on sd Λⁿ_k ↪ sd Δⁿ, transported from k = 0.
SdHornCertificate sd_horn_pstructure(int n, int k);

std::string chain_key(const Chain& c);

}  // namespace sset
