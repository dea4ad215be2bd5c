#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sset/groupoid.hpp"
#include "sset/nerve.hpp"
#include "sset/pstructure.hpp"
#include "sset/pullback.hpp"

namespace sset {

/// A (d+1)-simplex of B to be produced by a fibration's filler: its faces at
/// some positions and its image in Δⁿ.
struct FillerRequest {
  int dim = 0;
  std::vector<std::pair<int, EZPair>> faces;
  EZPair image;
};

/// A map f : B → Δⁿ together with a deterministic filler oracle.
struct FibrationStructure {
  std::string kind;
  int n = 0;
  int bound = 0;
  ComplexPtr total;
  NervePtr base;
  std::shared_ptr<const SimplicialMap> projection;
  std::function<std::optional<EZPair>(const FillerRequest&)> filler;
  /// Keeps the objects the filler refers to alive.
  std::shared_ptr<const void> state;
};

FibrationStructure identity_fibration(int n, int bound = -1);
/// Δⁿ × N(G) → Δⁿ.
FibrationStructure groupoid_projection_fibration(int n, const FiniteGroupoid& g, int bound);

/// Checks the horn lifting property of the projection up to the bound.
bool is_fibration_up_to_bound(const FibrationStructure& fs);

struct Profile {
  int r = 0;
  int s = 0;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

Profile profile(const FibrationStructure& fs, int k, const EZPair& x);

/// Values in Δⁿ of the vertices of a simplex of B.
std::vector<int> fibre_values(const FibrationStructure& fs, const EZPair& x);

/// Whether a simplex of B lies over Λⁿ_k.
bool over_horn(const FibrationStructure& fs, int k, const EZPair& x);

struct QEntry {
  EZPair q;
  int z = 0;
  char clause = 'c';
};

struct QTable {
  int k = 0;
  std::map<EZPair, QEntry> entries;
  /// Every problem met while building the table.
  std::vector<Violation> violations;

  const QEntry* find(const EZPair& x) const {
    auto it = entries.find(x);
    return it == entries.end() ? nullptr : &it->second;
  }
};

/// Q on every simplex of B outside A of dimension below the bound, by
/// increasing profile. Cross-checks doubly presented simplices and the
/// commutation d_a Q x = Q d_a x for positions a over k.
QTable q_construct(const FibrationStructure& fs, int k);

struct PullbackHornCertificate {
  Subcomplex a;
  QTable table;
  PStructure structure;
};

/// P-structure on A ↪ B where A is the pullback of Λⁿ_k.
PullbackHornCertificate pullback_horn_pstructure(const FibrationStructure& fs, int k);

/// Order used by the descent check: lexicographic on (r, s), or on
/// (r, r+1-s), counting vertices not over k.
enum class DescentOrder { profile, complement };

/// Violations of descent for the type II simplices: every other face of a
/// parent lies in A, is smaller, or is a parent of a smaller child.
std::vector<Violation> check_profile_descent(const FibrationStructure& fs, const PullbackHornCertificate& cert,
                                             DescentOrder order = DescentOrder::complement);

/// Violations of injectivity of Q on non-degenerate simplices with non-degenerate values.
std::vector<Violation> check_q_injective(const FibrationStructure& fs, const QTable& table);

}  // namespace sset
