#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sset/simplicial_map.hpp"

namespace sset {

enum class LiftingFamily { horns, boundaries };

/// A lifting square with no diagonal: the outer faces in the source and the
/// simplex of the target they lie over.
struct LiftingWitness {
  int dim = 0;
  /// Missing face index for horns, -1 for boundaries.
  int horn_index = -1;
  /// Keys of the given faces in the source, in face order (missing one skipped).
  std::vector<std::string> faces;
  std::string base;
};

struct LiftingResult {
  bool holds = true;
  std::size_t squares = 0;
  std::optional<LiftingWitness> witness;
};

/// Exhaustive right lifting property check of p against all horn inclusions
/// (or boundary inclusions) of dimension 1..bound (0..bound for boundaries).
LiftingResult has_rlp(const SimplicialMap& p, LiftingFamily family, int bound);

/// All compatible tuples of (n-1)-simplices indexed by [0..n] minus `skip`
/// (skip = -1 for full boundaries), as ids into x.table(n-1).
std::vector<std::vector<std::uint32_t>> face_tuples(const FiniteSimplicialSet& x, int n, int skip);

/// An n-simplex of x whose faces at all positions except `skip` are the given
/// table ids, or nothing.
std::optional<EZPair> find_filler(const FiniteSimplicialSet& x, int n, int skip,
                                  const std::vector<std::uint32_t>& faces);

}  // namespace sset
