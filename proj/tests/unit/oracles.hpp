#pragma once

#include <cstdint>
#include <vector>

#include "sset/subdivision.hpp"

namespace oracle {

/// Counts maps sd Δⁿ → X straight from the definition: one n-simplex of X per
/// maximal chain, such that any two agree on their common subchain.
inline std::size_t count_maps(const sset::FiniteSimplicialSet& x, int n) {
  using namespace sset;
  const SdPtr sd = sd_standard(n);
  std::vector<Chain> maximal;
  for (int v : sd->maximal()) maximal.push_back(sd->chain(v));
  const auto& top = x.simplices(n);
  // positions of the common subchain inside each of two maximal chains
  struct Overlap {
    std::size_t other;
    MonotoneOperator mine;
    MonotoneOperator theirs;
  };
  std::vector<std::vector<Overlap>> overlaps(maximal.size());
  for (std::size_t j = 0; j < maximal.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      std::vector<int> pi;
      std::vector<int> pj;
      for (std::size_t a = 0; a < maximal[i].size(); ++a) {
        for (std::size_t b = 0; b < maximal[j].size(); ++b) {
          if (maximal[i][a] == maximal[j][b]) {
            pi.push_back(static_cast<int>(a));
            pj.push_back(static_cast<int>(b));
          }
        }
      }
      if (pi.empty()) continue;
      overlaps[j].push_back({i, MonotoneOperator(n, pj), MonotoneOperator(n, pi)});
    }
  }
  std::vector<std::size_t> pick(maximal.size(), 0);
  std::size_t count = 0;
  std::size_t j = 0;
  // iterative backtracking over the choice for each maximal chain
  pick[0] = 0;
  while (true) {
    if (pick[j] == top.size()) {
      if (j == 0) break;
      pick[j] = 0;
      --j;
      ++pick[j];
      continue;
    }
    bool ok = true;
    for (const auto& o : overlaps[j]) {
      if (x.apply(top[pick[j]], o.mine) != x.apply(top[pick[o.other]], o.theirs)) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++pick[j];
      continue;
    }
    if (j + 1 == maximal.size()) {
      ++count;
      ++pick[j];
      continue;
    }
    ++j;
    pick[j] = 0;
  }
  return count;
}

}  // namespace oracle
