#include "sset/prism.hpp"

#include <algorithm>
#include <stdexcept>

namespace sset {

namespace {

using Walk = std::vector<std::pair<int, int>>;

struct Insertion {
  std::size_t at;
  std::pair<int, int> point;
};

// Where to insert a point on row k to get the parent, if the walk is a child.
std::optional<Insertion> child_insertion(const Walk& w, int m, int k) {
  if (k == m) {
    std::size_t first = w.size();
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p].first == m) {
        first = p;
        break;
      }
    }
    if (first == w.size()) return Insertion{w.size(), {m, w.back().second}};
    if (first == 0) return std::nullopt;
    const auto [r, c] = w[first - 1];
    if (r == m - 1 && c + 1 == w[first].second) return Insertion{first, {m, c}};
    return std::nullopt;
  }
  std::size_t last = w.size();
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].first == k) last = p;
  }
  if (last == w.size()) {
    if (k == 0) return Insertion{0, {0, 0}};
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p].first == k - 1 && w[p + 1].first == k + 1) return Insertion{p + 1, {k, w[p + 1].second}};
    }
    throw std::logic_error("non-base walk skips row k without a double step");
  }
  if (last + 1 < w.size() && w[last + 1].first == k + 1 && w[last + 1].second == w[last].second + 1) {
    return Insertion{last + 1, {k, w[last].second + 1}};
  }
  return std::nullopt;
}

}  // namespace

PrismCertificate prism_pstructure(int m, int n, int k) {
  if (m < 1 || n < 0 || k < 0 || k > m) throw std::invalid_argument("prism needs m >= 1, n >= 0, 0 <= k <= m");
  PrismCertificate cert{product_standard(m, n), {}};
  const FiniteSimplicialSet& b = *cert.prism.grid->complex();
  PStructure& p = cert.structure;
  p.ambient = cert.prism.grid->complex();
  p.base = cert.prism.boundary_part().unite(cert.prism.horn_part(k)).members();
  std::vector<bool> in_base(b.size(), false);
  for (int v : p.base) in_base[static_cast<std::size_t>(v)] = true;
  for (int v = 0; v < static_cast<int>(b.size()); ++v) {
    if (in_base[static_cast<std::size_t>(v)]) continue;
    const Walk w = cert.prism.walk(v);
    const auto ins = child_insertion(w, m, k);
    if (!ins) continue;
    Walk parent = w;
    parent.insert(parent.begin() + static_cast<std::ptrdiff_t>(ins->at), ins->point);
    p.pairs.push_back({v, cert.prism.index_of_walk(parent), static_cast<int>(ins->at)});
  }
  return cert;
}

}  // namespace sset
