#include "sset/lifting.hpp"

#include <map>
#include <stdexcept>

namespace sset {

namespace {

std::vector<int> positions(int n, int skip) {
  std::vector<int> out;
  for (int i = 0; i <= n; ++i) {
    if (i != skip) out.push_back(i);
  }
  return out;
}

void extend(const FiniteSimplicialSet& x, int n, const std::vector<int>& pos, std::vector<std::uint32_t>& cur,
            std::vector<std::vector<std::uint32_t>>& out) {
  const std::size_t at = cur.size();
  if (at == pos.size()) {
    out.push_back(cur);
    return;
  }
  const SimplexTable& t = x.table(n - 1);
  const int j = pos[at];
  for (std::uint32_t c = 0; c < t.size(); ++c) {
    bool ok = true;
    for (std::size_t q = 0; q < at && ok && n >= 2; ++q) {
      const int i = pos[q];
      // d_i x_j = d_{j-1} x_i for i < j
      ok = t.face(c, i) == t.face(cur[q], j - 1);
    }
    if (!ok) continue;
    cur.push_back(c);
    extend(x, n, pos, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> face_tuples(const FiniteSimplicialSet& x, int n, int skip) {
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur;
  extend(x, n, positions(n, skip), cur, out);
  return out;
}

std::optional<EZPair> find_filler(const FiniteSimplicialSet& x, int n, int skip,
                                  const std::vector<std::uint32_t>& faces) {
  const SimplexTable& t = x.table(n);
  const auto pos = positions(n, skip);
  for (std::uint32_t c = 0; c < t.size(); ++c) {
    bool ok = true;
    for (std::size_t q = 0; q < pos.size() && ok; ++q) ok = t.face(c, pos[q]) == faces[q];
    if (ok) return t.simplices[c];
  }
  return std::nullopt;
}

LiftingResult has_rlp(const SimplicialMap& p, LiftingFamily family, int bound) {
  const FiniteSimplicialSet& x = p.source();
  const FiniteSimplicialSet& y = p.target();
  if (bound > x.dim_bound() || bound > y.dim_bound()) throw std::out_of_range("lifting bound exceeds complex bound");
  LiftingResult result;
  const int lo = family == LiftingFamily::horns ? 1 : 0;
  for (int n = lo; n <= bound; ++n) {
    const SimplexTable& xt = x.table(n);
    const SimplexTable& yt = y.table(n);
    // candidate lifts grouped by (image, outer faces)
    const int ks = family == LiftingFamily::horns ? n : 0;
    for (int k = 0; k <= ks; ++k) {
      const int skip = family == LiftingFamily::horns ? k : -1;
      const auto pos = positions(n, skip);
      std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, bool> lifts;
      for (std::uint32_t c = 0; c < xt.size(); ++c) {
        std::vector<std::uint32_t> f;
        for (int i : pos) f.push_back(xt.face(c, i));
        lifts[{y.table_id(p(xt.simplices[c])), std::move(f)}] = true;
      }
      const SimplexTable* xf = n > 0 ? &x.table(n - 1) : nullptr;
      const SimplexTable* yf = n > 0 ? &y.table(n - 1) : nullptr;
      for (const auto& tuple : face_tuples(x, n, skip)) {
        std::vector<std::uint32_t> images;
        for (std::uint32_t f : tuple) images.push_back(yf->index.at(p(xf->simplices[f])));
        for (std::uint32_t b = 0; b < yt.size(); ++b) {
          bool over = true;
          for (std::size_t q = 0; q < pos.size() && over; ++q) over = yt.face(b, pos[q]) == images[q];
          if (!over) continue;
          ++result.squares;
          if (lifts.count({b, tuple})) continue;
          result.holds = false;
          LiftingWitness w{n, skip, {}, y.key(yt.simplices[b])};
          for (std::uint32_t f : tuple) w.faces.push_back(x.key(xf->simplices[f]));
          result.witness = std::move(w);
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace sset
