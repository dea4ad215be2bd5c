#include "sset/nerve.hpp"

#include <algorithm>
#include <stdexcept>

namespace sset {

FinitePoset::FinitePoset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq)
    : labels_(std::move(labels)), leq_(labels_.size() * labels_.size()) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) leq_[static_cast<std::size_t>(i * n + j)] = leq(i, j);
  }
  for (int i = 0; i < n; ++i) {
    if (!this->leq(i, i)) throw std::invalid_argument("poset relation is not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && this->leq(i, j) && this->leq(j, i)) {
        throw std::invalid_argument("poset relation is not antisymmetric");
      }
      for (int k = 0; k < n; ++k) {
        if (this->leq(i, j) && this->leq(j, k) && !this->leq(i, k)) {
          throw std::invalid_argument("poset relation is not transitive");
        }
      }
    }
  }
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  return {std::move(labels), [](int i, int j) { return i <= j; }};
}

std::vector<unsigned> FinitePoset::nonempty_subset_masks(int n) {
  std::vector<unsigned> masks;
  for (unsigned s = 1; s < (1U << (n + 1)); ++s) masks.push_back(s);
  // by size, then by mask: a linear extension of inclusion
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  return masks;
}

FinitePoset FinitePoset::nonempty_subsets(int n) {
  const std::vector<unsigned> masks = nonempty_subset_masks(n);
  std::vector<std::string> labels;
  for (unsigned s : masks) labels.push_back(MonotoneOperator::from_image_mask(n, s).to_string());
  return {std::move(labels), [&masks](int i, int j) {
            return (masks[static_cast<std::size_t>(i)] & ~masks[static_cast<std::size_t>(j)]) == 0;
          }};
}

FinitePoset FinitePoset::product(const FinitePoset& a, const FinitePoset& b) {
  std::vector<std::string> labels;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) labels.push_back("[" + a.label(i) + "," + b.label(j) + "]");
  }
  const int bn = b.size();
  return {std::move(labels), [&a, &b, bn](int x, int y) {
            return a.leq(x / bn, y / bn) && b.leq(x % bn, y % bn);
          }};
}

namespace {

std::string chain_key(const std::vector<int>& c) {
  std::string k;
  for (int e : c) {
    k += std::to_string(e);
    k += ',';
  }
  return k;
}

}  // namespace

PosetNerve::PosetNerve(FinitePoset poset, int bound) : poset_(std::move(poset)) {
  const int n = poset_.size();
  // Breadth-first by length so faces precede cofaces.
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) layer.push_back({i});
  FiniteSimplicialSet::Builder b(bound);
  for (int d = 0; d <= bound && !layer.empty(); ++d) {
    std::vector<std::vector<int>> next;
    for (auto& c : layer) {
      std::string id = "[";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) id += ',';
        id += poset_.label(c[i]);
      }
      id += "]";
      std::vector<EZPair> faces;
      if (d > 0) {
        for (int i = 0; i <= d; ++i) {
          std::vector<int> f = c;
          f.erase(f.begin() + i);
          faces.push_back(EZPair::nondegenerate(chain_index_.at(chain_key(f)), d - 1));
        }
      }
      const int idx = b.add(std::move(id), d, std::move(faces));
      chain_index_.emplace(chain_key(c), idx);
      for (int e = 0; e < n; ++e) {
        if (poset_.less(c.back(), e)) {
          auto ext = c;
          ext.push_back(e);
          next.push_back(std::move(ext));
        }
      }
      chains_.push_back(std::move(c));
    }
    layer = std::move(next);
  }
  complex_ = std::move(b).build_shared();
}

int PosetNerve::index_of_chain(const std::vector<int>& chain) const {
  auto it = chain_index_.find(chain_key(chain));
  if (it == chain_index_.end()) throw std::out_of_range("not a chain of this nerve");
  return it->second;
}

EZPair PosetNerve::simplex_of(const std::vector<int>& sequence) const {
  if (sequence.empty()) throw std::invalid_argument("empty sequence");
  std::vector<int> distinct;
  std::vector<int> surj;
  for (int e : sequence) {
    if (!distinct.empty() && distinct.back() != e && !poset_.less(distinct.back(), e)) {
      throw std::invalid_argument("sequence is not weakly increasing");
    }
    if (distinct.empty() || distinct.back() != e) distinct.push_back(e);
    surj.push_back(static_cast<int>(distinct.size()) - 1);
  }
  const int top = static_cast<int>(distinct.size()) - 1;
  return {MonotoneOperator(top, std::move(surj)), index_of_chain(distinct)};
}

std::vector<int> PosetNerve::sequence_of(const EZPair& x) const {
  const auto& c = chain(x.core);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(x.dim()) + 1);
  for (int v : x.degeneracy.values()) out.push_back(c[static_cast<std::size_t>(v)]);
  return out;
}

SimplicialMap PosetNerve::map_to(const PosetNerve& target, const std::function<int(int)>& f) const {
  std::vector<EZPair> a;
  a.reserve(chains_.size());
  for (const auto& c : chains_) {
    std::vector<int> img;
    img.reserve(c.size());
    for (int e : c) img.push_back(f(e));
    a.push_back(target.simplex_of(img));
  }
  return {complex_, target.complex_, std::move(a)};
}

NervePtr nerve(const FinitePoset& poset, int bound) {
  return std::make_shared<const PosetNerve>(poset, bound);
}

NervePtr standard(int n, int bound) {
  if (n < 0) throw std::invalid_argument("standard simplex needs n >= 0");
  return nerve(FinitePoset::chain(n), bound < 0 ? n : bound);
}

unsigned vertex_mask(const PosetNerve& standard_simplex, int index) {
  unsigned m = 0;
  for (int v : standard_simplex.chain(index)) m |= 1U << v;
  return m;
}

Subcomplex standard_subcomplex(const NervePtr& s, const std::vector<unsigned>& face_masks) {
  std::vector<int> members;
  for (std::size_t i = 0; i < s->complex()->size(); ++i) {
    const unsigned m = vertex_mask(*s, static_cast<int>(i));
    if (std::any_of(face_masks.begin(), face_masks.end(),
                    [m](unsigned f) { return (m & ~f) == 0; })) {
      members.push_back(static_cast<int>(i));
    }
  }
  return {s->complex(), std::move(members)};
}

Subcomplex boundary(const NervePtr& s) {
  const int n = s->poset().size() - 1;
  const unsigned full = (1U << (n + 1)) - 1;
  std::vector<unsigned> faces;
  for (int i = 0; i <= n; ++i) faces.push_back(full & ~(1U << i));
  return standard_subcomplex(s, faces);
}

Subcomplex horn(const NervePtr& s, int k) {
  const int n = s->poset().size() - 1;
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("horn index out of range");
  const unsigned full = (1U << (n + 1)) - 1;
  std::vector<unsigned> faces;
  for (int i = 0; i <= n; ++i) {
    if (i != k) faces.push_back(full & ~(1U << i));
  }
  return standard_subcomplex(s, faces);
}

std::vector<std::pair<int, int>> PrismComplex::walk(int index) const {
  std::vector<std::pair<int, int>> out;
  for (int e : grid->chain(index)) out.emplace_back(e / (n + 1), e % (n + 1));
  return out;
}

int PrismComplex::index_of_walk(const std::vector<std::pair<int, int>>& w) const {
  std::vector<int> c;
  c.reserve(w.size());
  for (auto [r, col] : w) c.push_back(r * (n + 1) + col);
  return grid->index_of_chain(c);
}

Subcomplex PrismComplex::boundary_part() const {
  std::vector<int> members;
  const unsigned all_cols = (1U << (n + 1)) - 1;
  for (std::size_t i = 0; i < grid->complex()->size(); ++i) {
    unsigned cols = 0;
    for (auto [r, c] : walk(static_cast<int>(i))) cols |= 1U << c;
    if (cols != all_cols) members.push_back(static_cast<int>(i));
  }
  return {grid->complex(), std::move(members)};
}

Subcomplex PrismComplex::horn_part(int k) const {
  if (k < 0 || k > m) throw std::invalid_argument("horn index out of range");
  std::vector<int> members;
  for (std::size_t i = 0; i < grid->complex()->size(); ++i) {
    unsigned rows = 0;
    for (auto [r, c] : walk(static_cast<int>(i))) rows |= 1U << r;
    for (int r = 0; r <= m; ++r) {
      if (r != k && !(rows >> r & 1U)) {
        members.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return {grid->complex(), std::move(members)};
}

PrismComplex product_standard(int m, int n, int bound) {
  if (m < 0 || n < 0) throw std::invalid_argument("product of standard simplices needs m, n >= 0");
  const int b = bound < 0 ? m + n : bound;
  NervePtr grid = nerve(FinitePoset::product(FinitePoset::chain(m), FinitePoset::chain(n)), b);
  NervePtr left = standard(m, b);
  NervePtr right = standard(n, b);
  const int cols = n + 1;
  SimplicialMap to_left = grid->map_to(*left, [cols](int e) { return e / cols; });
  SimplicialMap to_right = grid->map_to(*right, [cols](int e) { return e % cols; });
  return {m, n, grid, left, right, std::move(to_left), std::move(to_right)};
}

}  // namespace sset
