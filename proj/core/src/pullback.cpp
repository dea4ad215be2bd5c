#include "sset/pullback.hpp"

#include <stdexcept>

#include "sset/nerve.hpp"

namespace sset {

Pullback::Pullback(const SimplicialMap& f, const SimplicialMap& g)
    : left_(f.source_ptr()), right_(g.source_ptr()) {
  if (f.target_ptr() != g.target_ptr()) throw std::invalid_argument("pullback needs a common codomain");
  const int bound = f.source().dim_bound();
  if (g.source().dim_bound() != bound || f.target().dim_bound() < bound) {
    throw std::invalid_argument("pullback needs a common dimension bound");
  }
  const FiniteSimplicialSet& x = f.source();
  const FiniteSimplicialSet& y = g.source();
  FiniteSimplicialSet::Builder b(bound);
  std::vector<EZPair> first;
  std::vector<EZPair> second;
  for (int d = 0; d <= bound; ++d) {
    std::map<EZPair, std::vector<EZPair>> by_image;
    for (const EZPair& s : y.simplices(d)) by_image[g(s)].push_back(s);
    for (const EZPair& a : x.simplices(d)) {
      auto it = by_image.find(f(a));
      if (it == by_image.end()) continue;
      for (const EZPair& c : it->second) {
        bool jointly_degenerate = false;
        for (int j = 0; j < d && !jointly_degenerate; ++j) {
          jointly_degenerate = a.degeneracy(j) == a.degeneracy(j + 1) && c.degeneracy(j) == c.degeneracy(j + 1);
        }
        if (jointly_degenerate) continue;
        std::vector<EZPair> faces;
        if (d > 0) {
          for (int i = 0; i <= d; ++i) faces.push_back(pair(x.face(a, i), y.face(c, i)));
        }
        const int idx = b.add("(" + x.key(a) + "," + y.key(c) + ")", d, std::move(faces));
        index_.emplace(std::make_pair(a, c), idx);
        first.push_back(a);
        second.push_back(c);
      }
    }
  }
  complex_ = std::move(b).build_shared();
  first_.emplace(complex_, left_, std::move(first));
  second_.emplace(complex_, right_, std::move(second));
}

EZPair Pullback::pair(const EZPair& a, const EZPair& b) const {
  if (a.dim() != b.dim()) throw std::invalid_argument("pair of simplices of different dimension");
  const int d = a.dim();
  std::vector<int> merged;
  for (int j = 0; j < d; ++j) {
    if (a.degeneracy(j) == a.degeneracy(j + 1) && b.degeneracy(j) == b.degeneracy(j + 1)) merged.push_back(j);
  }
  MonotoneOperator u = collapse(d, merged);
  const MonotoneOperator section = first_section(u);
  auto it = index_.find({left_->apply(a, section), right_->apply(b, section)});
  if (it == index_.end()) throw std::invalid_argument("pair is not a simplex of the pullback");
  return {std::move(u), it->second};
}

SimplicialMap terminal_map(ComplexPtr x, ComplexPtr point) {
  if (point->size() != 1 || point->dim_of(0) != 0) throw std::invalid_argument("target is not a point");
  std::vector<EZPair> a;
  for (const NondegSimplex& s : x->nondeg_simplices()) {
    a.push_back({MonotoneOperator::constant(s.dim, 0, 0), 0});
  }
  return {std::move(x), std::move(point), std::move(a)};
}

Pullback product(ComplexPtr x, ComplexPtr y) {
  if (x->dim_bound() != y->dim_bound()) throw std::invalid_argument("product needs a common bound");
  ComplexPtr point = standard(0, x->dim_bound())->complex();
  return {terminal_map(std::move(x), point), terminal_map(std::move(y), point)};
}

}  // namespace sset
