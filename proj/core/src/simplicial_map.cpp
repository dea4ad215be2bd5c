#include "sset/simplicial_map.hpp"

#include <set>
#include <stdexcept>

namespace sset {

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<EZPair> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!source_ || !target_) throw std::invalid_argument("simplicial map needs both complexes");
  if (assignment_.size() != source_->size()) {
    throw std::invalid_argument("assignment must cover every non-degenerate source simplex");
  }
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    const auto& img = assignment_[i];
    if (!target_->is_valid(img) || img.dim() != source_->dim_of(static_cast<int>(i))) {
      throw std::invalid_argument("image of '" + source_->id(static_cast<int>(i)) +
                                  "' is not a simplex of matching dimension");
    }
  }
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    const NondegSimplex& s = source_->nondeg(static_cast<int>(i));
    for (int f = 0; f < static_cast<int>(s.faces.size()); ++f) {
      if ((*this)(s.faces[static_cast<std::size_t>(f)]) != target_->face(assignment_[i], f)) {
        throw std::invalid_argument("map does not commute with d" + std::to_string(f) + " on '" +
                                    s.id + "'");
      }
    }
  }
}

SimplicialMap SimplicialMap::identity(ComplexPtr x) {
  std::vector<EZPair> a;
  a.reserve(x->size());
  for (std::size_t i = 0; i < x->size(); ++i) a.push_back(x->simplex(static_cast<int>(i)));
  return {x, x, std::move(a)};
}

EZPair SimplicialMap::operator()(const EZPair& x) const {
  return target_->apply(image_of(x.core), x.degeneracy);
}

bool SimplicialMap::is_injective_up_to(int dim) const {
  for (int d = 0; d <= std::min(dim, source_->dim_bound()); ++d) {
    std::set<EZPair> seen;
    for (const EZPair& x : source_->simplices(d)) {
      if (!seen.insert((*this)(x)).second) return false;
    }
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target_ptr() != g.source_ptr()) throw std::invalid_argument("maps are not composable");
  std::vector<EZPair> a;
  a.reserve(f.assignment().size());
  for (const EZPair& x : f.assignment()) a.push_back(g(x));
  return {f.source_ptr(), g.target_ptr(), std::move(a)};
}

}  // namespace sset
