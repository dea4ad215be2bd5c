#include "sset/subcomplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace sset {

Subcomplex::Subcomplex(ComplexPtr ambient, std::vector<int> members)
    : ambient_(std::move(ambient)), members_(std::move(members)), mask_(ambient_->size(), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int m : members_) {
    if (m < 0 || static_cast<std::size_t>(m) >= ambient_->size()) {
      throw std::invalid_argument("subcomplex member out of range");
    }
    mask_[static_cast<std::size_t>(m)] = true;
  }
  for (int m : members_) {
    for (const EZPair& f : ambient_->nondeg(m).faces) {
      if (!contains(f.core)) {
        throw std::invalid_argument("subcomplex is not closed under faces: '" + ambient_->id(m) +
                                    "' has face '" + ambient_->id(f.core) + "' outside it");
      }
    }
  }
}

Subcomplex Subcomplex::generated_by(ComplexPtr ambient, const std::vector<int>& generators) {
  std::vector<bool> in(ambient->size(), false);
  std::vector<int> stack(generators.begin(), generators.end());
  std::vector<int> members;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (in[static_cast<std::size_t>(x)]) continue;
    in[static_cast<std::size_t>(x)] = true;
    members.push_back(x);
    for (const EZPair& f : ambient->nondeg(x).faces) stack.push_back(f.core);
  }
  return {std::move(ambient), std::move(members)};
}

Subcomplex Subcomplex::full(ComplexPtr ambient) {
  std::vector<int> all(ambient->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return {std::move(ambient), std::move(all)};
}

Subcomplex Subcomplex::empty(ComplexPtr ambient) { return {std::move(ambient), {}}; }

Subcomplex::Materialized Subcomplex::materialize() const {
  std::vector<int> local(ambient_->size(), -1);
  FiniteSimplicialSet::Builder b(ambient_->dim_bound());
  // members_ is sorted, and faces always precede their cofaces in the ambient.
  for (int m : members_) {
    const NondegSimplex& s = ambient_->nondeg(m);
    std::vector<EZPair> faces;
    faces.reserve(s.faces.size());
    for (const EZPair& f : s.faces) faces.push_back({f.degeneracy, local[static_cast<std::size_t>(f.core)]});
    local[static_cast<std::size_t>(m)] = b.add(s.id, s.dim, std::move(faces));
  }
  ComplexPtr sub = std::move(b).build_shared();
  std::vector<EZPair> inc;
  inc.reserve(members_.size());
  for (int m : members_) inc.push_back(ambient_->simplex(m));
  return {sub, SimplicialMap(sub, ambient_, std::move(inc))};
}

Subcomplex Subcomplex::unite(const Subcomplex& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subcomplexes of different ambients");
  std::vector<int> all = members_;
  all.insert(all.end(), other.members_.begin(), other.members_.end());
  return {ambient_, std::move(all)};
}

}  // namespace sset
