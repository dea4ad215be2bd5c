#include "sset/simplicial_set.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace sset {

std::size_t EZPairHash::operator()(const EZPair& p) const noexcept {
  std::size_t h = std::hash<int>{}(p.core) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::size_t>(p.degeneracy.target_dim()) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
  for (int v : p.degeneracy.values()) {
    h ^= static_cast<std::size_t>(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

struct FiniteSimplicialSet::TableCache {
  std::mutex mutex;
  std::vector<std::unique_ptr<SimplexTable>> tables;
};

int FiniteSimplicialSet::Builder::add(std::string id, int dim, std::vector<EZPair> faces) {
  if (dim < 0 || dim > dim_bound_) {
    throw std::invalid_argument("simplex '" + id + "' has dimension outside [0, bound]");
  }
  if (ids_.contains(id)) throw std::invalid_argument("duplicate simplex id '" + id + "'");
  const std::size_t expected = dim == 0 ? 0 : static_cast<std::size_t>(dim) + 1;
  if (faces.size() != expected) {
    throw std::invalid_argument("simplex '" + id + "' needs " + std::to_string(expected) + " faces");
  }
  for (const EZPair& f : faces) {
    if (f.core < 0 || static_cast<std::size_t>(f.core) >= simplices_.size()) {
      throw std::invalid_argument("face of '" + id + "' references an unknown simplex");
    }
    const NondegSimplex& core = simplices_[static_cast<std::size_t>(f.core)];
    if (f.dim() != dim - 1 || !f.degeneracy.is_surjective() || f.degeneracy.target_dim() != core.dim) {
      throw std::invalid_argument("face of '" + id + "' is not a valid (dim-1)-simplex");
    }
  }
  const int index = static_cast<int>(simplices_.size());
  ids_.emplace(id, index);
  simplices_.push_back({std::move(id), dim, std::move(faces)});
  return index;
}

std::optional<int> FiniteSimplicialSet::Builder::find(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

FiniteSimplicialSet FiniteSimplicialSet::Builder::build() && {
  FiniteSimplicialSet x(dim_bound_, std::move(simplices_), std::move(ids_));
  x.validate();
  return x;
}

ComplexPtr FiniteSimplicialSet::Builder::build_shared() && {
  return std::make_shared<const FiniteSimplicialSet>(std::move(*this).build());
}

FiniteSimplicialSet::FiniteSimplicialSet(int dim_bound, std::vector<NondegSimplex> simplices,
                                         std::unordered_map<std::string, int> ids)
    : dim_bound_(dim_bound),
      simplices_(std::move(simplices)),
      ids_(std::move(ids)),
      by_dim_(static_cast<std::size_t>(dim_bound) + 1),
      cache_(std::make_unique<TableCache>()) {
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    by_dim_[static_cast<std::size_t>(simplices_[i].dim)].push_back(static_cast<int>(i));
  }
}

FiniteSimplicialSet::FiniteSimplicialSet(FiniteSimplicialSet&&) noexcept = default;
FiniteSimplicialSet& FiniteSimplicialSet::operator=(FiniteSimplicialSet&&) noexcept = default;
FiniteSimplicialSet::~FiniteSimplicialSet() = default;

std::span<const int> FiniteSimplicialSet::nondeg_of_dim(int d) const {
  if (d < 0 || d > dim_bound_) return {};
  return by_dim_[static_cast<std::size_t>(d)];
}

int FiniteSimplicialSet::top_dim() const {
  for (int d = dim_bound_; d >= 0; --d) {
    if (!by_dim_[static_cast<std::size_t>(d)].empty()) return d;
  }
  return -1;
}

std::optional<int> FiniteSimplicialSet::find(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int FiniteSimplicialSet::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw std::out_of_range("unknown simplex id '" + std::string(id) + "'");
}

EZPair FiniteSimplicialSet::apply(const EZPair& x, const MonotoneOperator& op) const {
  if (op.target_dim() != x.dim()) {
    throw std::invalid_argument("operator " + op.to_string() + " does not act on a " +
                                std::to_string(x.dim()) + "-simplex");
  }
  EpiMono em = ez_factorize(compose(x.degeneracy, op));
  if (em.injection.is_identity()) return {std::move(em.surjection), x.core};

  // Peel off the smallest missing vertex as one face and recurse.
  const unsigned image = em.injection.image_mask();
  int missing = 0;
  while (image >> missing & 1U) ++missing;
  const EZPair& face = simplices_[static_cast<std::size_t>(x.core)].faces[static_cast<std::size_t>(missing)];
  std::vector<int> rest;
  rest.reserve(em.injection.values().size());
  for (int v : em.injection.values()) rest.push_back(v < missing ? v : v - 1);
  MonotoneOperator inner(em.injection.target_dim() - 1, std::move(rest));
  return apply(face, compose(inner, em.surjection));
}

EZPair FiniteSimplicialSet::face(const EZPair& x, int i) const {
  if (x.dim() < 1 || i < 0 || i > x.dim()) throw std::invalid_argument("face index out of range");
  if (x.is_nondegenerate()) return nondeg(x.core).faces[static_cast<std::size_t>(i)];
  return apply(x, MonotoneOperator::coface(x.dim(), i));
}

EZPair FiniteSimplicialSet::degeneracy(const EZPair& x, int j) const {
  return apply(x, MonotoneOperator::codegeneracy(x.dim(), j));
}

std::vector<int> FiniteSimplicialSet::vertices(const EZPair& x) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(x.dim()) + 1);
  for (int p = 0; p <= x.dim(); ++p) {
    out.push_back(apply(x, MonotoneOperator::constant(0, x.dim(), p)).core);
  }
  return out;
}

std::string FiniteSimplicialSet::key(const EZPair& x) const {
  if (x.is_nondegenerate()) return id(x.core);
  return id(x.core) + "*" + x.degeneracy.to_string();
}

bool FiniteSimplicialSet::is_valid(const EZPair& x) const {
  return x.core >= 0 && static_cast<std::size_t>(x.core) < simplices_.size() &&
         x.degeneracy.is_surjective() && x.degeneracy.target_dim() == dim_of(x.core);
}

const SimplexTable& FiniteSimplicialSet::table(int d) const {
  if (d < 0 || d > dim_bound_) {
    throw std::out_of_range("dimension " + std::to_string(d) + " exceeds the bound " +
                            std::to_string(dim_bound_));
  }
  std::lock_guard lock(cache_->mutex);
  auto& tables = cache_->tables;
  while (static_cast<int>(tables.size()) <= d) {
    const int dim = static_cast<int>(tables.size());
    auto t = std::make_unique<SimplexTable>();
    t->dim = dim;
    for (int e = 0; e <= dim; ++e) {
      const auto surj = surjections(dim, e);
      for (int core : by_dim_[static_cast<std::size_t>(e)]) {
        for (const auto& s : surj) t->simplices.push_back({s, core});
      }
    }
    t->index.reserve(t->simplices.size());
    for (std::size_t i = 0; i < t->simplices.size(); ++i) {
      t->index.emplace(t->simplices[i], static_cast<std::uint32_t>(i));
    }
    if (dim > 0) {
      const SimplexTable& lower = *tables.back();
      t->faces.reserve(t->simplices.size() * static_cast<std::size_t>(dim + 1));
      for (const EZPair& x : t->simplices) {
        for (int i = 0; i <= dim; ++i) t->faces.push_back(lower.index.at(face(x, i)));
      }
    }
    tables.push_back(std::move(t));
  }
  return *tables[static_cast<std::size_t>(d)];
}

std::uint32_t FiniteSimplicialSet::table_id(const EZPair& x) const {
  const SimplexTable& t = table(x.dim());
  auto it = t.index.find(x);
  if (it == t.index.end()) throw std::invalid_argument("simplex is not part of this complex");
  return it->second;
}

void FiniteSimplicialSet::validate() const {
  for (const NondegSimplex& s : simplices_) {
    if (s.dim < 2) continue;
    const EZPair x = EZPair::nondegenerate(ids_.at(s.id), s.dim);
    for (int j = 1; j <= s.dim; ++j) {
      for (int i = 0; i < j; ++i) {
        if (face(face(x, j), i) != face(face(x, i), j - 1)) {
          throw std::invalid_argument("simplicial identity d" + std::to_string(i) + " d" +
                                      std::to_string(j) + " fails on '" + s.id + "'");
        }
      }
    }
  }
}

}  // namespace sset
