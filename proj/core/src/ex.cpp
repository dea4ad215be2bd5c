#include "sset/ex.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace sset {

ExBudget ExBudget::from_environment() {
  ExBudget b;
  if (const char* env = std::getenv("SSET_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) b.max_simplices = static_cast<std::size_t>(v);
  }
  return b;
}

std::size_t VectorHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::size_t h = v.size();
  for (std::uint32_t x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

ExComplex::ExComplex(ComplexPtr x, int bound, ExBudget budget) : x_(std::move(x)), bound_(bound) {
  if (bound < 0) throw std::invalid_argument("Ex bound must be non-negative");
  if (x_->dim_bound() < bound) throw std::invalid_argument("Ex bound exceeds the bound of X");
  dims_.resize(static_cast<std::size_t>(bound) + 1);
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = budget.timeout_seconds > 0
                            ? start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                          std::chrono::duration<double>(budget.timeout_seconds))
                            : std::chrono::steady_clock::time_point::max();
  std::size_t total = 0;
  FiniteSimplicialSet::Builder b(bound);
  for (int n = 0; n <= bound; ++n) {
    enumerate(n, budget, total, deadline);
    Dim& dim = dims_[static_cast<std::size_t>(n)];
    dim.ez.resize(dim.simplices.size());
    for (std::uint32_t id = 0; id < dim.simplices.size(); ++id) {
      bool degenerate = false;
      for (int i = 0; i < n && !degenerate; ++i) {
        const std::uint32_t tau = face(n, id, i);
        if (precompose(n - 1, tau, JoinMap::of(MonotoneOperator::codegeneracy(n - 1, i))) == dim.simplices[id]) {
          const EZPair& e = dims_[static_cast<std::size_t>(n) - 1].ez[tau];
          dim.ez[id] = {compose(e.degeneracy, MonotoneOperator::codegeneracy(n - 1, i)), e.core};
          degenerate = true;
        }
      }
      if (degenerate) continue;
      std::vector<EZPair> faces;
      for (int i = 0; i <= n && n > 0; ++i) faces.push_back(dims_[static_cast<std::size_t>(n) - 1].ez[face(n, id, i)]);
      const int idx = b.add(simplex_id(n, id), n, std::move(faces));
      dim.ez[id] = EZPair::nondegenerate(idx, n);
      located_.emplace_back(n, id);
    }
    if (std::chrono::steady_clock::now() > deadline) throw ResourceError("Ex enumeration exceeded its time budget");
  }
  ex_ = std::move(b).build_shared();
  for (int n = 0; n <= bound; ++n) {
    Dim& dim = dims_[static_cast<std::size_t>(n)];
    const SimplexTable& t = ex_->table(n);
    if (t.size() != dim.simplices.size()) throw std::logic_error("Ex simplex count disagrees with its EZ table");
    dim.from_table.assign(t.size(), 0);
    for (std::uint32_t id = 0; id < dim.simplices.size(); ++id) dim.from_table[ex_->table_id(dim.ez[id])] = id;
  }
}

void ExComplex::enumerate(int n, const ExBudget& budget, std::size_t& total,
                          std::chrono::steady_clock::time_point deadline) {
  const SdPtr sd = sd_standard(n);
  const FiniteSimplicialSet& c = *sd->complex();
  const int chains = static_cast<int>(c.size());
  // Chains grouped by their top subset, in a linear extension, shorter first:
  // every face of a chain comes before it.
  std::vector<int> order(static_cast<std::size_t>(chains));
  for (int i = 0; i < chains; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<std::pair<int, int>> rank(static_cast<std::size_t>(chains));
  for (int i = 0; i < chains; ++i) rank[static_cast<std::size_t>(i)] = {sd->element_of(sd->chain(i).back()), c.dim_of(i)};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
  });

  std::vector<std::unordered_map<std::vector<std::uint32_t>, std::vector<std::uint32_t>, VectorHash>> by_faces(
      static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) {
    const SimplexTable& t = x_->table(d);
    for (std::uint32_t y = 0; y < t.size(); ++y) {
      std::vector<std::uint32_t> key(static_cast<std::size_t>(d) + 1);
      for (int i = 0; i <= d; ++i) key[static_cast<std::size_t>(i)] = t.face(y, i);
      by_faces[static_cast<std::size_t>(d)][std::move(key)].push_back(y);
    }
  }
  std::vector<std::uint32_t> vertices(x_->table(0).size());
  for (std::uint32_t v = 0; v < vertices.size(); ++v) vertices[v] = v;

  Dim& dim = dims_[static_cast<std::size_t>(n)];
  std::vector<std::uint32_t> vals(static_cast<std::size_t>(chains), 0);
  std::size_t steps = 0;
  std::vector<std::uint32_t> key;
  const std::vector<std::uint32_t> none;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if ((++steps & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline) {
      throw ResourceError("Ex enumeration exceeded its time budget");
    }
    if (pos == order.size()) {
      if (++total > budget.max_simplices) {
        throw ResourceError("Ex enumeration exceeded the budget of " + std::to_string(budget.max_simplices) + " simplices");
      }
      const auto id = static_cast<std::uint32_t>(dim.simplices.size());
      dim.simplices.push_back(vals);
      dim.index.emplace(vals, id);
      return;
    }
    const int ch = order[pos];
    const int d = c.dim_of(ch);
    const std::vector<std::uint32_t>* cands = &vertices;
    if (d > 0) {
      key.resize(static_cast<std::size_t>(d) + 1);
      const auto& faces = c.nondeg(ch).faces;
      for (int i = 0; i <= d; ++i) key[static_cast<std::size_t>(i)] = vals[static_cast<std::size_t>(faces[static_cast<std::size_t>(i)].core)];
      const auto& idx = by_faces[static_cast<std::size_t>(d)];
      auto it = idx.find(key);
      cands = it == idx.end() ? &none : &it->second;
    }
    for (std::uint32_t y : *cands) {
      vals[static_cast<std::size_t>(ch)] = y;
      rec(pos + 1);
    }
  };
  rec(0);
}

std::optional<std::uint32_t> ExComplex::find(int n, const std::vector<std::uint32_t>& values) const {
  if (n < 0 || n > bound_) return std::nullopt;
  const auto& idx = dims_[static_cast<std::size_t>(n)].index;
  auto it = idx.find(values);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

const ExComplex::Plan& ExComplex::plan(const JoinMap& g) const {
  std::lock_guard lock(plan_mu_);
  auto key = std::make_tuple(g.n_src(), g.n_tgt(), g.singleton_values());
  auto& slot = plans_[key];
  if (!slot) {
    slot = std::make_unique<Plan>();
    const SdPtr src = sd_standard(g.n_src());
    const SdPtr tgt = sd_standard(g.n_tgt());
    for (int ch = 0; ch < static_cast<int>(src->complex()->size()); ++ch) {
      const EZPair e = tgt->simplex_of(g(src->chain(ch)));
      slot->core.push_back(e.core);
      slot->surj.push_back(e.is_nondegenerate() ? std::nullopt : std::optional<MonotoneOperator>(e.degeneracy));
    }
  }
  return *slot;
}

std::vector<std::uint32_t> ExComplex::precompose(int n, std::uint32_t id, const JoinMap& g) const {
  if (g.n_tgt() != n) throw std::invalid_argument("join map target does not match the simplex dimension");
  const Plan& p = plan(g);
  const auto& vals = values(n, id);
  const SdPtr tgt = sd_standard(n);
  std::vector<std::uint32_t> out(p.core.size());
  for (std::size_t ch = 0; ch < p.core.size(); ++ch) {
    const int core = p.core[ch];
    const std::uint32_t v = vals[static_cast<std::size_t>(core)];
    if (!p.surj[ch]) {
      out[ch] = v;
      continue;
    }
    const int d = tgt->complex()->dim_of(core);
    out[ch] = x_->table_id(x_->apply(x_->table(d).simplices[v], *p.surj[ch]));
  }
  return out;
}

std::uint32_t ExComplex::precompose_id(int n, std::uint32_t id, const JoinMap& g) const {
  if (g.n_src() > bound_) throw std::out_of_range("precomposite lies above the Ex bound");
  auto r = find(g.n_src(), precompose(n, id, g));
  if (!r) throw std::logic_error("precomposite is missing from the enumeration");
  return *r;
}

std::uint32_t ExComplex::face(int n, std::uint32_t id, int i) const {
  return precompose_id(n, id, JoinMap::of(MonotoneOperator::coface(n, i)));
}

bool ExComplex::is_nondegenerate(int n, std::uint32_t id) const { return ez(n, id).is_nondegenerate(); }

std::uint32_t ExComplex::id_of(const EZPair& x) const {
  return dims_[static_cast<std::size_t>(x.dim())].from_table[ex_->table_id(x)];
}

int ExComplex::level(int n, std::uint32_t id) const {
  for (int k = 0; k < n; ++k) {
    if (precompose(n, id, j_join(n, k)) == values(n, id)) return k;
  }
  return n;
}

std::uint32_t ExComplex::unit_of(int n, std::uint32_t x_table_id) const {
  const SdPtr sd = sd_standard(n);
  const EZPair x = x_->table(n).simplices[x_table_id];
  std::vector<std::uint32_t> vals;
  for (int ch = 0; ch < static_cast<int>(sd->complex()->size()); ++ch) {
    std::vector<int> maxes;
    for (unsigned s : sd->chain(ch)) maxes.push_back(31 - __builtin_clz(s));
    vals.push_back(x_->table_id(x_->apply(x, MonotoneOperator(n, std::move(maxes)))));
  }
  auto r = find(n, vals);
  if (!r) throw std::logic_error("unit image is missing from the enumeration");
  return *r;
}

SimplicialMap ExComplex::unit() const {
  if (x_->top_dim() > bound_) throw std::out_of_range("X has non-degenerate simplices above the Ex bound");
  std::vector<EZPair> a;
  for (int v = 0; v < static_cast<int>(x_->size()); ++v) {
    const int d = x_->dim_of(v);
    a.push_back(ez(d, unit_of(d, x_->table_id(x_->simplex(v)))));
  }
  return {x_, ex_, std::move(a)};
}

std::string ExComplex::value_key(int dim, std::uint32_t x_table_id) const {
  return x_->key(x_->table(dim).simplices[x_table_id]);
}

std::string ExComplex::simplex_id(int n, std::uint32_t id) const {
  const SdPtr sd = sd_standard(n);
  std::string s = "ex(";
  bool first = true;
  for (int ch : sd->maximal()) {
    if (!first) s += ';';
    first = false;
    s += value_key(n, values(n, id)[static_cast<std::size_t>(ch)]);
  }
  return s + ")";
}

namespace {

std::optional<Decomposition> decomposition_via_face(const ExComplex& ex, int n, std::uint32_t id) {
  for (int h = 1; h <= n - 1; ++h) {
    const std::uint32_t tau = ex.face(n, id, h + 1);
    if (ex.level(n - 1, tau) != h) continue;
    if (ex.precompose(n - 1, tau, r_join(n - 1, h)) == ex.values(n, id)) return Decomposition{h, tau};
  }
  return std::nullopt;
}

}  // namespace

std::vector<Decomposition> all_decompositions(const ExComplex& ex, int n, std::uint32_t id) {
  std::vector<Decomposition> out;
  if (n < 1) return out;
  for (std::uint32_t tau = 0; tau < ex.count(n - 1); ++tau) {
    const int lv = ex.level(n - 1, tau);
    if (lv < 1) continue;
    if (ex.precompose(n - 1, tau, r_join(n - 1, lv)) == ex.values(n, id)) out.push_back({lv, tau});
  }
  return out;
}

ExClass classify(const ExComplex& ex, int n, std::uint32_t id) {
  if (!ex.is_nondegenerate(n, id)) throw std::invalid_argument("classify needs a non-degenerate simplex");
  ExClass c;
  c.level = ex.level(n, id);
  if (c.level == 0) throw std::invalid_argument("classify needs a simplex outside the unit image");
  if (auto d = decomposition_via_face(ex, n, id)) {
    c.type = ExType::type_i;
    c.decomposition = d;
    return c;
  }
  c.type = ExType::type_ii;
  if (n + 1 <= ex.bound()) c.parent = ex.precompose_id(n, id, r_join(n, c.level));
  return c;
}

ExCertificate ex_pstructure(const ExComplex& ex) {
  ExCertificate cert;
  const FiniteSimplicialSet& b = *ex.complex();
  cert.structure.ambient = ex.complex();
  cert.classes.resize(b.size());
  for (int v = 0; v < static_cast<int>(b.size()); ++v) {
    const auto [n, id] = ex.locate(v);
    if (ex.level(n, id) == 0) {
      cert.structure.base.push_back(v);
      continue;
    }
    ExClass c = classify(ex, n, id);
    if (c.type == ExType::type_ii) {
      if (c.parent) {
        const EZPair p = ex.ez(n + 1, *c.parent);
        const auto pos = face_positions(b, p.core, v);
        cert.structure.pairs.push_back({v, p.core, pos.empty() ? -1 : pos.front()});
      } else {
        cert.structure.deferred.push_back(v);
      }
    }
    cert.classes[static_cast<std::size_t>(v)] = std::move(c);
  }
  return cert;
}

std::vector<Violation> check_rank_descent(const ExComplex& ex, const ExCertificate& cert) {
  std::vector<Violation> out;
  const AncestralGraph g(cert.structure);
  const FiniteSimplicialSet& b = *ex.complex();
  auto rank = [&](int v) {
    int node = v;
    if (g.is_parent(v)) node = g.partner(v);
    const auto [n, id] = ex.locate(node);
    return std::make_pair(n, ex.level(n, id));
  };
  for (int v = 0; v < g.size(); ++v) {
    if (g.in_base(v) || g.excluded(v)) continue;
    for (int w : g.below(v)) {
      if (w == g.partner(v) || g.excluded(w)) continue;
      if (!(rank(w) < rank(v))) {
        out.push_back({"rank", b.id(v), "edge to " + b.id(w) + " does not decrease rank"});
      }
    }
  }
  return out;
}

ExTower ex_iterate(ComplexPtr x, int m, int bound, ExBudget budget) {
  ExTower t;
  t.stages.push_back(x);
  t.units.push_back(SimplicialMap::identity(x));
  for (int i = 1; i <= m; ++i) {
    auto e = std::make_shared<const ExComplex>(t.stages.back(), bound, budget);
    t.units.push_back(compose(e->unit(), t.units.back()));
    t.stages.push_back(e->complex());
    t.ex.push_back(std::move(e));
  }
  return t;
}

SimplicialMap ex_map(const SimplicialMap& f, const ExComplex& ex_x, const ExComplex& ex_y) {
  if (f.source_ptr() != ex_x.base_ptr() || f.target_ptr() != ex_y.base_ptr()) {
    throw std::invalid_argument("map does not match the Ex complexes");
  }
  if (ex_x.bound() > ex_y.bound()) throw std::invalid_argument("Ex bounds are incompatible");
  const FiniteSimplicialSet& x = f.source();
  const FiniteSimplicialSet& y = f.target();
  std::vector<EZPair> a;
  for (int v = 0; v < static_cast<int>(ex_x.complex()->size()); ++v) {
    const auto [n, id] = ex_x.locate(v);
    const SdPtr sd = sd_standard(n);
    std::vector<std::uint32_t> vals;
    const auto& src = ex_x.values(n, id);
    for (int ch = 0; ch < static_cast<int>(src.size()); ++ch) {
      const int d = sd->complex()->dim_of(ch);
      vals.push_back(y.table_id(f(x.table(d).simplices[src[static_cast<std::size_t>(ch)]])));
    }
    auto r = ex_y.find(n, vals);
    if (!r) throw std::logic_error("image of an Ex simplex is missing from the target enumeration");
    a.push_back(ex_y.ez(n, *r));
  }
  return {ex_x.complex(), ex_y.complex(), std::move(a)};
}

PStructure restrict_structure(const PStructure& p, const Subcomplex& sub, const ComplexPtr& materialized) {
  PStructure r;
  r.ambient = materialized;
  auto to = [&](int v) { return materialized->index_of(p.ambient->id(v)); };
  for (int v : p.base) {
    if (sub.contains(v)) r.base.push_back(to(v));
  }
  for (const PairRecord& q : p.pairs) {
    if (sub.contains(q.child) && sub.contains(q.parent)) r.pairs.push_back({to(q.child), to(q.parent), q.face_index});
  }
  for (int v : p.deferred) {
    if (sub.contains(v)) r.deferred.push_back(to(v));
  }
  std::sort(r.base.begin(), r.base.end());
  return r;
}

Subextension minimal_subextension(const ExComplex& ex, const ExCertificate& cert, const EZPair& tau) {
  const FiniteSimplicialSet& b = *ex.complex();
  if (!b.is_valid(tau)) throw std::out_of_range("simplex is not in Ex X within the bound");
  const int upsilon = tau.core;
  const AncestralGraph g(cert.structure);
  std::set<int> keep(cert.structure.base.begin(), cert.structure.base.end());
  if (!g.in_base(upsilon)) {
    if (g.excluded(upsilon)) throw std::out_of_range("the parent of " + b.id(upsilon) + " lies above the bound");
    keep.insert(upsilon);
    if (g.partner(upsilon) >= 0) keep.insert(g.partner(upsilon));
    for (int w : g.predecessors(upsilon)) {
      if (g.excluded(w)) throw std::out_of_range("the parent of " + b.id(w) + " lies above the bound");
      keep.insert(w);
    }
  }
  Subcomplex sub(ex.complex(), {keep.begin(), keep.end()});
  auto mat = sub.materialize();
  PStructure r = restrict_structure(cert.structure, sub, mat.complex);
  return {std::move(sub), std::move(r), mat.complex, std::move(mat.inclusion)};
}

J1Report j1_membership_check(const SimplicialMap& g, const ExComplex& ex_y) {
  if (g.target_ptr() != ex_y.complex()) throw std::invalid_argument("map does not land in the given Ex complex");
  J1Report rep;
  const FiniteSimplicialSet& s = g.source();
  for (int v = 0; v < static_cast<int>(s.size()); ++v) {
    const EZPair img = g.image_of(v);
    const int lv = ex_y.level(img.dim(), ex_y.id_of(img));
    ++rep.simplices;
    if (lv == 0) ++rep.level0;
    if (lv <= 1) ++rep.level_at_most1;
    else rep.violations.push_back(s.id(v) + " maps to level " + std::to_string(lv));
  }
  return rep;
}

}  // namespace sset
