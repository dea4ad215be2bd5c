#include "sset/pstructure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sset {

std::vector<int> facet_cores(const FiniteSimplicialSet& b, int x) {
  std::vector<int> out;
  for (const EZPair& f : b.nondeg(x).faces) {
    if (std::find(out.begin(), out.end(), f.core) == out.end()) out.push_back(f.core);
  }
  return out;
}

std::vector<int> face_positions(const FiniteSimplicialSet& b, int parent, int child) {
  std::vector<int> out;
  const auto& faces = b.nondeg(parent).faces;
  const EZPair target = EZPair::nondegenerate(child, b.dim_of(child));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i] == target) out.push_back(static_cast<int>(i));
  }
  return out;
}

AncestralGraph::AncestralGraph(const PStructure& p) {
  const FiniteSimplicialSet& b = *p.ambient;
  const auto n = b.size();
  below_.resize(n);
  role_.assign(n, Role::unassigned);
  partner_.assign(n, -1);
  auto valid = [n](int v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
  for (int v : p.base) {
    if (valid(v)) role_[static_cast<std::size_t>(v)] = Role::base;
  }
  for (int v : p.deferred) {
    if (valid(v)) role_[static_cast<std::size_t>(v)] = Role::excluded;
  }
  for (const PairRecord& r : p.pairs) {
    if (!valid(r.child) || !valid(r.parent)) continue;
    role_[static_cast<std::size_t>(r.child)] = Role::child;
    role_[static_cast<std::size_t>(r.parent)] = Role::parent;
    partner_[static_cast<std::size_t>(r.child)] = r.parent;
    partner_[static_cast<std::size_t>(r.parent)] = r.child;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (role_[v] == Role::base) continue;
    const int vi = static_cast<int>(v);
    if (b.dim_of(vi) > 0) below_[v] = facet_cores(b, vi);
    if (role_[v] == Role::child) below_[v].push_back(partner_[v]);
  }

  // Tarjan, iteratively.
  scc_.assign(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> order(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> work;
  int counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    work.emplace_back(static_cast<int>(root), 0);
    while (!work.empty()) {
      auto& [v, next] = work.back();
      const auto vs = static_cast<std::size_t>(v);
      if (next == 0 && order[vs] < 0) {
        order[vs] = low[vs] = counter++;
        stack.push_back(v);
        on_stack[vs] = true;
      }
      if (next < below_[vs].size()) {
        const int w = below_[vs][next++];
        const auto ws = static_cast<std::size_t>(w);
        if (order[ws] < 0) {
          work.emplace_back(w, 0);
        } else if (on_stack[ws]) {
          low[vs] = std::min(low[vs], order[ws]);
        }
        continue;
      }
      if (low[vs] == order[vs]) {
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          scc_[static_cast<std::size_t>(w)] = scc_count_;
        } while (w != v);
        ++scc_count_;
      }
      const int finished = v;
      work.pop_back();
      if (!work.empty()) {
        const auto ps = static_cast<std::size_t>(work.back().first);
        low[ps] = std::min(low[ps], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
}

std::vector<int> AncestralGraph::predecessors(int x) const {
  if (in_base(x)) return {};
  std::vector<bool> seen(below_.size(), false);
  std::vector<int> todo{x};
  seen[static_cast<std::size_t>(x)] = true;
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    for (int w : below(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        todo.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    const int vi = static_cast<int>(v);
    if (seen[v] && vi != x && vi != partner(x)) out.push_back(vi);
  }
  return out;
}

std::vector<int> AncestralGraph::predecessors_by_saturation(int x) const {
  if (in_base(x)) return {};
  std::set<int> all;
  std::set<int> current{x};
  while (!current.empty()) {
    std::set<int> next;
    for (int z : current) {
      if (in_base(z)) continue;
      for (int w : below(z)) {
        if (w == partner(z) && is_child(z)) {
          next.insert(w);
          for (int f : below(w)) next.insert(f);
        } else {
          next.insert(w);
        }
      }
    }
    std::set<int> fresh;
    for (int w : next) {
      if (all.insert(w).second) fresh.insert(w);
    }
    current = std::move(fresh);
  }
  all.erase(x);
  all.erase(partner(x));
  return {all.begin(), all.end()};
}

Report verify_pstructure(const PStructure& p) {
  Report rep;
  const FiniteSimplicialSet& b = *p.ambient;
  const auto n = b.size();
  auto add = [&rep](std::string kind, std::string subject, std::string detail) {
    rep.violations.push_back({std::move(kind), std::move(subject), std::move(detail)});
  };
  auto valid = [n](int v) { return v >= 0 && static_cast<std::size_t>(v) < n; };

  std::vector<int> uses(n, 0);
  std::vector<bool> is_base(n, false);
  for (int v : p.base) {
    if (!valid(v)) {
      add("out_of_range", std::to_string(v), "base index outside the complex");
      continue;
    }
    is_base[static_cast<std::size_t>(v)] = true;
    ++uses[static_cast<std::size_t>(v)];
  }
  for (int v : p.deferred) {
    if (!valid(v)) {
      add("out_of_range", std::to_string(v), "deferred index outside the complex");
      continue;
    }
    ++uses[static_cast<std::size_t>(v)];
    if (b.dim_of(v) != b.dim_bound()) add("deferred_below_bound", b.id(v), "deferred simplex is not top-dimensional");
  }
  bool structural = true;
  for (const PairRecord& r : p.pairs) {
    if (!valid(r.child) || !valid(r.parent)) {
      add("out_of_range", std::to_string(r.child) + "/" + std::to_string(r.parent), "pair index outside the complex");
      structural = false;
      continue;
    }
    ++uses[static_cast<std::size_t>(r.child)];
    ++uses[static_cast<std::size_t>(r.parent)];
    const std::string& cid = b.id(r.child);
    if (b.dim_of(r.parent) != b.dim_of(r.child) + 1) {
      add("dimension", cid, "parent " + b.id(r.parent) + " has dimension " + std::to_string(b.dim_of(r.parent)));
      continue;
    }
    const auto pos = face_positions(b, r.parent, r.child);
    if (std::find(pos.begin(), pos.end(), r.face_index) == pos.end()) {
      add("face_index", cid, "not d_" + std::to_string(r.face_index) + " of " + b.id(r.parent));
    }
    if (pos.size() > 1) add("face_not_unique", cid, "face of " + b.id(r.parent) + " in " + std::to_string(pos.size()) + " ways");
  }
  for (std::size_t v = 0; v < n; ++v) {
    const int vi = static_cast<int>(v);
    if (uses[v] == 0) add("uncovered", b.id(vi), "neither base, child, parent nor deferred");
    if (uses[v] > 1) {
      add("overlap", b.id(vi), "assigned " + std::to_string(uses[v]) + " roles");
      structural = false;
    }
    if (is_base[v] && b.dim_of(vi) > 0) {
      for (int f : facet_cores(b, vi)) {
        if (!is_base[static_cast<std::size_t>(f)]) add("base_not_closed", b.id(vi), "face " + b.id(f) + " missing from base");
      }
    }
  }
  if (!structural) return rep;

  const AncestralGraph g(p);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(g.component_count()));
  for (int v = 0; v < g.size(); ++v) members[static_cast<std::size_t>(g.components()[static_cast<std::size_t>(v)])].push_back(v);
  for (const auto& c : members) {
    if (c.size() <= 1) continue;
    if (c.size() == 2 && g.partner(c[0]) == c[1]) continue;
    std::string detail = "cycle through";
    for (std::size_t i = 0; i < c.size() && i < 8; ++i) detail += " " + b.id(c[i]);
    if (c.size() > 8) detail += " ...";
    add("not_well_founded", b.id(c[0]), detail);
  }
  return rep;
}

std::vector<int> filtration_levels(const PStructure& p) {
  const AncestralGraph g(p);
  const auto& comp = g.components();
  std::vector<std::vector<int>> members(static_cast<std::size_t>(g.component_count()));
  for (int v = 0; v < g.size(); ++v) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<int> reach(members.size(), -1);
  std::vector<int> f(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t c = 0; c < members.size(); ++c) {
    int best = -1;
    for (int v : members[c]) {
      for (int w : g.below(v)) {
        const auto d = static_cast<std::size_t>(comp[static_cast<std::size_t>(w)]);
        if (d != c) best = std::max(best, reach[d]);
      }
    }
    int here = best;
    for (int v : members[c]) {
      if (g.in_base(v)) {
        f[static_cast<std::size_t>(v)] = 0;
      } else if (g.is_child(v)) {
        f[static_cast<std::size_t>(v)] = std::max(1, best + 1);
      } else {
        continue;
      }
      here = std::max(here, f[static_cast<std::size_t>(v)]);
    }
    reach[c] = here;
  }
  return f;
}

AnodynePresentation compile_presentation(const PStructure& p) {
  const Report rep = verify_pstructure(p);
  if (!rep.ok()) {
    const Violation& v = rep.violations.front();
    throw std::invalid_argument("P-structure does not verify: " + v.kind + " at " + v.subject + ": " + v.detail);
  }
  const auto f = filtration_levels(p);
  AnodynePresentation pres;
  for (const PairRecord& r : p.pairs) {
    const auto level = static_cast<std::size_t>(f[static_cast<std::size_t>(r.child)]);
    if (pres.stages.size() < level) pres.stages.resize(level);
    pres.stages[level - 1].push_back({r.parent, r.child, p.ambient->dim_of(r.parent), r.face_index});
  }
  for (auto& s : pres.stages) {
    std::sort(s.begin(), s.end(), [](const HornAttachment& a, const HornAttachment& b) { return a.parent < b.parent; });
  }
  return pres;
}

std::optional<std::vector<HornAttachment>> infer_horns(const FiniteSimplicialSet& b, const std::vector<bool>& present,
                                                       const std::vector<int>& added) {
  std::set<int> fresh(added.begin(), added.end());
  std::set<int> covered;
  for (int v : fresh) {
    if (b.dim_of(v) == 0) continue;
    for (int f : facet_cores(b, v)) {
      if (fresh.count(f)) covered.insert(f);
    }
  }
  std::vector<HornAttachment> out;
  std::set<int> children;
  for (int v : fresh) {
    if (covered.count(v)) continue;
    std::vector<int> missing;
    for (int f : b.dim_of(v) > 0 ? facet_cores(b, v) : std::vector<int>{}) {
      if (!present[static_cast<std::size_t>(f)]) missing.push_back(f);
    }
    if (missing.size() != 1 || !fresh.count(missing[0])) return std::nullopt;
    const auto pos = face_positions(b, v, missing[0]);
    if (pos.size() != 1 || !children.insert(missing[0]).second) return std::nullopt;
    out.push_back({v, missing[0], b.dim_of(v), pos[0]});
  }
  if (children.size() + out.size() != fresh.size()) return std::nullopt;
  std::sort(out.begin(), out.end(), [](const HornAttachment& x, const HornAttachment& y) { return x.parent < y.parent; });
  return out;
}

Report verify_presentation(const FiniteSimplicialSet& b, const std::vector<int>& base, const AnodynePresentation& pres,
                           const std::vector<int>& target) {
  Report rep;
  const auto n = b.size();
  auto add = [&rep](std::string kind, std::string subject, std::string detail) {
    rep.violations.push_back({std::move(kind), std::move(subject), std::move(detail)});
  };
  auto valid = [n](int v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
  std::vector<bool> present(n, false);
  for (int v : base) {
    if (valid(v)) present[static_cast<std::size_t>(v)] = true;
    else add("out_of_range", std::to_string(v), "base index outside the complex");
  }
  for (int v : base) {
    if (!valid(v) || b.dim_of(v) == 0) continue;
    for (int f : facet_cores(b, v)) {
      if (!present[static_cast<std::size_t>(f)]) add("base_not_closed", b.id(v), "face " + b.id(f) + " missing from base");
    }
  }
  for (std::size_t s = 0; s < pres.stages.size(); ++s) {
    const std::string stage = "stage " + std::to_string(s);
    const auto& records = pres.stages[s];
    std::vector<int> added;
    std::set<int> seen;
    bool ranged = true;
    for (const HornAttachment& h : records) {
      if (!valid(h.parent) || !valid(h.child)) {
        add("out_of_range", stage, "attachment index outside the complex");
        ranged = false;
        continue;
      }
      for (int v : {h.parent, h.child}) {
        if (present[static_cast<std::size_t>(v)]) add("not_new", b.id(v), stage + ": already present");
        if (!seen.insert(v).second) add("stage_overlap", b.id(v), stage + ": added twice");
        added.push_back(v);
      }
      const int pd = b.dim_of(h.parent);
      if (h.horn_dim != pd || b.dim_of(h.child) + 1 != pd || h.horn_index < 0 || h.horn_index > pd ||
          b.nondeg(h.parent).faces[static_cast<std::size_t>(h.horn_index)] != b.simplex(h.child)) {
        add("horn_mismatch", b.id(h.parent), stage + ": child is not d_" + std::to_string(h.horn_index) + " of a " +
                                                 std::to_string(h.horn_dim) + "-simplex");
        continue;
      }
      const auto& faces = b.nondeg(h.parent).faces;
      for (int i = 0; i <= pd; ++i) {
        if (i == h.horn_index) continue;
        const int c = faces[static_cast<std::size_t>(i)].core;
        if (!present[static_cast<std::size_t>(c)]) add("missing_face", b.id(h.parent), stage + ": face d_" + std::to_string(i) + " = " + b.id(c) + " not yet present");
      }
    }
    if (ranged) {
      auto inferred = infer_horns(b, present, added);
      auto stored = records;
      std::sort(stored.begin(), stored.end(), [](const HornAttachment& x, const HornAttachment& y) { return x.parent < y.parent; });
      if (!inferred || *inferred != stored) add("horn_inference", stage, "stored horns differ from those forced by the added simplices");
    }
    for (int v : added) present[static_cast<std::size_t>(v)] = true;
  }
  std::vector<bool> wanted(n, target.empty());
  for (int v : target) {
    if (valid(v)) wanted[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    const int vi = static_cast<int>(v);
    if (wanted[v] && !present[v]) add("incomplete", b.id(vi), "never added");
    if (!wanted[v] && present[v]) add("extra", b.id(vi), "added but not part of the target");
  }
  return rep;
}

std::vector<int> complete_fragment(const PStructure& p) {
  std::vector<bool> out(p.ambient->size(), true);
  for (int v : p.deferred) out[static_cast<std::size_t>(v)] = false;
  std::vector<int> r;
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (out[v]) r.push_back(static_cast<int>(v));
  }
  return r;
}

}  // namespace sset
