#include "sset/groupoid.hpp"

#include <stdexcept>

namespace sset {

FiniteGroupoid::FiniteGroupoid(int objects, std::vector<Morphism> morphisms, std::vector<int> compose)
    : objects_(objects), morphisms_(std::move(morphisms)), compose_(std::move(compose)),
      identities_(static_cast<std::size_t>(objects), -1) {
  const int n = morphism_count();
  if (compose_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("composition table has the wrong size");
  }
  for (int f = 0; f < n; ++f) {
    const Morphism& m = morphism(f);
    if (m.source < 0 || m.source >= objects_ || m.target < 0 || m.target >= objects_) {
      throw std::invalid_argument("morphism endpoint out of range");
    }
  }
  for (int f = 0; f < n; ++f) {
    const Morphism& m = morphism(f);
    if (m.source != m.target) continue;
    bool unit = true;
    for (int g = 0; g < n && unit; ++g) {
      if (morphism(g).source == m.source) unit = compose_[static_cast<std::size_t>(g * n + f)] == g;
      if (unit && morphism(g).target == m.source) unit = compose_[static_cast<std::size_t>(f * n + g)] == g;
    }
    if (unit && identities_[static_cast<std::size_t>(m.source)] < 0) identities_[static_cast<std::size_t>(m.source)] = f;
  }
  for (int o = 0; o < objects_; ++o) {
    if (identities_[static_cast<std::size_t>(o)] < 0) throw std::invalid_argument("object without identity");
  }
  for (int f = 0; f < n; ++f) {
    bool invertible = false;
    for (int g = 0; g < n && !invertible; ++g) {
      invertible = morphism(g).source == morphism(f).target && morphism(g).target == morphism(f).source &&
                   this->compose(g, f) == identity(morphism(f).source);
    }
    if (!invertible) throw std::invalid_argument("morphism '" + morphism(f).name + "' has no inverse");
  }
}

FiniteGroupoid FiniteGroupoid::cyclic(int order) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  std::vector<Morphism> ms;
  for (int i = 0; i < order; ++i) {
    ms.push_back({0, 0, i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i))});
  }
  std::vector<int> c(static_cast<std::size_t>(order * order));
  for (int g = 0; g < order; ++g) {
    for (int f = 0; f < order; ++f) c[static_cast<std::size_t>(g * order + f)] = (g + f) % order;
  }
  return {1, std::move(ms), std::move(c)};
}

FiniteGroupoid FiniteGroupoid::codiscrete(int objects) {
  if (objects < 1) throw std::invalid_argument("groupoid needs an object");
  std::vector<Morphism> ms;
  for (int a = 0; a < objects; ++a) {
    for (int b = 0; b < objects; ++b) ms.push_back({a, b, std::to_string(a) + ">" + std::to_string(b)});
  }
  const int n = objects * objects;
  std::vector<int> c(static_cast<std::size_t>(n * n), -1);
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      if (ms[static_cast<std::size_t>(f)].target == ms[static_cast<std::size_t>(g)].source) {
        c[static_cast<std::size_t>(g * n + f)] =
            ms[static_cast<std::size_t>(f)].source * objects + ms[static_cast<std::size_t>(g)].target;
      }
    }
  }
  return {objects, std::move(ms), std::move(c)};
}

bool FiniteGroupoid::is_identity(int f) const { return identity(morphism(f).source) == f; }

int FiniteGroupoid::compose(int g, int f) const {
  const int r = compose_[static_cast<std::size_t>(g * morphism_count() + f)];
  if (r < 0) throw std::invalid_argument("morphisms are not composable");
  return r;
}

int FiniteGroupoid::inverse(int f) const {
  for (int g = 0; g < morphism_count(); ++g) {
    if (morphism(g).source == morphism(f).target && morphism(g).target == morphism(f).source &&
        compose(g, f) == identity(morphism(f).source)) {
      return g;
    }
  }
  throw std::logic_error("groupoid morphism without inverse");
}

std::optional<int> FiniteGroupoid::first_between(int a, int b) const {
  for (int f = 0; f < morphism_count(); ++f) {
    if (morphism(f).source == a && morphism(f).target == b) return f;
  }
  return std::nullopt;
}

std::string GroupoidNerve::key(const NerveString& s) const {
  if (s.morphisms.empty()) return "o" + std::to_string(s.start);
  std::string k = "[";
  for (std::size_t i = 0; i < s.morphisms.size(); ++i) {
    if (i) k += ',';
    k += groupoid_.morphism(s.morphisms[i]).name;
  }
  return k + "]";
}

int GroupoidNerve::object_at(const NerveString& s, int p) const {
  return p == 0 ? s.start : groupoid_.morphism(s.morphisms[static_cast<std::size_t>(p) - 1]).target;
}

GroupoidNerve::GroupoidNerve(FiniteGroupoid groupoid, int bound) : groupoid_(std::move(groupoid)) {
  FiniteSimplicialSet::Builder b(bound);
  std::vector<NerveString> layer;
  for (int o = 0; o < groupoid_.object_count(); ++o) layer.push_back({o, {}});
  for (int d = 0; d <= bound && !layer.empty(); ++d) {
    std::vector<NerveString> next;
    for (NerveString& s : layer) {
      std::vector<EZPair> faces;
      for (int i = 0; d > 0 && i <= d; ++i) {
        NerveString f = s;
        if (i == 0) {
          f.start = groupoid_.morphism(f.morphisms.front()).target;
          f.morphisms.erase(f.morphisms.begin());
        } else if (i == d) {
          f.morphisms.pop_back();
        } else {
          const auto at = static_cast<std::size_t>(i);
          f.morphisms[at - 1] = groupoid_.compose(f.morphisms[at], f.morphisms[at - 1]);
          f.morphisms.erase(f.morphisms.begin() + static_cast<std::ptrdiff_t>(at));
        }
        faces.push_back(simplex_of(f));
      }
      const std::string k = key(s);
      const int idx = b.add(k, d, std::move(faces));
      index_.emplace(k, idx);
      const int end = object_at(s, d);
      for (int m = 0; m < groupoid_.morphism_count(); ++m) {
        if (groupoid_.morphism(m).source == end && !groupoid_.is_identity(m)) {
          NerveString e = s;
          e.morphisms.push_back(m);
          next.push_back(std::move(e));
        }
      }
      strings_.push_back(std::move(s));
    }
    layer = std::move(next);
  }
  complex_ = std::move(b).build_shared();
}

EZPair GroupoidNerve::simplex_of(const NerveString& s) const {
  const int d = static_cast<int>(s.morphisms.size());
  std::vector<int> merged;
  NerveString core{s.start, {}};
  for (int j = 1; j <= d; ++j) {
    const int m = s.morphisms[static_cast<std::size_t>(j) - 1];
    if (groupoid_.morphism(m).source != object_at(s, j - 1)) throw std::invalid_argument("string is not composable");
    if (groupoid_.is_identity(m)) {
      merged.push_back(j - 1);
    } else {
      core.morphisms.push_back(m);
    }
  }
  auto it = index_.find(key(core));
  if (it == index_.end()) throw std::out_of_range("string exceeds the nerve's bound");
  return {collapse(d, merged), it->second};
}

NerveString GroupoidNerve::string_of(const EZPair& x) const {
  const NerveString& core = strings_[static_cast<std::size_t>(x.core)];
  NerveString out{core.start, {}};
  const auto s = x.degeneracy.values();
  for (std::size_t p = 1; p < s.size(); ++p) {
    if (s[p] == s[p - 1]) {
      out.morphisms.push_back(groupoid_.identity(object_at(core, s[p])));
    } else {
      out.morphisms.push_back(core.morphisms[static_cast<std::size_t>(s[p]) - 1]);
    }
  }
  return out;
}

}  // namespace sset
