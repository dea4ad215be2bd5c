#include "sset/pullback_horn.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sset/lifting.hpp"

namespace sset {

namespace {

struct GroupoidState {
  NervePtr simplex;
  std::shared_ptr<GroupoidNerve> nerve;
  std::shared_ptr<Pullback> pb;
};

std::string show(const FiniteSimplicialSet& b, const EZPair& x) { return b.key(x); }

}  // namespace

FibrationStructure identity_fibration(int n, int bound) {
  if (n < 1) throw std::invalid_argument("identity fibration needs n >= 1");
  if (bound < 0) bound = n;
  FibrationStructure fs;
  fs.kind = "identity";
  fs.n = n;
  fs.bound = bound;
  fs.base = standard(n, bound);
  fs.total = fs.base->complex();
  fs.projection = std::make_shared<SimplicialMap>(SimplicialMap::identity(fs.total));
  NervePtr base = fs.base;
  fs.filler = [base](const FillerRequest& r) -> std::optional<EZPair> { return r.image; };
  return fs;
}

FibrationStructure groupoid_projection_fibration(int n, const FiniteGroupoid& g, int bound) {
  if (n < 1) throw std::invalid_argument("groupoid projection needs n >= 1");
  auto st = std::make_shared<GroupoidState>();
  st->simplex = standard(n, bound);
  st->nerve = std::make_shared<GroupoidNerve>(g, bound);
  st->pb = std::make_shared<Pullback>(product(st->simplex->complex(), st->nerve->complex()));

  FibrationStructure fs;
  fs.kind = "groupoid_projection";
  fs.n = n;
  fs.bound = bound;
  fs.base = st->simplex;
  fs.total = st->pb->complex();
  fs.projection = std::make_shared<SimplicialMap>(st->pb->first());
  fs.state = st;
  const GroupoidState* s = st.get();
  fs.filler = [s](const FillerRequest& r) -> std::optional<EZPair> {
    const FiniteGroupoid& grp = s->nerve->groupoid();
    const int dim = r.dim;
    const auto cnt = static_cast<std::size_t>(dim + 1);
    std::vector<int> obj(cnt, -1);
    std::vector<std::vector<int>> known(cnt, std::vector<int>(cnt, -1));
    try {
      for (const auto& [pos, face] : r.faces) {
        NerveString str = s->nerve->string_of(s->pb->second()(face));
        std::vector<int> at;
        for (int q = 0; q < dim + 1; ++q) {
          if (q != pos) at.push_back(q);
        }
        for (std::size_t a = 0; a < at.size(); ++a) {
          obj[static_cast<std::size_t>(at[a])] = s->nerve->object_at(str, static_cast<int>(a));
          int m = grp.identity(obj[static_cast<std::size_t>(at[a])]);
          for (std::size_t b = a + 1; b < at.size(); ++b) {
            m = grp.compose(str.morphisms[b - 1], m);
            int& slot = known[static_cast<std::size_t>(at[a])][static_cast<std::size_t>(at[b])];
            if (slot >= 0 && slot != m) return std::nullopt;
            slot = m;
          }
        }
      }
      auto get = [&](std::size_t i, std::size_t j) {
        if (i < j) return known[i][j];
        return known[j][i] < 0 ? -1 : grp.inverse(known[j][i]);
      };
      // A vertex seen by no face is the inserted one; it copies a neighbour.
      for (std::size_t v = 0; v < cnt; ++v) {
        if (obj[v] >= 0) continue;
        std::size_t nb = v > 0 ? v - 1 : v + 1;
        if (nb >= cnt || obj[nb] < 0) return std::nullopt;
        obj[v] = obj[nb];
        for (std::size_t u = 0; u < cnt; ++u) {
          if (u == v || u == nb) continue;
          int m = get(u, nb);
          if (m < 0) continue;
          if (u < v) known[u][v] = m;
          else known[v][u] = grp.inverse(m);
        }
        known[std::min(v, nb)][std::max(v, nb)] = grp.identity(obj[v]);
      }
      NerveString out;
      out.start = obj[0];
      for (std::size_t p = 0; p + 1 < cnt; ++p) {
        int m = known[p][p + 1];
        for (std::size_t t = 0; m < 0 && t < cnt; ++t) {
          if (t < p && known[t][p] >= 0 && known[t][p + 1] >= 0) {
            m = grp.compose(known[t][p + 1], grp.inverse(known[t][p]));
          } else if (t > p + 1 && known[p][t] >= 0 && known[p + 1][t] >= 0) {
            m = grp.compose(grp.inverse(known[p + 1][t]), known[p][t]);
          }
        }
        if (m < 0) {
          auto f = obj[p] == obj[p + 1] ? std::optional<int>(grp.identity(obj[p]))
                                        : grp.first_between(obj[p], obj[p + 1]);
          if (!f) return std::nullopt;
          m = *f;
        }
        out.morphisms.push_back(m);
      }
      return s->pb->pair(r.image, s->nerve->simplex_of(out));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  return fs;
}

bool is_fibration_up_to_bound(const FibrationStructure& fs) {
  return has_rlp(*fs.projection, LiftingFamily::horns, fs.bound).holds;
}

std::vector<int> fibre_values(const FibrationStructure& fs, const EZPair& x) {
  return fs.base->sequence_of((*fs.projection)(x));
}

bool over_horn(const FibrationStructure& fs, int k, const EZPair& x) {
  std::vector<int> v = fibre_values(fs, x);
  for (int i = 0; i <= fs.n; ++i) {
    if (i != k && std::find(v.begin(), v.end(), i) == v.end()) return true;
  }
  return false;
}

Profile profile(const FibrationStructure& fs, int k, const EZPair& x) {
  std::vector<int> v = fibre_values(fs, x);
  return {x.dim(), static_cast<int>(std::count(v.begin(), v.end(), k))};
}

namespace {

int insertion_point(const std::vector<int>& values, int k) {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [k](int v) { return v <= k; }));
}

struct Builder {
  const FibrationStructure& fs;
  int k;
  QTable& table;

  const FiniteSimplicialSet& b() const { return *fs.total; }

  void violation(std::string kind, const EZPair& x, std::string detail) {
    table.violations.push_back({std::move(kind), show(b(), x), std::move(detail)});
  }

  const QEntry* lookup(const EZPair& x) const { return table.find(x); }

  std::optional<EZPair> clause_a(const EZPair& x, int z) const {
    if (z == 0) return std::nullopt;
    std::vector<int> v = fibre_values(fs, x);
    int w = z - 1;
    if (v[static_cast<std::size_t>(w)] != k) return std::nullopt;
    const QEntry* e = lookup(b().face(x, w));
    if (!e || e->q != x) return std::nullopt;
    return b().degeneracy(x, w);
  }

  std::optional<EZPair> clause_b(const EZPair& x, int j) const {
    EZPair y = b().face(x, j);
    const QEntry* e = lookup(y);
    if (!e) return std::nullopt;
    int jp = j < e->z ? j : j + 1;
    return b().degeneracy(e->q, jp);
  }

  std::optional<EZPair> clause_c(const EZPair& x, int z) {
    std::vector<int> v = fibre_values(fs, x);
    FillerRequest req;
    req.dim = x.dim() + 1;
    for (int a = 0; a < z; ++a) {
      if (v[static_cast<std::size_t>(a)] != k) continue;
      const QEntry* e = lookup(b().face(x, a));
      if (!e) {
        violation("missing_value", x, "Q undefined on d" + std::to_string(a));
        return std::nullopt;
      }
      req.faces.emplace_back(a, e->q);
    }
    req.faces.emplace_back(z, x);
    std::vector<int> img = v;
    img.insert(img.begin() + z, k);
    req.image = fs.base->simplex_of(img);
    std::optional<EZPair> q = fs.filler(req);
    if (!q) {
      violation("filler", x, "no filler returned");
      return std::nullopt;
    }
    if (!b().is_valid(*q) || q->dim() != req.dim || (*fs.projection)(*q) != req.image) {
      violation("filler", x, "filler lies over the wrong simplex");
      return std::nullopt;
    }
    for (const auto& [pos, face] : req.faces) {
      if (b().face(*q, pos) != face) {
        violation("filler", x, "filler has the wrong d" + std::to_string(pos));
        return std::nullopt;
      }
    }
    return q;
  }

  void process(const EZPair& x) {
    std::vector<int> v = fibre_values(fs, x);
    int z = insertion_point(v, k);
    std::optional<EZPair> q;
    char clause = 'c';
    std::optional<EZPair> qa = clause_a(x, z);
    if (!x.is_nondegenerate()) {
      for (int j = 0; j < x.dim(); ++j) {
        if (x.degeneracy(j) != x.degeneracy(j + 1)) continue;
        std::optional<EZPair> qb = clause_b(x, j);
        if (!qb) {
          violation("missing_value", x, "Q undefined on d" + std::to_string(j));
          return;
        }
        if (!q) {
          q = qb;
          clause = 'b';
        } else if (*q != *qb) {
          violation("degeneracy_conflict", x, "s" + std::to_string(j) + " presentation disagrees");
        }
      }
      if (qa && q && *qa != *q) violation("clause_conflict", x, "image and degeneracy presentations disagree");
    } else if (qa) {
      q = qa;
      clause = 'a';
    } else {
      q = clause_c(x, z);
    }
    if (!q) return;
    if (b().face(*q, z) != x) {
      violation("face", x, "d" + std::to_string(z) + " Q x differs from x");
    }
    table.entries.emplace(x, QEntry{*q, z, clause});
  }
};

}  // namespace

QTable q_construct(const FibrationStructure& fs, int k) {
  if (k < 0 || k > fs.n) throw std::invalid_argument("horn index out of range");
  QTable table;
  table.k = k;
  Builder bld{fs, k, table};
  const FiniteSimplicialSet& b = *fs.total;
  std::vector<std::pair<Profile, EZPair>> order;
  for (int d = 0; d < fs.bound && d <= b.dim_bound(); ++d) {
    for (const EZPair& x : b.simplices(d)) {
      if (!over_horn(fs, k, x)) order.emplace_back(profile(fs, k, x), x);
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  for (const auto& [p, x] : order) bld.process(x);

  for (const auto& [x, e] : table.entries) {
    std::vector<int> v = fibre_values(fs, x);
    for (int a = 0; a < e.z; ++a) {
      if (v[static_cast<std::size_t>(a)] != k) continue;
      const QEntry* f = table.find(b.face(x, a));
      if (!f || b.face(e.q, a) != f->q) {
        table.violations.push_back({"commutation", b.key(x), "d" + std::to_string(a) + " Q x != Q d" +
                                                                 std::to_string(a) + " x"});
      }
    }
  }
  return table;
}

PullbackHornCertificate pullback_horn_pstructure(const FibrationStructure& fs, int k) {
  const FiniteSimplicialSet& b = *fs.total;
  std::vector<int> a_members;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (over_horn(fs, k, b.simplex(static_cast<int>(i)))) a_members.push_back(static_cast<int>(i));
  }
  PullbackHornCertificate cert{Subcomplex(fs.total, a_members), q_construct(fs, k), {}};
  cert.structure.ambient = fs.total;
  cert.structure.base = a_members;
  for (std::size_t i = 0; i < b.size(); ++i) {
    int idx = static_cast<int>(i);
    if (cert.a.contains(idx)) continue;
    EZPair x = b.simplex(idx);
    std::vector<int> v = fibre_values(fs, x);
    int z = insertion_point(v, k);
    bool image = false;
    if (z > 0 && v[static_cast<std::size_t>(z - 1)] == k) {
      const QEntry* e = cert.table.find(b.face(x, z - 1));
      image = e && e->q == x;
    }
    if (image) continue;
    const QEntry* e = cert.table.find(x);
    if (!e) {
      cert.structure.deferred.push_back(idx);
      continue;
    }
    cert.structure.pairs.push_back({idx, e->q.core, e->z});
  }
  return cert;
}

std::vector<Violation> check_profile_descent(const FibrationStructure& fs, const PullbackHornCertificate& cert,
                                             DescentOrder order) {
  const FiniteSimplicialSet& b = *fs.total;
  const int k = cert.table.k;
  auto measure = [&](const EZPair& x) {
    Profile p = profile(fs, k, x);
    if (order == DescentOrder::complement) p.s = p.r + 1 - p.s;
    return p;
  };
  std::map<int, int> child_of;
  for (const PairRecord& p : cert.structure.pairs) child_of[p.parent] = p.child;
  std::vector<Violation> out;
  for (const PairRecord& p : cert.structure.pairs) {
    EZPair x = b.simplex(p.child);
    Profile px = measure(x);
    EZPair q = b.simplex(p.parent);
    for (int i = 0; i <= q.dim(); ++i) {
      EZPair w = b.face(q, i);
      if (w.core == p.child || cert.a.contains(w)) continue;
      EZPair core = b.simplex(w.core);
      if (measure(core) < px) continue;
      auto it = child_of.find(w.core);
      if (it != child_of.end() && measure(b.simplex(it->second)) < px) continue;
      out.push_back({"profile_descent", b.id(p.child), "face d" + std::to_string(i) + " of its parent"});
    }
  }
  return out;
}

std::vector<Violation> check_q_injective(const FibrationStructure& fs, const QTable& table) {
  std::map<EZPair, EZPair> seen;
  std::vector<Violation> out;
  for (const auto& [x, e] : table.entries) {
    if (!x.is_nondegenerate() || !e.q.is_nondegenerate()) continue;
    auto [it, fresh] = seen.emplace(e.q, x);
    if (!fresh) {
      out.push_back({"not_injective", fs.total->key(x), "same value as " + fs.total->key(it->second)});
    }
  }
  return out;
}

}  // namespace sset
