#include "sset/subdivision.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sset {

namespace {

unsigned full_mask(int n) { return (1U << (n + 1)) - 1; }

}  // namespace

JoinMap::JoinMap(int n_src, int n_tgt, std::vector<unsigned> singleton_values)
    : n_src_(n_src), n_tgt_(n_tgt), values_(std::move(singleton_values)) {
  if (values_.size() != static_cast<std::size_t>(n_src) + 1) throw std::invalid_argument("join map needs n_src+1 values");
  for (unsigned v : values_) {
    if (v == 0 || (v & ~full_mask(n_tgt)) != 0) throw std::invalid_argument("join map value is not a non-empty subset");
  }
}

JoinMap JoinMap::identity(int n) {
  std::vector<unsigned> v;
  for (int i = 0; i <= n; ++i) v.push_back(1U << i);
  return {n, n, std::move(v)};
}

JoinMap JoinMap::of(const MonotoneOperator& op) {
  std::vector<unsigned> v;
  for (int x : op.values()) v.push_back(1U << x);
  return {op.source_dim(), op.target_dim(), std::move(v)};
}

unsigned JoinMap::operator()(unsigned subset) const {
  unsigned r = 0;
  for (int i = 0; i <= n_src_; ++i) {
    if (subset >> i & 1U) r |= values_[static_cast<std::size_t>(i)];
  }
  return r;
}

Chain JoinMap::operator()(const Chain& c) const {
  Chain out;
  out.reserve(c.size());
  for (unsigned s : c) out.push_back((*this)(s));
  return out;
}

JoinMap compose(const JoinMap& g, const JoinMap& f) {
  if (f.n_tgt() != g.n_src()) throw std::invalid_argument("join maps are not composable");
  std::vector<unsigned> v;
  for (unsigned s : f.singleton_values()) v.push_back(g(s));
  return {f.n_src(), g.n_tgt(), std::move(v)};
}

bool agree_on_all_subsets(const JoinMap& a, const JoinMap& b) {
  if (a.n_src() != b.n_src() || a.n_tgt() != b.n_tgt()) return false;
  for (unsigned s = 1; s <= full_mask(a.n_src()); ++s) {
    if (a(s) != b(s)) return false;
  }
  return true;
}

JoinMap j_join(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("j_n^k needs 0 <= k <= n");
  std::vector<unsigned> v;
  for (int i = 0; i <= n; ++i) v.push_back(i <= k ? 1U << i : full_mask(i));
  return {n, n, std::move(v)};
}

JoinMap r_join(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("r_n^k needs 0 <= k <= n");
  std::vector<unsigned> v;
  for (int i = 0; i <= n + 1; ++i) {
    if (i <= k) v.push_back(1U << i);
    else if (i == k + 1) v.push_back(full_mask(k));
    else v.push_back(1U << (i - 1));
  }
  return {n + 1, n, std::move(v)};
}

SdComplex::SdComplex(int n)
    : n_(n), masks_(FinitePoset::nonempty_subset_masks(n)), element_(full_mask(n) + 1, -1),
      nerve_(FinitePoset::nonempty_subsets(n), n) {
  for (std::size_t e = 0; e < masks_.size(); ++e) element_[masks_[e]] = static_cast<int>(e);
  for (int v : complex()->nondeg_of_dim(n)) maximal_.push_back(v);
}

Chain SdComplex::chain(int index) const {
  Chain c;
  for (int e : nerve_.chain(index)) c.push_back(mask_of(e));
  return c;
}

int SdComplex::index_of(const Chain& c) const {
  std::vector<int> e;
  for (unsigned s : c) e.push_back(element_of(s));
  return nerve_.index_of_chain(e);
}

EZPair SdComplex::simplex_of(const Chain& sequence) const {
  std::vector<int> e;
  for (unsigned s : sequence) e.push_back(element_of(s));
  return nerve_.simplex_of(e);
}

SdPtr sd_standard(int n) {
  if (n < 0 || n > 8) throw std::out_of_range("sd Δⁿ is only built for 0 <= n <= 8");
  static std::mutex mu;
  static std::map<int, SdPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const SdComplex>(n);
  return slot;
}

SimplicialMap sd_map(const JoinMap& f) {
  const SdPtr src = sd_standard(f.n_src());
  const SdPtr tgt = sd_standard(f.n_tgt());
  return src->nerve().map_to(tgt->nerve(), [&](int e) { return tgt->element_of(f(src->mask_of(e))); });
}

SimplicialMap sd_monotone(const MonotoneOperator& op) { return sd_map(JoinMap::of(op)); }
SimplicialMap j_map(int n, int k) { return sd_map(j_join(n, k)); }
SimplicialMap r_map(int n, int k) { return sd_map(r_join(n, k)); }

SimplicialMap last_vertex(int n) {
  const SdPtr src = sd_standard(n);
  const NervePtr tgt = standard(n);
  return src->nerve().map_to(*tgt, [&](int e) { return 31 - __builtin_clz(src->mask_of(e)); });
}

Subcomplex sd_sub(const Subcomplex& a) {
  const int n = a.ambient().top_dim();
  const SdPtr sd = sd_standard(n);
  std::vector<unsigned> faces;
  for (int v : a.members()) {
    unsigned m = 0;
    for (int x : a.ambient().vertices(a.ambient().simplex(v))) {
      m |= 1U << std::stoi(a.ambient().id(x).substr(1));
    }
    faces.push_back(m);
  }
  std::vector<int> members;
  const auto& c = *sd->complex();
  for (int v = 0; v < static_cast<int>(c.size()); ++v) {
    const unsigned top = sd->chain(v).back();
    if (std::any_of(faces.begin(), faces.end(), [top](unsigned f) { return (top & ~f) == 0; })) members.push_back(v);
  }
  return {sd->complex(), std::move(members)};
}

std::vector<EquationReport> check_equations(int n_max) {
  std::vector<EquationReport> reps(10);
  for (int e = 0; e < 10; ++e) reps[static_cast<std::size_t>(e)].equation = e + 1;
  auto check = [&](int eq, const JoinMap& l, const JoinMap& r, std::vector<int> tuple) {
    auto& rep = reps[static_cast<std::size_t>(eq - 1)];
    ++rep.instances;
    if (!agree_on_all_subsets(l, r)) rep.failures.push_back(std::move(tuple));
  };
  auto j = j_join;
  auto r = r_join;
  auto d = [](int n, int i) { return JoinMap::of(MonotoneOperator::coface(n, i)); };
  auto s = [](int n, int i) { return JoinMap::of(MonotoneOperator::codegeneracy(n, i)); };
  auto c = [](const JoinMap& a, const JoinMap& b) { return compose(a, b); };
  const int N = n_max;
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (n + 1 <= N && k >= 1) {
        check(1, c(r(n, k), d(n + 1, k + 1)), JoinMap::identity(n), {n, k});
        for (int i = 0; i <= k; ++i) {
          check(2, c(c(c(j(n, k), r(n, k)), d(n + 1, i)), j(n, k - 1)), c(c(j(n, k), r(n, k)), d(n + 1, i)), {n, k, i});
        }
        if (n >= 1 && k <= n - 1) {
          for (int i = k + 2; i <= n + 1; ++i) check(3, c(r(n, k), d(n + 1, i)), c(d(n, i - 1), r(n - 1, k)), {n, k, i});
        }
      }
      if (n >= 1 && k <= n - 1) {
        for (int i = 0; i <= n; ++i) check(4, c(c(j(n, k), d(n, i)), j(n - 1, k)), c(j(n, k), d(n, i)), {n, k, i});
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int h = 0; h < k; ++h) check(5, c(j(n - 1, h), r(n - 1, k)), c(j(n - 1, h), s(n - 1, k)), {n, h, k});
    }
    if (n + 2 <= N) {
      for (int k = 0; k <= n + 1; ++k) {
        for (int h = 0; h < k; ++h) {
          check(6, c(c(j(n, h), r(n, h)), r(n + 1, k)), c(c(j(n, h), r(n, h)), s(n + 1, k)), {n, h, k});
        }
      }
      for (int k = 1; k <= n; ++k) {
        check(7, c(c(j(n, k), r(n, k)), r(n + 1, k)), c(c(j(n, k), r(n, k)), s(n + 1, k + 1)), {n, k});
      }
      for (int k = 1; k <= n + 1; ++k) {
        for (int h = 0; h < k; ++h) {
          check(9, c(c(s(n, h), j(n + 1, k)), r(n + 1, k)), c(c(j(n, k - 1), r(n, k - 1)), s(n + 1, h)), {n, h, k});
        }
      }
      for (int k = 1; k <= n; ++k) {
        for (int h = k; h <= n; ++h) {
          check(10, c(c(s(n, h), j(n + 1, k)), r(n + 1, k)), c(c(j(n, k), r(n, k)), s(n + 1, h + 1)), {n, k, h});
        }
      }
    }
    if (n + 1 <= N) {
      for (int k = 1; k <= n; ++k) {
        for (int h = 0; h <= k; ++h) check(8, c(r(n, k), j(n + 1, h)), c(j(n, h), r(n, k)), {n, k, h});
      }
    }
  }
  return reps;
}

std::optional<char> sd_horn_form(const Chain& c, int n) {
  const unsigned full = full_mask(n);
  const unsigned rest = full & ~1U;
  const unsigned top = c.back();
  if (top == rest) return 'e';
  if (top != full) return std::nullopt;
  const std::size_t len = c.size();
  if (len >= 2 && c[len - 2] == rest) return 'f';
  if (c[0] == 1U) return 'b';
  if (c[0] & 1U) return 'a';
  std::size_t q = 0;
  while (!(c[q] & 1U)) ++q;
  return c[q] == (c[q - 1] | 1U) ? 'd' : 'c';
}

Chain swap_elements(const Chain& c, int k) {
  Chain out;
  for (unsigned s : c) {
    const unsigned b0 = s & 1U;
    const unsigned bk = s >> k & 1U;
    unsigned t = s & ~1U & ~(1U << k);
    out.push_back(t | (b0 << k) | bk);
  }
  return out;
}

SdHornCertificate sd_horn_pstructure(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("sd horn needs n >= 1 and 0 <= k <= n");
  SdHornCertificate cert{sd_standard(n), {}};
  const SdComplex& sd = *cert.sd;
  PStructure& p = cert.structure;
  p.ambient = sd.complex();
  p.base = sd_sub(horn(standard(n), k)).members();
  std::vector<bool> in_base(p.ambient->size(), false);
  for (int v : p.base) in_base[static_cast<std::size_t>(v)] = true;
  for (int v = 0; v < static_cast<int>(p.ambient->size()); ++v) {
    if (in_base[static_cast<std::size_t>(v)]) continue;
    const Chain c0 = swap_elements(sd.chain(v), k);
    const auto form = sd_horn_form(c0, n);
    if (!form) throw std::logic_error("chain outside sd Λⁿ_k has no form");
    Chain parent = c0;
    std::size_t at = 0;
    switch (*form) {
      case 'a':
        parent.insert(parent.begin(), 1U);
        break;
      case 'c':
        while (!(c0[at] & 1U)) ++at;
        parent.insert(parent.begin() + static_cast<std::ptrdiff_t>(at), c0[at - 1] | 1U);
        break;
      case 'e':
        at = c0.size();
        parent.push_back(full_mask(n));
        break;
      default:
        continue;
    }
    p.pairs.push_back({v, sd.index_of(swap_elements(parent, k)), static_cast<int>(at)});
  }
  return cert;
}

std::string chain_key(const Chain& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += MonotoneOperator::from_image_mask(31 - __builtin_clz(c[i] | 1U), c[i]).to_string();
  }
  return s + "]";
}

}  // namespace sset
