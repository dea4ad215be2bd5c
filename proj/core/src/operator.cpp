#include "sset/operator.hpp"

#include <stdexcept>

namespace sset {

MonotoneOperator::MonotoneOperator(int target_dim, std::vector<int> values)
    : target_dim_(target_dim), values_(std::move(values)) {
  if (target_dim_ < 0 || values_.empty()) {
    throw std::invalid_argument("monotone operator needs a non-empty source and target");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > target_dim_) {
      throw std::invalid_argument("operator value out of range: " + to_string());
    }
    if (i > 0 && values_[i - 1] > values_[i]) {
      throw std::invalid_argument("operator is not monotone: " + to_string());
    }
  }
}

MonotoneOperator MonotoneOperator::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return {n, std::move(v)};
}

MonotoneOperator MonotoneOperator::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("coface index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v.push_back(j < i ? j : j + 1);
  return {n, std::move(v)};
}

MonotoneOperator MonotoneOperator::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("codegeneracy index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n) + 2);
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return {n, std::move(v)};
}

MonotoneOperator MonotoneOperator::constant(int m, int n, int v) {
  return {n, std::vector<int>(static_cast<std::size_t>(m) + 1, v)};
}

MonotoneOperator MonotoneOperator::from_image_mask(int n, unsigned mask) {
  std::vector<int> v;
  for (int i = 0; i <= n; ++i) {
    if (mask >> i & 1U) v.push_back(i);
  }
  return {n, std::move(v)};
}

bool MonotoneOperator::is_injective() const {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i - 1] == values_[i]) return false;
  }
  return true;
}

bool MonotoneOperator::is_surjective() const {
  return values_.front() == 0 && values_.back() == target_dim_ && [this] {
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (values_[i] - values_[i - 1] > 1) return false;
    }
    return true;
  }();
}

bool MonotoneOperator::is_identity() const {
  return source_dim() == target_dim_ && is_injective();
}

unsigned MonotoneOperator::image_mask() const {
  unsigned m = 0;
  for (int v : values_) m |= 1U << v;
  return m;
}

std::string MonotoneOperator::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values_[i]);
  }
  return s + "]";
}

MonotoneOperator compose(const MonotoneOperator& g, const MonotoneOperator& f) {
  if (f.target_dim() != g.source_dim()) {
    throw std::invalid_argument("cannot compose " + g.to_string() + " after " + f.to_string() +
                                ": dimension mismatch");
  }
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return {g.target_dim(), std::move(v)};
}

EpiMono ez_factorize(const MonotoneOperator& op) {
  std::vector<int> surj;
  std::vector<int> inj;
  surj.reserve(op.values().size());
  for (int v : op.values()) {
    if (inj.empty() || inj.back() != v) inj.push_back(v);
    surj.push_back(static_cast<int>(inj.size()) - 1);
  }
  const int e = static_cast<int>(inj.size()) - 1;
  return {MonotoneOperator(e, std::move(surj)), MonotoneOperator(op.target_dim(), std::move(inj))};
}

namespace {

void monotone_rec(int m, int n, std::vector<int>& cur, bool surjective,
                  std::vector<MonotoneOperator>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == m + 1) {
    if (!surjective || cur.back() == n) out.emplace_back(n, cur);
    return;
  }
  const int lo = pos == 0 ? 0 : cur.back();
  const int hi = surjective ? (pos == 0 ? 0 : std::min(n, cur.back() + 1)) : n;
  for (int v = lo; v <= hi; ++v) {
    // a surjection must still be able to reach n
    if (surjective && n - v > m - pos) continue;
    cur.push_back(v);
    monotone_rec(m, n, cur, surjective, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MonotoneOperator> surjections(int m, int n) {
  std::vector<MonotoneOperator> out;
  if (n > m || n < 0) return out;
  std::vector<int> cur;
  monotone_rec(m, n, cur, true, out);
  return out;
}

std::vector<MonotoneOperator> monotone_maps(int m, int n) {
  std::vector<MonotoneOperator> out;
  std::vector<int> cur;
  monotone_rec(m, n, cur, false, out);
  return out;
}

MonotoneOperator collapse(int m, std::span<const int> merged) {
  std::vector<bool> merge(static_cast<std::size_t>(m) + 1, false);
  for (int i : merged) {
    if (i < 0 || i >= m) throw std::invalid_argument("collapse index out of range");
    merge[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> v;
  int cur = 0;
  for (int i = 0; i <= m; ++i) {
    if (i > 0 && !merge[static_cast<std::size_t>(i) - 1]) ++cur;
    v.push_back(cur);
  }
  return {cur, std::move(v)};
}

MonotoneOperator first_section(const MonotoneOperator& surjection) {
  std::vector<int> v;
  const auto vals = surjection.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i == 0 || vals[i] != vals[i - 1]) v.push_back(static_cast<int>(i));
  }
  return {surjection.source_dim(), std::move(v)};
}

}  // namespace sset
