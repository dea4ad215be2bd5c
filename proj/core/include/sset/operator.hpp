#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sset {

/// A monotone map [m] -> [n] in the simplex category.
///
/// Stored as the list of its m+1 values. Faces d^i and degeneracies s^i are the
/// elementary operators; every other operator is a composite of these.
class MonotoneOperator {
 public:
  MonotoneOperator() : target_dim_(0), values_{0} {}
  MonotoneOperator(int target_dim, std::vector<int> values);

  static MonotoneOperator identity(int n);
  /// Coface d^i : [n-1] -> [n], skipping i.
  static MonotoneOperator coface(int n, int i);
  /// Codegeneracy s^i : [n+1] -> [n], hitting i twice.
  static MonotoneOperator codegeneracy(int n, int i);
  /// Constant map [m] -> [n] with value v.
  static MonotoneOperator constant(int m, int n, int v);
  /// Injective operator [p] -> [n] whose image is the set bits of mask.
  static MonotoneOperator from_image_mask(int n, unsigned mask);

  int source_dim() const { return static_cast<int>(values_.size()) - 1; }
  int target_dim() const { return target_dim_; }
  std::span<const int> values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const;
  /// Bit mask of the image.
  unsigned image_mask() const;

  std::string to_string() const;

  friend bool operator==(const MonotoneOperator&, const MonotoneOperator&) = default;
  friend std::strong_ordering operator<=>(const MonotoneOperator& a, const MonotoneOperator& b) {
    if (auto c = a.target_dim_ <=> b.target_dim_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  int target_dim_;
  std::vector<int> values_;
};

/// g ∘ f. Throws std::invalid_argument unless f.target_dim() == g.source_dim().
MonotoneOperator compose(const MonotoneOperator& g, const MonotoneOperator& f);

struct EpiMono {
  MonotoneOperator surjection;
  MonotoneOperator injection;
};

/// Unique factorization op = injection ∘ surjection.
EpiMono ez_factorize(const MonotoneOperator& op);

/// All surjections [m] -> [n], in lexicographic order of their value lists.
std::vector<MonotoneOperator> surjections(int m, int n);

/// All monotone maps [m] -> [n], lexicographically ordered.
std::vector<MonotoneOperator> monotone_maps(int m, int n);

/// Surjection [m] -> [m - |merged|] identifying i and i+1 for each i in merged.
MonotoneOperator collapse(int m, std::span<const int> merged);

/// Section of a surjection picking the first element of every fibre.
MonotoneOperator first_section(const MonotoneOperator& surjection);

}  // namespace sset
