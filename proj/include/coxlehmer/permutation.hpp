#ifndef COXLEHMER_PERMUTATION_HPP
#define COXLEHMER_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace coxlehmer {

/// A permutation of [n] in one-line notation, w = w(1) w(2) ... w(n).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless the values are a permutation of [n].
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  /// "3412" (single digits) or "3,4,1,2".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// w(i), 1-based.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }
  /// w^{-1}(v), 1-based.
  int inverse_at(int v) const { return inverse_[static_cast<std::size_t>(v) - 1]; }
  const std::vector<int>& one_line() const noexcept { return values_; }
  Permutation inverse() const { return Permutation(inverse_); }
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Number of inversions.
  int length() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.values_ == b.values_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.values_ <=> b.values_; }

 private:
  std::vector<int> values_;
  std::vector<int> inverse_;
};

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// True iff no subsequence of w is order-isomorphic to pattern.
bool avoids(const Permutation& w, const Permutation& pattern);

}  // namespace coxlehmer

template <>
struct std::hash<coxlehmer::Permutation> {
  std::size_t operator()(const coxlehmer::Permutation& p) const noexcept {
    std::size_t h = 0;
    for (int v : p.one_line()) h = h * 31 + static_cast<std::size_t>(v);
    return h;
  }
};

#endif  // COXLEHMER_PERMUTATION_HPP
