#ifndef COXLEHMER_COXETER_HPP
#define COXLEHMER_COXETER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxlehmer/poly.hpp"

namespace coxlehmer {

/// Raised when a requested object would exceed a configured size limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction that must succeed by theory fails its own
/// verification (wrong generator order, corrupted chain data, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class CoxeterType { A, B, D, H3, I2, Product };

std::string to_string(CoxeterType t);
/// Accepts "A", "B", "D", "H3", "I2" (case-insensitive).
CoxeterType parse_coxeter_type(std::string_view s);

/// Subset of the generating set, addressed by internal generator index.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::initializer_list<int> gens);
  static GeneratorSet all(int rank);
  static GeneratorSet from_mask(std::uint32_t mask) { GeneratorSet g; g.bits_ = mask; return g; }

  bool contains(int s) const noexcept { return (bits_ >> s) & 1U; }
  void insert(int s) noexcept { bits_ |= (1U << s); }
  void erase(int s) noexcept { bits_ &= ~(1U << s); }
  int size() const noexcept { return __builtin_popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  std::uint32_t mask() const noexcept { return bits_; }
  std::vector<int> members() const;

  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A finite Coxeter system (W, S) with a fixed numbering of S.
///
/// Generators are addressed internally by indices 0..rank-1. Each index also
/// carries the label used in the Coxeter graph figures:
///   A_n:   s1 - s2 - ... - sn
///   B_n:   s1 =4= s2 - s3 - ... - sn
///   D_n:   s1 - s2 - ... - s(n-1), with s0 attached to s2
///   H3:    s1 - s2 =5= s3
///   I2(m): s1 =m= s2
/// For D_n the internal index equals the label; otherwise index = label - 1.
struct CoxeterSystem {
  CoxeterType type = CoxeterType::A;
  int rank = 0;
  int dihedral_m = 0;
  std::vector<std::vector<int>> coxeter_matrix;
  std::vector<int> labels;
  /// Linear order on S used by the parabolic quotient factorization.
  std::vector<int> generator_order;
  /// Irreducible factors of a product system (empty otherwise).
  std::vector<CoxeterSystem> factors;

  std::string name() const;
  int label(int s) const { return labels.at(static_cast<std::size_t>(s)); }
  /// Internal index of a generator label; throws std::out_of_range.
  int index_of_label(int label) const;
  /// |W| from the classification.
  std::uint64_t expected_order() const;
};

/// Validates the (type, rank) pair and returns the system with the numbering
/// above. dihedral_m is used only for I2.
CoxeterSystem build_system(CoxeterType type, int rank, int dihedral_m = 0);
CoxeterSystem product_system(const CoxeterSystem& a, const CoxeterSystem& b);

/// Index of an element in an enumerated group.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t id) : id_(id) {}
  constexpr std::uint32_t index() const noexcept { return id_; }
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint32_t id_ = 0;
};

using Word = std::vector<int>;
/// Exact type-specific normal form of a group element.
using CanonicalForm = std::vector<std::int32_t>;

namespace detail {
class Realization;
struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& k) const noexcept;
};
}  // namespace detail

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

/// A finite Coxeter group enumerated in full, with multiplication tables by
/// generators on both sides. Immutable after construction.
class CoxeterGroup {
 public:
  static std::shared_ptr<const CoxeterGroup> enumerate(const CoxeterSystem& system,
                                                       std::size_t limit = kDefaultEnumerationLimit);
  /// Rebuilds a group from stored canonical forms (used by the on-disk cache).
  static std::shared_ptr<const CoxeterGroup> from_canonical_forms(const CoxeterSystem& system,
                                                                  const std::vector<CanonicalForm>& forms);
  ~CoxeterGroup();
  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CoxeterSystem& system() const noexcept { return system_; }
  int rank() const noexcept { return system_.rank; }
  std::size_t size() const noexcept { return lengths_.size(); }
  std::vector<Element> elements() const;

  Element identity() const noexcept { return Element(0); }
  Element longest() const noexcept { return longest_; }
  Element generator(int s) const { return right(identity(), s); }

  int length(Element w) const { return lengths_[w.index()]; }
  Element right(Element w, int s) const { return Element(right_[w.index() * stride() + static_cast<std::size_t>(s)]); }
  Element left(Element w, int s) const { return Element(left_[w.index() * stride() + static_cast<std::size_t>(s)]); }

  Element multiply(Element a, Element b) const;
  Element inverse(Element w) const { return Element(inverse_[w.index()]); }
  /// Product of generators by internal index; the empty word is e.
  Element apply_word(std::span<const int> word) const;
  /// Word in generator labels, e.g. {2,1,3,2} for s2 s1 s3 s2.
  Element apply_label_word(std::span<const int> labels) const;
  Word reduced_word(Element w) const;

  bool is_left_descent(Element w, int s) const { return length(left(w, s)) < length(w); }
  bool is_right_descent(Element w, int s) const { return length(right(w, s)) < length(w); }
  GeneratorSet descents_left(Element w) const;
  GeneratorSet descents_right(Element w) const;

  const CanonicalForm& canonical_form(Element w) const { return forms_[w.index()]; }
  std::optional<Element> find(const CanonicalForm& form) const;

  /// Sum of q^l(x) over the given elements.
  IntPolynomial poincare_polynomial(std::span<const Element> xs) const;
  /// W(q).
  IntPolynomial poincare_polynomial() const;
  /// Sorted exponents e_i with W(q) = prod [e_i + 1]_q.
  std::vector<int> exponents() const;

  /// w = w_J * jw with jw free of left descents in J and lengths adding.
  std::pair<Element, Element> parabolic_decompose(Element w, GeneratorSet J) const;
  /// w = w^(1) ... w^(n) along the chain J_i = {chain[0..i-1]}.
  std::vector<Element> quotient_factorization(Element w, std::span<const int> chain) const;
  /// Factorization along system().generator_order.
  std::vector<Element> quotient_factorization(Element w) const;
  /// Elements of W_J free of left descents in I, for I a subset of J.
  std::vector<Element> parabolic_quotient(GeneratorSet I, GeneratorSet J) const;
  std::vector<Element> parabolic_subgroup(GeneratorSet J) const;
  Element max_parabolic_element(GeneratorSet J) const;
  /// W/V = { w : l(wv) = l(w) + l(v) for all v in V }.
  std::vector<Element> generalized_quotient(std::span<const Element> V) const;

  /// All conjugates of generators.
  std::vector<Element> reflections() const;

  bool left_weak_leq(Element u, Element w) const;
  bool right_weak_leq(Element u, Element w) const;
  std::vector<Element> weak_left_interval(Element u, Element w) const;
  std::vector<Element> weak_right_interval(Element u, Element w) const;

  /// One-line notation for A (e.g. "3412"), signed one-line for B and D
  /// (e.g. "[-2,1,3]"), reduced word in labels otherwise (e.g. "s1s2", "e").
  std::string format(Element w) const;
  /// Reduced word in labels separated by spaces ("s2 s1 s3 s2"; "" for e).
  std::string format_word(Element w) const;
  /// Accepts generator words ("s2 s1 s3 s2", "s2s1", "e", ""), one-line
  /// permutations for type A ("3412", "3,4,1,2") and signed one-line
  /// notation for B/D ("[-2,1,3]"). Throws std::invalid_argument with the
  /// offending position.
  Element parse(std::string_view text) const;

  /// For a product system, the canonical forms of the two components of w.
  std::pair<CanonicalForm, CanonicalForm> split_product_form(Element w) const;

 private:
  CoxeterGroup(CoxeterSystem system, std::unique_ptr<detail::Realization> realization);
  std::size_t stride() const noexcept { return static_cast<std::size_t>(system_.rank); }
  void build_tables();
  Element lookup(const CanonicalForm& form) const;

  CoxeterSystem system_;
  std::unique_ptr<detail::Realization> realization_;
  std::vector<CanonicalForm> forms_;
  std::unordered_map<CanonicalForm, std::uint32_t, detail::CanonicalFormHash> index_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::int8_t> parent_generator_;
  Element longest_;
};

using GroupPtr = std::shared_ptr<const CoxeterGroup>;

/// Enumerates the product group W1 x W2 (generators of W1 first).
GroupPtr enumerate_product(const CoxeterSystem& a, const CoxeterSystem& b,
                           std::size_t limit = kDefaultEnumerationLimit);

}  // namespace coxlehmer

template <>
struct std::hash<coxlehmer::Element> {
  std::size_t operator()(coxlehmer::Element e) const noexcept { return std::hash<std::uint32_t>{}(e.index()); }
};

#endif  // COXLEHMER_COXETER_HPP
