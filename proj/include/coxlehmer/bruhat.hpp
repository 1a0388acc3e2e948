#ifndef COXLEHMER_BRUHAT_HPP
#define COXLEHMER_BRUHAT_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "coxlehmer/coxeter.hpp"
#include "coxlehmer/poly.hpp"

namespace coxlehmer {

/// Enough for S8 (40320 elements, about 200 MB of reachability bits).
inline constexpr std::size_t kDefaultBruhatLimit = 41'000;

/// Bruhat order of an enumerated group: covers u < u*t with l(u*t) = l(u)+1
/// for reflections t, plus the full "below" relation as one bitset per element.
class BruhatOrder {
 public:
  static std::shared_ptr<const BruhatOrder> build(GroupPtr group, std::size_t limit = kDefaultBruhatLimit);
  /// Rebuilds the order from stored lower covers (indexed like the group).
  static std::shared_ptr<const BruhatOrder> from_lower_covers(GroupPtr group,
                                                              std::vector<std::vector<std::uint32_t>> lower_covers);

  const CoxeterGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return group_->size(); }

  bool leq(Element u, Element w) const {
    std::size_t i = u.index();
    return (below_[w.index() * words_ + i / 64] >> (i % 64)) & 1U;
  }
  const std::vector<std::uint32_t>& lower_covers(Element w) const { return lower_[w.index()]; }
  const std::vector<std::uint32_t>& upper_covers(Element w) const { return upper_[w.index()]; }
  std::size_t cover_count() const noexcept { return cover_count_; }

  /// [e, w].
  std::vector<Element> lower_interval(Element w) const;
  /// [u, w]; empty when u is not below w.
  std::vector<Element> interval(Element u, Element w) const;
  std::size_t lower_interval_size(Element w) const;
  /// h_w(q), the rank-generating function of [e, w].
  IntPolynomial lower_poincare(Element w) const;
  /// Raw bit row of [e, w], words_per_row() 64-bit words.
  std::span<const std::uint64_t> below_row(Element w) const {
    return {below_.data() + w.index() * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

 private:
  BruhatOrder(GroupPtr group, std::vector<std::vector<std::uint32_t>> lower);
  void close();

  GroupPtr group_;
  std::vector<std::vector<std::uint32_t>> lower_;
  std::vector<std::vector<std::uint32_t>> upper_;
  std::size_t cover_count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> below_;
};

using BruhatPtr = std::shared_ptr<const BruhatOrder>;

/// [e, w] computed from one reduced word of w by the subword property,
/// independently of the cover relation.
std::vector<Element> subword_lower_interval(const CoxeterGroup& group, Element w);

}  // namespace coxlehmer

#endif  // COXLEHMER_BRUHAT_HPP
