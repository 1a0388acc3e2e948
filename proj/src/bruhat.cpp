#include "coxlehmer/bruhat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace coxlehmer {

BruhatOrder::BruhatOrder(GroupPtr group, std::vector<std::vector<std::uint32_t>> lower)
    : group_(std::move(group)), lower_(std::move(lower)) {
  close();
}

std::shared_ptr<const BruhatOrder> BruhatOrder::build(GroupPtr group, std::size_t limit) {
  if (group->size() > limit) {
    throw SizeLimitError("Bruhat order of " + group->system().name() + " needs " + std::to_string(group->size()) +
                         " elements, above the limit of " + std::to_string(limit));
  }
  const CoxeterGroup& g = *group;
  std::vector<Word> reflection_words;
  for (Element t : g.reflections()) reflection_words.push_back(g.reduced_word(t));
  std::vector<std::vector<std::uint32_t>> lower(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Element w(static_cast<std::uint32_t>(i));
    for (const Word& t : reflection_words) {
      Element u = w;
      for (int s : t) u = g.right(u, s);
      if (g.length(u) + 1 == g.length(w)) lower[i].push_back(u.index());
    }
    std::sort(lower[i].begin(), lower[i].end());
  }
  return std::shared_ptr<const BruhatOrder>(new BruhatOrder(std::move(group), std::move(lower)));
}

std::shared_ptr<const BruhatOrder> BruhatOrder::from_lower_covers(GroupPtr group,
                                                                  std::vector<std::vector<std::uint32_t>> lower) {
  if (lower.size() != group->size()) throw std::invalid_argument("cover list size does not match the group");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    for (auto u : lower[i]) {
      if (u >= group->size() || group->length(Element(u)) + 1 != group->length(Element(static_cast<std::uint32_t>(i))))
        throw std::invalid_argument("stored cover does not raise length by one");
    }
  }
  return std::shared_ptr<const BruhatOrder>(new BruhatOrder(std::move(group), std::move(lower)));
}

void BruhatOrder::close() {
  const std::size_t n = group_->size();
  upper_.assign(n, {});
  cover_count_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto u : lower_[i]) upper_[u].push_back(static_cast<std::uint32_t>(i));
    cover_count_ += lower_[i].size();
  }
  words_ = (n + 63) / 64;
  below_.assign(n * words_, 0);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return group_->length(Element(a)) < group_->length(Element(b));
  });
  for (auto i : order) {
    std::uint64_t* row = below_.data() + i * words_;
    row[i / 64] |= std::uint64_t{1} << (i % 64);
    for (auto u : lower_[i]) {
      const std::uint64_t* src = below_.data() + u * words_;
      for (std::size_t k = 0; k < words_; ++k) row[k] |= src[k];
    }
  }
}

std::vector<Element> BruhatOrder::lower_interval(Element w) const {
  std::vector<Element> out;
  auto row = below_row(w);
  for (std::size_t k = 0; k < row.size(); ++k) {
    std::uint64_t bits = row[k];
    while (bits) {
      int b = __builtin_ctzll(bits);
      out.emplace_back(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Element> BruhatOrder::interval(Element u, Element w) const {
  std::vector<Element> out;
  for (Element z : lower_interval(w))
    if (leq(u, z)) out.push_back(z);
  return out;
}

std::size_t BruhatOrder::lower_interval_size(Element w) const {
  std::size_t c = 0;
  for (auto word : below_row(w)) c += static_cast<std::size_t>(__builtin_popcountll(word));
  return c;
}

IntPolynomial BruhatOrder::lower_poincare(Element w) const {
  std::vector<IntPolynomial::Coefficient> c(static_cast<std::size_t>(group_->length(w)) + 1, 0);
  auto row = below_row(w);
  for (std::size_t k = 0; k < row.size(); ++k) {
    std::uint64_t bits = row[k];
    while (bits) {
      int b = __builtin_ctzll(bits);
      ++c[static_cast<std::size_t>(group_->length(Element(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)))))];
      bits &= bits - 1;
    }
  }
  return IntPolynomial(std::move(c));
}

std::vector<Element> subword_lower_interval(const CoxeterGroup& group, Element w) {
  std::vector<char> in(group.size(), 0);
  std::vector<Element> set{group.identity()};
  in[0] = 1;
  for (int s : group.reduced_word(w)) {
    std::size_t n = set.size();
    for (std::size_t i = 0; i < n; ++i) {
      Element x = group.right(set[i], s);
      if (!in[x.index()]) {
        in[x.index()] = 1;
        set.push_back(x);
      }
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace coxlehmer
