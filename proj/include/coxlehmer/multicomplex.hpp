#ifndef COXLEHMER_MULTICOMPLEX_HPP
#define COXLEHMER_MULTICOMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "coxlehmer/poly.hpp"

namespace coxlehmer {

/// A 0-based point of a product of chains; rank is the sum of entries.
using Point = std::vector<int>;

/// The box [d_1] x ... x [d_k], stored 0-based as prod {0, ..., d_i - 1}.
class ChainProduct {
 public:
  ChainProduct() = default;
  /// Throws std::invalid_argument unless every d_i >= 1.
  explicit ChainProduct(std::vector<int> d);

  const std::vector<int>& degrees() const noexcept { return d_; }
  int dimension() const noexcept { return static_cast<int>(d_.size()); }
  std::size_t size() const noexcept { return size_; }
  bool contains(const Point& x) const;
  std::size_t index(const Point& x) const;
  Point point(std::size_t index) const;
  Point top() const;
  static int rank(const Point& x);
  /// Componentwise order.
  static bool leq(const Point& x, const Point& y);

  friend bool operator==(const ChainProduct&, const ChainProduct&) = default;

 private:
  std::vector<int> d_;
  std::size_t size_ = 1;
};

Point meet(const Point& x, const Point& y);
Point join(const Point& x, const Point& y);

/// A nonempty order ideal of a ChainProduct. Points are kept in
/// lexicographic order, which is itself a linear extension.
class OrderIdeal {
 public:
  /// Downward closure; throws std::out_of_range for points outside the box
  /// and std::invalid_argument for an empty generator list.
  static OrderIdeal closure(const ChainProduct& box, const std::vector<Point>& generators);
  /// Wraps a point set that must already be an order ideal; throws
  /// std::logic_error otherwise.
  static OrderIdeal from_ideal_points(const ChainProduct& box, std::vector<Point> points);
  static OrderIdeal full(const ChainProduct& box);
  static bool is_order_ideal(const ChainProduct& box, const std::vector<Point>& points);

  const ChainProduct& ambient() const noexcept { return box_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(const Point& x) const { return box_.contains(x) && member_[box_.index(x)]; }
  bool is_full() const noexcept { return points_.size() == box_.size(); }
  /// Points of J with no strictly larger point in J.
  std::vector<Point> maxima() const;
  /// Sum over J of q^rank.
  IntPolynomial f_polynomial() const;

  friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) {
    return a.box_ == b.box_ && a.points_ == b.points_;
  }

 private:
  OrderIdeal(ChainProduct box, std::vector<char> member);

  ChainProduct box_;
  std::vector<char> member_;
  std::vector<Point> points_;
};

/// Every nonempty order ideal of the box; throws SizeLimitError past limit.
std::vector<OrderIdeal> all_order_ideals(const ChainProduct& box, std::size_t limit = 100'000);
/// Closure of a random antichain-like sample of points.
OrderIdeal random_order_ideal(const ChainProduct& box, std::mt19937_64& rng);

/// h^<i>, the upper bound for the next entry from the i-th Macaulay
/// representation of h.
std::int64_t macaulay_bound(std::int64_t h, int i);
/// h_0 = 1, all entries non-negative, h_{i+1} <= h_i^<i> for i >= 1.
bool is_m_sequence(std::span<const std::int64_t> h);
bool is_m_sequence(const IntPolynomial& p);

/// Positions into J.points().
using Extension = std::vector<std::uint32_t>;
bool is_linear_extension(const OrderIdeal& J, const Extension& order);
/// Exhaustive; throws SizeLimitError when there are more than limit.
std::vector<Extension> linear_extensions(const OrderIdeal& J, std::size_t limit);
/// Number of linear extensions, saturating at limit + 1.
std::uint64_t count_linear_extensions(const OrderIdeal& J, std::uint64_t limit);
/// Random topological sort: at each step a uniformly chosen minimal element.
Extension random_linear_extension(const OrderIdeal& J, std::mt19937_64& rng);

void to_json(nlohmann::json& j, const OrderIdeal& J);

}  // namespace coxlehmer

#endif  // COXLEHMER_MULTICOMPLEX_HPP
