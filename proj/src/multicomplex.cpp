#include "coxlehmer/multicomplex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "coxlehmer/coxeter.hpp"

namespace coxlehmer {

ChainProduct::ChainProduct(std::vector<int> d) : d_(std::move(d)) {
  for (int x : d_) {
    if (x < 1) throw std::invalid_argument("ChainProduct: every d_i must be at least 1");
    if (size_ > (std::size_t{1} << 40) / static_cast<std::size_t>(x)) throw SizeLimitError("ChainProduct: box too large");
    size_ *= static_cast<std::size_t>(x);
  }
}

bool ChainProduct::contains(const Point& x) const {
  if (x.size() != d_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= d_[i]) return false;
  return true;
}

std::size_t ChainProduct::index(const Point& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d_.size(); ++i) idx = idx * static_cast<std::size_t>(d_[i]) + static_cast<std::size_t>(x[i]);
  return idx;
}

Point ChainProduct::point(std::size_t index) const {
  Point x(d_.size());
  for (std::size_t i = d_.size(); i-- > 0;) {
    x[i] = static_cast<int>(index % static_cast<std::size_t>(d_[i]));
    index /= static_cast<std::size_t>(d_[i]);
  }
  return x;
}

Point ChainProduct::top() const {
  Point x(d_);
  for (int& v : x) --v;
  return x;
}

int ChainProduct::rank(const Point& x) { return std::accumulate(x.begin(), x.end(), 0); }

bool ChainProduct::leq(const Point& x, const Point& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Point meet(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw std::invalid_argument("meet: dimension mismatch");
  Point z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::min(x[i], y[i]);
  return z;
}

Point join(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw std::invalid_argument("join: dimension mismatch");
  Point z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::max(x[i], y[i]);
  return z;
}

OrderIdeal::OrderIdeal(ChainProduct box, std::vector<char> member) : box_(std::move(box)), member_(std::move(member)) {
  for (std::size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) points_.push_back(box_.point(i));
}

OrderIdeal OrderIdeal::closure(const ChainProduct& box, const std::vector<Point>& generators) {
  if (generators.empty()) throw std::invalid_argument("OrderIdeal: empty generator list");
  std::vector<char> member(box.size(), 0);
  for (const auto& g : generators)
    if (!box.contains(g)) throw std::out_of_range("OrderIdeal: point outside the box");
  // Index order is a linear extension, so one descending sweep closes the set.
  for (const auto& g : generators) member[box.index(g)] = 1;
  for (std::size_t idx = box.size(); idx-- > 0;) {
    if (!member[idx]) continue;
    Point x = box.point(idx);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      --x[i];
      member[box.index(x)] = 1;
      ++x[i];
    }
  }
  return OrderIdeal(box, std::move(member));
}

bool OrderIdeal::is_order_ideal(const ChainProduct& box, const std::vector<Point>& points) {
  std::vector<char> member(box.size(), 0);
  for (const auto& p : points) {
    if (!box.contains(p)) return false;
    member[box.index(p)] = 1;
  }
  for (const auto& p : points) {
    Point x = p;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      --x[i];
      if (!member[box.index(x)]) return false;
      ++x[i];
    }
  }
  return true;
}

OrderIdeal OrderIdeal::from_ideal_points(const ChainProduct& box, std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("OrderIdeal: empty point set");
  if (!is_order_ideal(box, points)) throw std::logic_error("OrderIdeal: point set is not downward closed");
  std::vector<char> member(box.size(), 0);
  for (const auto& p : points) member[box.index(p)] = 1;
  return OrderIdeal(box, std::move(member));
}

OrderIdeal OrderIdeal::full(const ChainProduct& box) { return OrderIdeal(box, std::vector<char>(box.size(), 1)); }

std::vector<Point> OrderIdeal::maxima() const {
  std::vector<Point> out;
  for (const auto& p : points_) {
    bool maximal = true;
    Point x = p;
    for (std::size_t i = 0; i < x.size() && maximal; ++i) {
      ++x[i];
      if (contains(x)) maximal = false;
      --x[i];
    }
    if (maximal) out.push_back(p);
  }
  return out;
}

IntPolynomial OrderIdeal::f_polynomial() const {
  std::vector<IntPolynomial::Coefficient> c;
  for (const auto& p : points_) {
    auto r = static_cast<std::size_t>(ChainProduct::rank(p));
    if (c.size() <= r) c.resize(r + 1, 0);
    ++c[r];
  }
  return IntPolynomial(std::move(c));
}

std::vector<OrderIdeal> all_order_ideals(const ChainProduct& box, std::size_t limit) {
  std::vector<OrderIdeal> out;
  std::vector<char> member(box.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == box.size()) {
      if (!member[0]) return;
      if (out.size() >= limit) throw SizeLimitError("all_order_ideals: more than " + std::to_string(limit) + " ideals");
      out.push_back(OrderIdeal::from_ideal_points(box, [&] {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < member.size(); ++i)
          if (member[i]) pts.push_back(box.point(i));
        return pts;
      }()));
      return;
    }
    Point x = box.point(idx);
    bool allowed = true;
    for (std::size_t i = 0; i < x.size() && allowed; ++i) {
      if (x[i] == 0) continue;
      --x[i];
      allowed = member[box.index(x)];
      ++x[i];
    }
    member[idx] = 0;
    rec(idx + 1);
    if (allowed) {
      member[idx] = 1;
      rec(idx + 1);
      member[idx] = 0;
    }
  };
  rec(0);
  return out;
}

OrderIdeal random_order_ideal(const ChainProduct& box, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, std::max(1, box.dimension() + 1));
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::vector<Point> gens;
  for (int k = count(rng); k > 0; --k) gens.push_back(box.point(pick(rng)));
  return OrderIdeal::closure(box, gens);
}

namespace {

std::int64_t binom_capped(std::int64_t n, std::int64_t k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t macaulay_bound(std::int64_t h, int i) {
  if (i < 1) throw std::invalid_argument("macaulay_bound: i must be at least 1");
  if (h < 0) throw std::invalid_argument("macaulay_bound: h must be non-negative");
  std::int64_t rest = h;
  std::int64_t bound = 0;
  for (int k = i; k >= 1 && rest > 0; --k) {
    std::int64_t a = k;
    while (binom_capped(a + 1, k, rest) <= rest) ++a;
    rest -= binom_capped(a, k, rest);
    std::int64_t term = binom_capped(a + 1, k + 1, INT64_MAX / 2);
    if (term > INT64_MAX / 2 || bound > INT64_MAX / 2) throw std::overflow_error("macaulay_bound: overflow");
    bound += term;
  }
  return bound;
}

bool is_m_sequence(std::span<const std::int64_t> h) {
  if (h.empty() || h[0] != 1) return false;
  for (auto v : h)
    if (v < 0) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i + 1] > macaulay_bound(h[i], static_cast<int>(i))) return false;
  return true;
}

bool is_m_sequence(const IntPolynomial& p) { return is_m_sequence(std::span<const std::int64_t>(p.coefficients())); }

namespace {

struct Covers {
  std::vector<std::vector<std::uint32_t>> up;
  std::vector<int> indegree;
};

Covers covers_of(const OrderIdeal& J) {
  const auto& pts = J.points();
  std::unordered_map<std::size_t, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < pts.size(); ++i) pos[J.ambient().index(pts[i])] = i;
  Covers c;
  c.up.resize(pts.size());
  c.indegree.assign(pts.size(), 0);
  for (std::uint32_t i = 0; i < pts.size(); ++i) {
    Point x = pts[i];
    for (std::size_t k = 0; k < x.size(); ++k) {
      ++x[k];
      if (J.contains(x)) {
        auto j = pos.at(J.ambient().index(x));
        c.up[i].push_back(j);
        ++c.indegree[j];
      }
      --x[k];
    }
  }
  return c;
}

}  // namespace

bool is_linear_extension(const OrderIdeal& J, const Extension& order) {
  if (order.size() != J.size()) return false;
  std::vector<std::size_t> at(J.size(), J.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= J.size() || at[order[k]] != J.size()) return false;
    at[order[k]] = k;
  }
  const auto& pts = J.points();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b)
      if (a != b && ChainProduct::leq(pts[a], pts[b]) && at[a] > at[b]) return false;
  return true;
}

std::vector<Extension> linear_extensions(const OrderIdeal& J, std::size_t limit) {
  auto c = covers_of(J);
  std::vector<Extension> out;
  Extension cur;
  std::vector<std::uint32_t> ready;
  for (std::uint32_t i = 0; i < J.size(); ++i)
    if (c.indegree[i] == 0) ready.push_back(i);
  std::function<void()> rec = [&] {
    if (cur.size() == J.size()) {
      if (out.size() >= limit)
        throw SizeLimitError("linear_extensions: more than " + std::to_string(limit) + " extensions");
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < ready.size(); ++r) {
      std::uint32_t v = ready[r];
      ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(r));
      cur.push_back(v);
      std::size_t added = 0;
      for (auto u : c.up[v])
        if (--c.indegree[u] == 0) {
          ready.push_back(u);
          ++added;
        }
      rec();
      for (auto u : c.up[v]) ++c.indegree[u];
      ready.resize(ready.size() - added);
      cur.pop_back();
      ready.insert(ready.begin() + static_cast<std::ptrdiff_t>(r), v);
    }
  };
  rec();
  return out;
}

std::uint64_t count_linear_extensions(const OrderIdeal& J, std::uint64_t limit) {
  if (J.size() > 64) {
    try {
      return linear_extensions(J, static_cast<std::size_t>(limit)).size();
    } catch (const SizeLimitError&) {
      return limit + 1;
    }
  }
  auto c = covers_of(J);
  std::vector<std::uint64_t> down(J.size(), 0);
  for (std::uint32_t i = 0; i < J.size(); ++i)
    for (auto u : c.up[i]) down[u] |= std::uint64_t{1} << i;
  std::uint64_t all = J.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << J.size()) - 1;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  std::function<std::uint64_t(std::uint64_t)> count = [&](std::uint64_t placed) -> std::uint64_t {
    if (placed == all) return 1;
    auto it = memo.find(placed);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < J.size(); ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if ((placed & bit) || (down[i] & ~placed)) continue;
      total += count(placed | bit);
      if (total > limit) {
        total = limit + 1;
        break;
      }
    }
    memo.emplace(placed, total);
    return total;
  };
  return count(0);
}

Extension random_linear_extension(const OrderIdeal& J, std::mt19937_64& rng) {
  auto c = covers_of(J);
  std::vector<std::uint32_t> ready;
  for (std::uint32_t i = 0; i < J.size(); ++i)
    if (c.indegree[i] == 0) ready.push_back(i);
  Extension out;
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    std::size_t r = pick(rng);
    std::uint32_t v = ready[r];
    ready[r] = ready.back();
    ready.pop_back();
    out.push_back(v);
    for (auto u : c.up[v])
      if (--c.indegree[u] == 0) ready.push_back(u);
  }
  return out;
}

void to_json(nlohmann::json& j, const OrderIdeal& J) {
  j = nlohmann::json::object();
  j["degrees"] = J.ambient().degrees();
  j["points"] = J.points();
  j["maxima"] = J.maxima();
}

}  // namespace coxlehmer
