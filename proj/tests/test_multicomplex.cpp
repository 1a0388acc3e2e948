#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "coxlehmer/coxeter.hpp"
#include "coxlehmer/multicomplex.hpp"

using namespace coxlehmer;

namespace {

// Macaulay's theorem through compressed ideals: if S is the set of the last
// h degree-i monomials in lex order, the degree-(i+1) monomials all of whose
// degree-i divisors lie in S number h^<i>.
std::int64_t compressed_growth(std::int64_t h, int i) {
  auto monomials = [](int n, int deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int start, int left) {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int v = start; v < n; ++v) {
        cur.push_back(v);
        rec(v, left - 1);
        cur.pop_back();
      }
    };
    rec(0, deg);
    return out;
  };
  int vars = 1;
  while (static_cast<std::int64_t>(monomials(vars, i).size()) < h) ++vars;
  auto mons = monomials(vars, i);
  std::sort(mons.begin(), mons.end());
  std::set<std::vector<int>> S(mons.end() - h, mons.end());
  std::int64_t count = 0;
  for (auto m : monomials(vars, i + 1)) {
    bool ok = true;
    for (std::size_t k = 0; k < m.size() && ok; ++k) {
      auto d = m;
      d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
      ok = S.count(d) > 0;
    }
    count += ok;
  }
  return count;
}

std::uint64_t brute_extensions(const OrderIdeal& J) {
  std::vector<std::uint32_t> perm(J.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::uint64_t n = 0;
  do {
    n += is_linear_extension(J, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n;
}

}  // namespace

TEST_CASE("closures") {
  ChainProduct b22({2, 2});
  CHECK(OrderIdeal::closure(b22, {{0, 0}}).size() == 1);
  CHECK(OrderIdeal::closure(b22, {{1, 1}}).size() == 4);
  CHECK(OrderIdeal::closure(b22, {{1, 1}}).is_full());
  ChainProduct b23({2, 3});
  auto J = OrderIdeal::closure(b23, {{0, 2}, {1, 1}});
  CHECK(J.size() == 5);
  CHECK(J.maxima() == std::vector<Point>{{0, 2}, {1, 1}});
  CHECK_THROWS_AS(OrderIdeal::closure(b23, {{2, 0}}), std::out_of_range);
  CHECK_THROWS_AS(OrderIdeal::closure(b23, {}), std::invalid_argument);
  CHECK(OrderIdeal::is_order_ideal(b23, J.points()));
  CHECK_FALSE(OrderIdeal::is_order_ideal(b23, {{0, 0}, {0, 2}}));
  CHECK_THROWS_AS(OrderIdeal::from_ideal_points(b23, {{0, 0}, {0, 2}}), std::logic_error);
  CHECK_THROWS_AS(ChainProduct({2, 0}), std::invalid_argument);
}

TEST_CASE("maxima, meets and f-polynomials") {
  CHECK(meet({0, 2, 2}, {2, 0, 2}) == Point{0, 0, 2});
  CHECK(join({0, 2, 2}, {2, 0, 1}) == Point{2, 2, 2});
  ChainProduct box({2, 3});
  auto full = OrderIdeal::full(box);
  CHECK(full.maxima() == std::vector<Point>{box.top()});
  CHECK(full.f_polynomial() == q_analog(2) * q_analog(3));
  CHECK(OrderIdeal::closure(box, {{0, 0}}).f_polynomial() == IntPolynomial(1));

  // J_3412 under the type A code, read off the interval by hand.
  ChainProduct a3({2, 3, 4});
  auto J = OrderIdeal::closure(a3, {{1, 0, 2}, {1, 2, 0}, {0, 2, 2}});
  CHECK(J.size() == 14);
  CHECK(J.f_polynomial() == IntPolynomial{1, 3, 5, 4, 1});
  CHECK(J.maxima().size() == 3);

  for (const auto& I : all_order_ideals(ChainProduct({3, 2, 2}))) {
    CHECK(I.f_polynomial().evaluate(1) == static_cast<std::int64_t>(I.size()));
    for (const auto& x : I.points())
      for (const auto& y : I.points()) {
        auto m = meet(x, y);
        CHECK(I.contains(m));
        CHECK(meet(x, x) == x);
        CHECK(m == meet(y, x));
      }
  }
}

TEST_CASE("ideal counts") {
  CHECK(all_order_ideals(ChainProduct({2, 2})).size() == 5);
  CHECK(all_order_ideals(ChainProduct({2, 2, 2})).size() == 19);
  CHECK(all_order_ideals(ChainProduct({2, 2, 2, 2})).size() == 167);
  // Lattice paths: ideals of [a] x [b] are C(a+b, a), minus the empty one.
  CHECK(all_order_ideals(ChainProduct({3, 4})).size() == 34);
  CHECK_THROWS_AS(all_order_ideals(ChainProduct({2, 2, 2, 2}), 10), SizeLimitError);
  std::mt19937_64 rng(11);
  ChainProduct box({3, 3, 4});
  for (int i = 0; i < 50; ++i) {
    auto J = random_order_ideal(box, rng);
    CHECK(OrderIdeal::is_order_ideal(box, J.points()));
    CHECK(J.contains({0, 0, 0}));
  }
}

TEST_CASE("Macaulay bounds") {
  CHECK(is_m_sequence(std::vector<std::int64_t>{1}));
  CHECK_FALSE(is_m_sequence(std::vector<std::int64_t>{1, 0, 1}));
  CHECK(is_m_sequence(std::vector<std::int64_t>{1, 3, 5, 4, 1}));
  CHECK(is_m_sequence(std::vector<std::int64_t>{1, 2, 3}));
  CHECK_FALSE(is_m_sequence(std::vector<std::int64_t>{1, 2, 4}));
  CHECK_FALSE(is_m_sequence(std::vector<std::int64_t>{2, 1}));
  CHECK_FALSE(is_m_sequence(std::vector<std::int64_t>{}));
  CHECK(macaulay_bound(0, 3) == 0);
  for (int i = 1; i <= 4; ++i)
    for (std::int64_t h = 1; h <= 25; ++h) {
      INFO("h = " << h << ", i = " << i);
      CHECK(macaulay_bound(h, i) == compressed_growth(h, i));
    }
  for (const auto& J : all_order_ideals(ChainProduct({3, 3, 2}))) CHECK(is_m_sequence(J.f_polynomial()));
}

TEST_CASE("linear extensions") {
  auto chain = OrderIdeal::full(ChainProduct({3}));
  CHECK(linear_extensions(chain, 10).size() == 1);
  auto diamond = OrderIdeal::full(ChainProduct({2, 2}));
  CHECK(linear_extensions(diamond, 10).size() == 2);
  CHECK(count_linear_extensions(diamond, 100) == 2);
  for (const auto& J : all_order_ideals(ChainProduct({2, 2, 2}))) {
    auto exts = linear_extensions(J, 10'000);
    CHECK(exts.size() == brute_extensions(J));
    CHECK(count_linear_extensions(J, 10'000) == exts.size());
    for (const auto& e : exts) CHECK(is_linear_extension(J, e));
  }
  // Standard Young tableaux of the 3 x 4 rectangle.
  auto rect = OrderIdeal::full(ChainProduct({3, 4}));
  CHECK(count_linear_extensions(rect, 1'000'000) == 462);
  CHECK(count_linear_extensions(rect, 100) == 101);
  CHECK_THROWS_AS(linear_extensions(rect, 100), SizeLimitError);
  std::mt19937_64 rng(3);
  auto big = OrderIdeal::full(ChainProduct({3, 3, 4}));
  for (int i = 0; i < 20; ++i) CHECK(is_linear_extension(big, random_linear_extension(big, rng)));
  CHECK_FALSE(is_linear_extension(diamond, {3, 1, 2, 0}));
}

TEST_CASE("JSON") {
  nlohmann::json j = OrderIdeal::closure(ChainProduct({2, 3}), {{0, 2}, {1, 1}});
  CHECK(j["points"].size() == 5);
  CHECK(j["maxima"] == nlohmann::json::parse("[[0,2],[1,1]]"));
}
