#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxlehmer/coxeter.hpp"
#include "coxlehmer/simplicial.hpp"

using namespace coxlehmer;

namespace {

std::vector<std::size_t> extension_order(const SimplicialComplex&, const Extension& e) {
  return std::vector<std::size_t>(e.begin(), e.end());
}

}  // namespace

TEST_CASE("facets of M-complexes") {
  auto F = facet_of({1, 2, 2}, {3, 3, 4});
  std::vector<Vertex> want{{1, 1}, {2, 1}, {1, 2}, {3, 2}, {1, 3}, {2, 3}, {4, 3}};
  CHECK(F == want);
  CHECK(facet_of({1}, {2}) == std::vector<Vertex>{{1, 1}});
  CHECK_THROWS_AS(facet_of({3}, {2}), std::out_of_range);

  auto m22 = build_M({2, 2});
  CHECK(m22.facet_count() == 4);
  auto trivial = build_M({1, 1, 1});
  CHECK(trivial.facet_count() == 1);
  CHECK(trivial.dimension() == -1);
  CHECK(trivial.facets().front().none());
  auto m23 = build_M({2, 3});
  CHECK(m23.dimension() == 2);
  CHECK(m23.facet_count() == 6);
  CHECK(m23.is_pure());
  auto m334 = build_M({3, 3, 4});
  CHECK(m334.dimension() == 6);
  CHECK(m334.facet_count() == 36);
  CHECK(is_balanced(m334, coordinate_coloring(m334), {2, 2, 3}));
  CHECK_FALSE(is_balanced(m334, coordinate_coloring(m334), {3, 2, 2}));
}

TEST_CASE("f and h vectors") {
  auto empty = build_M({1});
  CHECK(empty.f_vector() == std::vector<std::int64_t>{1});
  CHECK(h_from_f({1}) == std::vector<std::int64_t>{1});
  auto triangle = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.f_vector() == std::vector<std::int64_t>{1, 3, 3});
  CHECK(h_from_f(triangle.f_vector()) == std::vector<std::int64_t>{1, 1, 1});
  auto m23 = build_M({2, 3});
  CHECK(h_from_f(m23.f_vector()) == std::vector<std::int64_t>{1, 2, 2, 1});
  for (const auto& f : std::vector<std::vector<std::int64_t>>{{1, 5, 7, 3}, {1, 9, 20, 12}, {1}})
    CHECK(f_from_h(h_from_f(f)) == f);
  auto simplex = SimplicialComplex::from_facets(4, {{0, 1, 2, 3}});
  CHECK(h_from_f(simplex.f_vector()) == std::vector<std::int64_t>{1, 0, 0, 0, 0});
}

TEST_CASE("shellings") {
  auto one = SimplicialComplex::from_facets(3, {{0, 1, 2}});
  auto r = verify_shelling(one, {0});
  CHECK(r.ok);
  CHECK(r.h_vector == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(r.restrictions.front().none());

  ChainProduct box({2, 3});
  auto J = OrderIdeal::full(box);
  auto m = build_M_of_ideal(J);
  for (const auto& e : linear_extensions(J, 1000)) {
    auto s = verify_shelling(m, extension_order(m, e));
    CHECK(s.ok);
    CHECK(s.h_vector == std::vector<std::int64_t>{1, 2, 2, 1});
  }

  // Path a-b-c-d: starting with the two end edges is not a shelling.
  auto path = SimplicialComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}});
  auto bad = verify_shelling(path, {0, 2, 1});
  CHECK_FALSE(bad.ok);
  CHECK(bad.violation == std::size_t{1});
  CHECK(verify_shelling(path, {0, 1, 2}).ok);
  CHECK_THROWS_AS(verify_shelling(path, {0, 1}), std::invalid_argument);
  auto mixed = SimplicialComplex::from_facets(3, {{0, 1}, {2}});
  CHECK_THROWS_AS(verify_shelling(mixed, {0, 1}), std::invalid_argument);
}

TEST_CASE("shelling h-vectors of small ideals") {
  for (const auto& d : std::vector<std::vector<int>>{{2, 3}, {2, 2, 2}}) {
    for (const auto& J : all_order_ideals(ChainProduct(d))) {
      auto m = build_M_of_ideal(J);
      auto f = J.f_polynomial().coefficients();
      auto h = h_from_f(m.f_vector());
      auto fpad = f;
      fpad.resize(h.size(), 0);
      CHECK(h == fpad);
      for (const auto& e : linear_extensions(J, 10'000)) {
        auto s = verify_shelling(m, extension_order(m, e));
        CHECK(s.ok);
        CHECK(s.h_vector == h);
      }
    }
  }
}

TEST_CASE("vertex decomposability") {
  CHECK(is_vertex_decomposable(SimplicialComplex::from_facets(3, {{0, 1, 2}})));
  CHECK(is_vertex_decomposable(build_M({1, 1})));
  CHECK_FALSE(is_vertex_decomposable(SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}})));
  CHECK(is_vertex_decomposable(SimplicialComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}})));
  for (const auto& J : all_order_ideals(ChainProduct({2, 2}))) CHECK(is_vertex_decomposable(build_M_of_ideal(J)));
  CHECK_THROWS_AS(is_vertex_decomposable(build_M({3, 3, 4})), SizeLimitError);
  CHECK(is_vertex_decomposable(build_M({3, 3, 4}), 40));
}

TEST_CASE("flag complexes") {
  CHECK(is_flag(SimplicialComplex::from_facets(3, {{0, 1, 2}})));
  CHECK_FALSE(is_flag(SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(is_flag(SimplicialComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  for (int k : {3, 4}) {
    ChainProduct box(std::vector<int>(static_cast<std::size_t>(k), 2));
    for (const auto& J : all_order_ideals(box)) CHECK(is_flag(build_M_of_ideal(J)) == is_flag_ideal(J));
  }
  CHECK_THROWS_AS(is_flag_ideal(OrderIdeal::full(ChainProduct({3, 2}))), std::invalid_argument);
}

TEST_CASE("thin and subthin") {
  for (const auto& d : std::vector<std::vector<int>>{{2, 3}, {2, 2, 2}, {3, 3}}) {
    ChainProduct box(d);
    for (const auto& J : all_order_ideals(box)) {
      auto m = build_M_of_ideal(J);
      if (J.size() == 1) {
        CHECK_THROWS_AS(thinness(m), std::invalid_argument);
        continue;
      }
      CHECK(thinness(m) == (J.is_full() ? Thinness::Thin : Thinness::Subthin));
    }
  }
  auto star = SimplicialComplex::from_facets(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(thinness(star) == Thinness::Neither);
}

TEST_CASE("link, deletion and JSON") {
  auto path = SimplicialComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(path.link(1).facet_count() == 2);
  CHECK(path.deletion(1).facet_count() == 2);
  CHECK_FALSE(path.deletion(1).is_pure());
  CHECK(path.deletion(0).is_pure());
  auto m = build_M_of_ideal(OrderIdeal::closure(ChainProduct({2, 3}), {{0, 2}, {1, 1}}));
  nlohmann::json j = m;
  CHECK(j["dim"] == 2);
  CHECK(j["vertices"].size() == 5);
  CHECK(j["facets"].size() == 5);
  CHECK(j["labels"][0] == nlohmann::json::array({1, 1}));
}
