#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "coxlehmer/lehmer.hpp"

using namespace coxlehmer;

namespace {

GroupPtr group_of(CoxeterType t, int rank, int m = 0) { return CoxeterGroup::enumerate(build_system(t, rank, m)); }

// Bruhat automorphisms by backtracking over bijections that preserve <= in
// both directions.
std::vector<std::vector<std::uint32_t>> bruhat_automorphisms(const BruhatOrder& b) {
  std::size_t n = b.size();
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> image(n);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      out.push_back(image);
      return;
    }
    for (std::uint32_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        ok = b.leq(Element(static_cast<std::uint32_t>(j)), Element(static_cast<std::uint32_t>(k))) ==
                 b.leq(Element(image[j]), Element(c)) &&
             b.leq(Element(static_cast<std::uint32_t>(k)), Element(static_cast<std::uint32_t>(j))) ==
                 b.leq(Element(c), Element(image[j]));
      }
      if (!ok) continue;
      used[c] = 1;
      image[k] = c;
      extend(k + 1);
      used[c] = 0;
    }
  };
  extend(0);
  return out;
}

}  // namespace

TEST_CASE("type A quotient code") {
  auto a3 = group_of(CoxeterType::A, 3);
  auto L = code_A(a3);
  CHECK(L.bounds() == std::vector<int>{1, 2, 3});
  CHECK(L(a3->apply_label_word(std::vector<int>{2, 1, 3, 2})) == LehmerVector{0, 2, 2});
  CHECK(L(a3->identity()) == LehmerVector{0, 0, 0});
  CHECK(L(a3->longest()) == LehmerVector{1, 2, 3});
  CHECK(a3->format(a3->longest()) == "4321");
  CHECK(L.decode({0, 2, 2}) == a3->parse("3412"));
  CHECK(format_vector(L(a3->longest())) == "(1,2,3)");
  CHECK_THROWS_AS(code_B(a3), std::invalid_argument);
}

TEST_CASE("inversion code agrees with the quotient code") {
  auto w = Permutation::parse("3412");
  CHECK(code_A_inversions(w) == LehmerVector{0, 0, 2, 2});
  CHECK(code_A_inversions(Permutation::identity(5)) == LehmerVector(5, 0));
  for (int n = 2; n <= 6; ++n) {
    auto g = group_of(CoxeterType::A, n - 1);
    auto L = code_A(g);
    std::size_t agree = 0;
    for (const auto& p : all_permutations(n)) {
      Element e = from_permutation(*g, p);
      CHECK(to_permutation(*g, e) == p);
      agree += code_A_inversions(p) == code_L_n(L, e);
    }
    CHECK(agree == g->size());
  }
}

TEST_CASE("classic Lehmer code and the conjugated dual") {
  CHECK(classic_lehmer(Permutation::parse("4321")) == LehmerVector{3, 2, 1, 0});
  CHECK(classic_lehmer(Permutation::identity(4)) == LehmerVector(4, 0));
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> rev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rev[static_cast<std::size_t>(i)] = n - i;
    Permutation w0(rev);
    for (const auto& w : all_permutations(n)) {
      auto lhs = classic_lehmer(w);
      auto rhs = code_A_inversions(w0 * w.inverse() * w0);
      for (int i = 1; i <= n; ++i)
        CHECK(lhs[static_cast<std::size_t>(i) - 1] == rhs[static_cast<std::size_t>(n - i)]);
    }
  }
}

TEST_CASE("dihedral code") {
  auto g = group_of(CoxeterType::I2, 2, 4);
  auto L = code_I2(g);
  CHECK(L(g->identity()) == LehmerVector{0, 0});
  CHECK(L(g->longest()) == LehmerVector{1, 3});
  for (int m = 3; m <= 10; ++m) {
    auto gm = group_of(CoxeterType::I2, 2, m);
    auto b = BruhatOrder::build(gm);
    CHECK(verify_code(code_I2(gm), *b).pass());
  }
}

TEST_CASE("type B code") {
  auto b2 = group_of(CoxeterType::B, 2);
  auto L = code_B(b2);
  CHECK(L.bounds() == std::vector<int>{1, 3});
  CHECK(L(b2->parse("s2s1s2")) == LehmerVector{0, 3});
  auto b3 = group_of(CoxeterType::B, 3);
  CHECK(code_B(b3).bounds() == std::vector<int>{1, 3, 5});
  CHECK(code_B(b3)(b3->longest()) == LehmerVector{1, 3, 5});
}

TEST_CASE("type D code") {
  auto d4 = group_of(CoxeterType::D, 4);
  auto L = code_D(d4);
  CHECK(L.bounds() == std::vector<int>{1, 3, 5, 3});
  CHECK(L(d4->identity()) == LehmerVector{0, 0, 0, 0});
  CHECK(L(d4->longest()) == LehmerVector{1, 3, 5, 3});
  for (int n : {4, 5, 6}) {
    auto g = group_of(CoxeterType::D, n);
    for (int i = 1; i < n; ++i) CHECK(chain_elements(*g, "X" + std::to_string(i)).size() == static_cast<std::size_t>(2 * i));
    CHECK(chain_elements(*g, "Y" + std::to_string(n)).size() == static_cast<std::size_t>(n));
    CHECK(chain_elements(*g, "Y" + std::to_string(n - 1)).size() == static_cast<std::size_t>(n - 1));
    auto b = BruhatOrder::build(g);
    CHECK(verify_chains(*g, *b).pass());
    CHECK_NOTHROW(code_D(g));
  }
  CHECK_THROWS_AS(chain_words("D7"), std::out_of_range);
}

TEST_CASE("type D structure") {
  for (int n : {4, 5}) {
    auto g = group_of(CoxeterType::D, n);
    auto r = verify_D_factorization(*g);
    CHECK(r.pass());
    CHECK(r.children().at(0).notes()["lhs_size"] == (n - 1) * 2 * n);
    CHECK(r.children().at(0).notes()["rhs_size"] == (n - 1) * 2 * n);
  }
}

TEST_CASE("H3 code and structure") {
  auto h3 = group_of(CoxeterType::H3, 3);
  auto L = code_H3(h3);
  CHECK(L(h3->identity()) == LehmerVector{0, 0, 0});
  CHECK(L(h3->longest()) == LehmerVector{1, 5, 9});
  auto b = BruhatOrder::build(h3);
  CHECK(verify_chains(*h3, *b).pass());
  CHECK(verify_code(L, *b).pass());
  auto r = verify_H3_quotients(*h3);
  CHECK(r.pass());
  CHECK(r.notes()["Y+Z"] == 12);
  CHECK(r.notes()["max_quotient_size"] == 20);
  CHECK(chain_elements(*h3, "X").size() == 10);
}

TEST_CASE("every shipped code and its dual is valid") {
  std::vector<GroupPtr> groups;
  for (int n = 1; n <= 5; ++n) groups.push_back(group_of(CoxeterType::A, n));
  for (int n = 2; n <= 4; ++n) groups.push_back(group_of(CoxeterType::B, n));
  for (int n : {4, 5}) groups.push_back(group_of(CoxeterType::D, n));
  groups.push_back(group_of(CoxeterType::H3, 3));
  for (const auto& g : groups) {
    auto b = BruhatOrder::build(g);
    auto L = default_code(g);
    auto r = verify_code(L, *b);
    INFO(r.to_text());
    CHECK(r.pass());
    auto d = dual_code(L);
    CHECK(d.name() == "dual-" + L.name());
    CHECK(verify_code(d, *b).pass());
    auto dd = dual_code(d);
    CHECK(dd.name() == L.name());
    CHECK(dd.table() == L.table());
    if (g->multiply(g->longest(), g->longest()) == g->identity()) CHECK(d(g->longest()) == L(g->longest()));
  }
}

TEST_CASE("alternate B code is valid") {
  for (int n = 2; n <= 4; ++n) {
    auto g = group_of(CoxeterType::B, n);
    auto b = BruhatOrder::build(g);
    auto L = code_B_tilde(g);
    CHECK(L.experimental());
    auto r = verify_code(L, *b);
    CHECK(r.pass());
    CHECK(verify_code(dual_code(L), *b).pass());
  }
}

TEST_CASE("product code") {
  auto a1 = group_of(CoxeterType::A, 1);
  auto sys = build_system(CoxeterType::A, 1);
  auto p = enumerate_product(sys, sys);
  auto L = product_code(p, code_A(a1), code_A(a1));
  CHECK(L.bounds() == std::vector<int>{1, 1});
  CHECK(L(p->identity()) == LehmerVector{0, 0});

  auto a2sys = build_system(CoxeterType::A, 2);
  auto a21 = enumerate_product(a2sys, sys);
  auto L21 = default_code(a21);
  CHECK(L21.bounds() == std::vector<int>{1, 2, 1});
  auto b = BruhatOrder::build(a21);
  CHECK(verify_code(L21, *b).pass());
  CHECK_THROWS_AS(product_code(a21, code_A(a1), code_A(a1)), std::invalid_argument);
}

TEST_CASE("enumerated dihedral codes") {
  for (int m : {3, 4}) {
    auto g = group_of(CoxeterType::I2, 2, m);
    auto b = BruhatOrder::build(g);
    CHECK(enumerate_dihedral_codes(g, *b).size() == (std::size_t{1} << (m - 1)));
  }
  for (int m = 3; m <= 5; ++m) {
    auto g = group_of(CoxeterType::I2, 2, m);
    auto b = BruhatOrder::build(g);
    auto autos = bruhat_automorphisms(*b);
    CHECK(autos.size() == (std::size_t{1} << (m - 1)));
    std::set<std::vector<std::uint32_t>> aut(autos.begin(), autos.end());
    auto L = code_I2(g);
    auto codes = enumerate_dihedral_codes(g, *b);
    CHECK(codes.size() == autos.size());
    for (const auto& c : codes) {
      std::vector<std::uint32_t> sigma(g->size());
      for (Element w : g->elements()) sigma[w.index()] = L.decode(c(w)).index();
      CHECK(aut.count(sigma) == 1);
    }
  }
  auto big = group_of(CoxeterType::I2, 2, 9);
  auto bb = BruhatOrder::build(big);
  CHECK_THROWS_AS(enumerate_dihedral_codes(big, *bb), SizeLimitError);
}

TEST_CASE("a corrupted table is rejected with a witness") {
  auto g = group_of(CoxeterType::A, 3);
  auto b = BruhatOrder::build(g);
  auto L = code_A(g);
  bool found = false;
  for (Element u : g->elements()) {
    for (Element w : g->elements()) {
      if (u >= w || g->length(u) != g->length(w)) continue;
      auto table = L.table();
      std::swap(table[u.index()], table[w.index()]);
      LehmerCode bad(g, "corrupted", L.bounds(), table);
      auto r = verify_code(bad, *b);
      if (!r.pass()) {
        found = true;
        CHECK(r.children().at(0).pass());
        CHECK(r.children().at(1).pass());
        CHECK_FALSE(r.children().at(2).pass());
        CHECK_FALSE(r.children().at(2).witnesses().empty());
        break;
      }
    }
    if (found) break;
  }
  CHECK(found);

  auto table = L.table();
  table[1] = table[0];
  LehmerCode dup(g, "duplicate", L.bounds(), table);
  auto r = verify_code(dup, *b);
  CHECK_FALSE(r.children().at(0).pass());
  CHECK_FALSE(r.children().at(1).pass());
  CHECK_THROWS_AS(dup.decode(L(Element(1))), std::out_of_range);
  CHECK_THROWS_AS(L.decode({2, 0, 0}), std::out_of_range);
}

TEST_CASE("codes by name and JSON") {
  auto g = group_of(CoxeterType::B, 2);
  CHECK(code_by_name(g, "dual-LB").name() == "dual-LB");
  CHECK(code_by_name(g, "LBtilde").experimental());
  for (int n = 2; n <= 5; ++n) {
    auto gn = group_of(CoxeterType::B, n);
    CHECK(verify_code(code_by_name(gn, "LBtilde"), *BruhatOrder::build(gn)).pass());
  }
  CHECK_THROWS_AS(code_by_name(g, "LX"), std::invalid_argument);
  nlohmann::json j = code_by_name(g, "LB");
  CHECK(j["bounds"] == nlohmann::json::array({1, 3}));
  CHECK(j["table"]["[1,2]"] == nlohmann::json::array({0, 0}));
  CHECK(j["table"].size() == 8);
}
