#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "coxlehmer/schubert.hpp"

using namespace coxlehmer;

namespace {

// L_n(w)_k = #{i < k : w^{-1}(i) > w^{-1}(k)}.
LehmerVector code_by_formula(const Permutation& w) {
  LehmerVector out;
  for (int k = 1; k <= w.size(); ++k) {
    int c = 0;
    for (int i = 1; i < k; ++i) c += w.inverse_at(i) > w.inverse_at(k);
    out.push_back(c);
  }
  return out;
}

// Conjugate by transposing the Young diagram.
Partition transpose(const Partition& p) {
  int top = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
  if (top == 0) return {0};
  Partition out;
  for (int k = 1; k <= top; ++k)
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [&](int x) { return x >= k; })));
  std::sort(out.begin(), out.end());
  return out;
}

// Saturated chains by brute force over all subsets of [n] listed in order.
std::vector<std::uint64_t> brute_chain_counts(const PermPoset& P) {
  int n = P.size();
  auto covers = [&](int a, int b) {
    if (!P.less(a, b)) return false;
    for (int c = 1; c <= n; ++c)
      if (P.less(a, c) && P.less(c, b)) return false;
    return true;
  };
  std::vector<std::uint64_t> rho(static_cast<std::size_t>(n), 0);
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> xs;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) xs.push_back(i + 1);
    bool chain = true;
    for (std::size_t i = 0; i + 1 < xs.size() && chain; ++i) chain = covers(xs[i], xs[i + 1]);
    if (chain) ++rho[xs.size() - 1];
  }
  while (rho.size() > 1 && rho.back() == 0) rho.pop_back();
  return rho;
}

}  // namespace

TEST_CASE("patterns and smoothness") {
  auto p = [](const char* s) { return Permutation::parse(s); };
  CHECK_FALSE(avoids(p("3412"), p("3412")));
  CHECK(avoids(p("2413"), p("3412")));
  CHECK(avoids(Permutation::identity(5), p("21")));
  CHECK_FALSE(is_smooth(p("3412")));
  CHECK_FALSE(is_smooth(p("4231")));
  for (const auto& w : all_permutations(3)) CHECK(is_smooth(w));
  CHECK(smooth_set(4).size() == 22);
  CHECK(smooth_set(5).size() == 88);
}

TEST_CASE("permutation posets") {
  PermPoset e(Permutation::identity(4));
  CHECK(e.hasse_edges().empty());
  CHECK(e.chain_counts() == std::vector<std::uint64_t>{4});
  CHECK_FALSE(e.height());
  PermPoset P(Permutation::parse("321"));
  CHECK(P.chain_counts() == std::vector<std::uint64_t>{3, 2, 1});
  CHECK(P.height() == 2);
  PermPoset Q(Permutation::parse("3412"));
  CHECK(Q.hasse_edges() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK_FALSE(Q.is_forest());
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      PermPoset R(w);
      CHECK(R.chain_counts() == brute_chain_counts(R));
      int relations = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) relations += R.less(i, j);
      CHECK(relations == w.length());
      if (is_smooth(w)) CHECK(R.is_forest());
    }
  CHECK_THROWS_AS(P.less(0, 1), std::out_of_range);
}

TEST_CASE("partitions") {
  CHECK(lambda_of(Permutation::identity(3)) == Partition{0});
  CHECK(lambda_of(Permutation::parse("321")) == Partition{1, 2});
  CHECK(lambda_of(Permutation::parse("2143")) == Partition{2});
  CHECK(exponents_of(Permutation::parse("2143")) == Partition{1, 1});
  CHECK_THROWS_AS(lambda_of(Permutation::parse("3412")), std::invalid_argument);
  CHECK(dual_partition({0}) == Partition{0});
  CHECK(dual_partition({1, 1, 3}) == Partition{1, 1, 3});
  CHECK(dual_partition({2, 3}) == Partition{1, 2, 2});

  // Every partition of n <= 12: the multiplicity rule agrees with the
  // transpose and is an involution.
  std::function<void(int, int, Partition&)> each = [&](int left, int max_part, Partition& cur) {
    if (left == 0) {
      Partition p(cur.rbegin(), cur.rend());
      if (p.empty()) p = {0};
      CHECK(dual_partition(p) == transpose(p));
      CHECK(dual_partition(dual_partition(p)) == p);
      CHECK(partition_size(dual_partition(p)) == partition_size(p));
      return;
    }
    for (int x = std::min(left, max_part); x >= 1; --x) {
      cur.push_back(x);
      each(left - x, x, cur);
      cur.pop_back();
    }
  };
  for (int n = 0; n <= 12; ++n) {
    Partition cur;
    each(n, n, cur);
  }

  // Padded dual partitions of smooth permutations are Fubini words.
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : smooth_set(n)) {
      auto E = exponents_of(w);
      if (part_count(E) == 0) continue;
      std::vector<int> padded{0};
      padded.insert(padded.end(), E.begin(), E.end());
      CHECK(is_fubini(padded));
      CHECK(partition_size(lambda_of(w)) == w.length());
    }
}

TEST_CASE("chain counts on random forests") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    // Random rooted forest drawn upward: node v > 0 may hang below one earlier node.
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int v = 1; v < n; ++v)
      if (rng() % 4 != 0) parent[static_cast<std::size_t>(v)] = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    std::vector<std::uint64_t> rho(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      for (int u = v, k = 0; u != -1; u = parent[static_cast<std::size_t>(u)], ++k) ++rho[static_cast<std::size_t>(k)];
    while (rho.size() > 1 && rho.back() == 0) rho.pop_back();
    for (std::size_t h = 0; h < rho.size(); ++h)
      for (std::size_t k = h + 1; k < rho.size(); ++k) CHECK(rho[h] > rho[k]);
  }
}

TEST_CASE("Fubini words") {
  std::set<std::vector<int>> f3{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 2}};
  auto w3 = lazy_fubini_words(3);
  CHECK(std::set<std::vector<int>>(w3.begin(), w3.end()) == f3);
  std::set<std::vector<int>> f4{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 0},
                                {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}, {0, 1, 2, 0}, {0, 0, 1, 2},
                                {0, 1, 1, 2}, {0, 1, 2, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}};
  auto w4 = lazy_fubini_words(4);
  CHECK(std::set<std::vector<int>>(w4.begin(), w4.end()) == f4);
  CHECK(is_fubini({0, 2, 1, 1}));
  CHECK_FALSE(is_lazy_fubini({0, 2, 1, 1}));
  CHECK_FALSE(is_fubini({0, 2, 2}));
  for (int k = 1; k <= 9; ++k) {
    auto words = lazy_fubini_words(k);
    CHECK(words.size() == catalan(k));
    for (const auto& x : words) CHECK(is_fubini(x));
  }
  CHECK(catalan(7) == 429);
}

TEST_CASE("unimodal permutations and Lambda") {
  auto p = [](const char* s) { return Permutation::parse(s); };
  CHECK(is_unimodal_perm(Permutation::identity(4)));
  CHECK(is_unimodal_perm(p("1342")));
  CHECK_FALSE(is_unimodal_perm(p("3142")));
  for (int n = 1; n <= 8; ++n) {
    auto U = unimodal_perms(n);
    CHECK(U.size() == (std::size_t{1} << (n - 1)));
    for (const auto& u : U) {
      // Unimodal means avoiding 312 and 213.
      CHECK((avoids(u, p("312")) && avoids(u, p("213"))));
      auto lam = Lambda(u);
      CHECK(Lambda_inverse(lam, n) == u);
      CHECK((part_count(lam) == 0 ? 0 : partition_size(lam)) == u.length());
    }
  }
  CHECK(Lambda(Permutation::identity(4)) == Partition{0});
  CHECK(Lambda_inverse({2, 3}, 4) == p("3421"));
  CHECK(p("3421").length() == 5);
  CHECK_THROWS_AS(Lambda(p("3142")), std::invalid_argument);
  CHECK_THROWS_AS(Lambda_inverse({2, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(Lambda_inverse({4}, 4), std::invalid_argument);
}

TEST_CASE("codes of permutations") {
  for (int n = 2; n <= 5; ++n) {
    SymmetricGroup s(n);
    for (Element e : s.group().elements()) {
      auto w = s.permutation(e);
      CHECK(s.L(w) == code_by_formula(w));
    }
  }
  SymmetricGroup s4(4);
  CHECK(s4.L(Permutation::parse("3412")) == LehmerVector{0, 0, 2, 2});
  CHECK_THROWS_AS(SymmetricGroup(1), std::invalid_argument);
}

TEST_CASE("classification reports") {
  std::map<int, std::size_t> principal{{2, 2}, {3, 5}, {4, 14}, {5, 42}, {6, 132}};
  auto s2 = verify_catalan_equivalence(SymmetricGroup(2));
  CHECK(s2.pass());
  CHECK(s2.notes()["principal"] == principal[2]);
  for (int n = 3; n <= 6; ++n) {
    SymmetricGroup s(n);
    auto cat = verify_catalan_equivalence(s);
    INFO(cat.to_text());
    CHECK(cat.pass());
    CHECK(cat.notes()["principal"] == principal[n]);
    CHECK(verify_312_exponents(s).pass());
    auto uni = verify_unimodal_equivalence(s);
    CHECK(uni.pass());
    CHECK(uni.notes()["unimodal"] == (1 << (n - 1)));
    CHECK(verify_smooth_exponents(s).pass());
    auto cls = verify_smooth_classification(s);
    INFO(cls.to_text());
    CHECK(cls.pass());
    CHECK(cls.notes()["smooth_polynomials"] == (1 << (n - 1)));
    for (const auto& u : unimodal_perms(n)) CHECK(verify_annals(s, u).pass());
  }
  SymmetricGroup s4(4);
  // 312-avoiding but not unimodal: lazy code that is not weakly increasing.
  int spot = 0;
  for (const auto& w : all_permutations(4)) {
    if (!avoids(w, Permutation::parse("312")) || is_unimodal_perm(w)) continue;
    auto c = s4.L(w);
    CHECK(is_lazy_fubini(c));
    CHECK_FALSE(is_weakly_increasing(c));
    ++spot;
  }
  CHECK(spot == 6);
}
