#include <doctest.h>

#include <random>

#include "coxlehmer/poly.hpp"

using coxlehmer::IntPolynomial;

TEST_CASE("q-analogs") {
  CHECK(coxlehmer::q_analog(1) == IntPolynomial(1));
  CHECK(coxlehmer::q_analog(4) == IntPolynomial{1, 1, 1, 1});
  CHECK(coxlehmer::q_analog(3) * coxlehmer::q_analog(2) == IntPolynomial{1, 2, 2, 1});
  CHECK_THROWS_AS(coxlehmer::q_analog(0), std::invalid_argument);
  CHECK_THROWS_AS(coxlehmer::q_analog(-3), std::invalid_argument);
}

TEST_CASE("ring operations") {
  IntPolynomial p{1, 1};
  CHECK(coxlehmer::add(p, IntPolynomial()) == p);
  CHECK(coxlehmer::multiply(p, IntPolynomial(1)) == p);
  CHECK(coxlehmer::multiply(p, IntPolynomial{1, 1, 1}) == IntPolynomial{1, 2, 2, 1});
  CHECK(coxlehmer::scalar(p, 3) == IntPolynomial{3, 3});
  CHECK(coxlehmer::scalar(p, 0).is_zero());
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPolynomial::monomial(3, -2) == IntPolynomial{0, 0, 0, -2});
}

TEST_CASE("palindromicity") {
  CHECK_FALSE(coxlehmer::is_palindromic(IntPolynomial{1, 3, 5, 4, 1}, 4));
  CHECK(coxlehmer::is_palindromic(IntPolynomial(1), 0));
  CHECK(coxlehmer::is_palindromic(IntPolynomial{1, 2, 2, 1}, 3));
  CHECK_FALSE(coxlehmer::is_palindromic(IntPolynomial{1, 2, 2, 1}, 4));
  CHECK_THROWS_AS(coxlehmer::is_palindromic(IntPolynomial(), 0), std::invalid_argument);
  CHECK_THROWS_AS(coxlehmer::is_palindromic(IntPolynomial{1, 1}, 0), std::invalid_argument);
}

TEST_CASE("products of q-analogs evaluate to products of integers") {
  for (int m = 1; m <= 20; ++m)
    for (int n = 1; n <= 20; ++n)
      CHECK(coxlehmer::multiply(coxlehmer::q_analog(m), coxlehmer::q_analog(n)).evaluate(1) == m * n);
}

TEST_CASE("products of q-analogs are palindromic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 6), part(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> ns(static_cast<std::size_t>(len(rng)));
    int top = 0;
    for (auto& n : ns) {
      n = part(rng);
      top += n - 1;
    }
    CHECK(coxlehmer::is_palindromic(coxlehmer::q_analog_product(ns), top));
  }
}

TEST_CASE("rendering") {
  CHECK(IntPolynomial{1, 3, 5, 4, 1}.to_string() == "1 + 3*q + 5*q^2 + 4*q^3 + q^4");
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial{0, -1, 2}.to_string() == "-q + 2*q^2");
  nlohmann::json j = IntPolynomial{1, 3, 5, 4, 1};
  CHECK(j.dump() == "[1,3,5,4,1]");
  CHECK(j.get<IntPolynomial>() == IntPolynomial{1, 3, 5, 4, 1});
}

TEST_CASE("overflow is detected") {
  IntPolynomial big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * IntPolynomial(4), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}
