#include "coxlehmer/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxlehmer {

namespace detail {

IntPolynomial::Coefficient checked_add(IntPolynomial::Coefficient a, IntPolynomial::Coefficient b) {
  IntPolynomial::Coefficient r{};
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow in addition");
  return r;
}

IntPolynomial::Coefficient checked_mul(IntPolynomial::Coefficient a, IntPolynomial::Coefficient b) {
  IntPolynomial::Coefficient r{};
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow in multiplication");
  return r;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

IntPolynomial::IntPolynomial(Coefficient constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs) { trim(); }

IntPolynomial IntPolynomial::monomial(int degree, Coefficient c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
  std::vector<Coefficient> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::Coefficient IntPolynomial::coeff(int i) const noexcept {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial::Coefficient IntPolynomial::evaluate(Coefficient q) const {
  Coefficient acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, q), *it);
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) { return *this += -rhs; }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Coefficient> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs_ < b.coeffs_;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Coefficient c = coeffs_[i];
    if (c == 0) continue;
    Coefficient mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

IntPolynomial q_analog(int n) {
  if (n < 1) throw std::invalid_argument("q-analog [n]_q requires n >= 1, got " + std::to_string(n));
  return IntPolynomial(std::vector<IntPolynomial::Coefficient>(static_cast<std::size_t>(n), 1));
}

IntPolynomial q_analog_product(std::span<const int> ns) {
  IntPolynomial p(1);
  for (int n : ns) p *= q_analog(n);
  return p;
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }
IntPolynomial scalar(const IntPolynomial& a, IntPolynomial::Coefficient c) { return a * IntPolynomial(c); }

bool is_palindromic(const IntPolynomial& p, int top_degree) {
  if (p.is_zero()) throw std::invalid_argument("is_palindromic: zero polynomial");
  if (top_degree < p.degree()) throw std::invalid_argument("is_palindromic: top_degree below degree");
  for (int i = 0; i <= top_degree; ++i) {
    if (p.coeff(i) != p.coeff(top_degree - i)) return false;
  }
  return true;
}

void to_json(nlohmann::json& j, const IntPolynomial& p) { j = p.coefficients(); }

void from_json(const nlohmann::json& j, IntPolynomial& p) {
  p = IntPolynomial(j.get<std::vector<IntPolynomial::Coefficient>>());
}

}  // namespace coxlehmer
