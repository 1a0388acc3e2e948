#ifndef COXLEHMER_POLY_HPP
#define COXLEHMER_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace coxlehmer {

/// Polynomial in one variable q with exact integer coefficients.
///
/// Coefficient i is the coefficient of q^i. Trailing zeros are always trimmed,
/// so two polynomials are equal exactly when their coefficient vectors are.
/// Arithmetic is overflow-checked and throws std::overflow_error rather than
/// wrapping.
class IntPolynomial {
 public:
  using Coefficient = std::int64_t;

  IntPolynomial() = default;
  IntPolynomial(Coefficient constant);  // NOLINT(google-explicit-constructor)
  explicit IntPolynomial(std::vector<Coefficient> coeffs);
  IntPolynomial(std::initializer_list<Coefficient> coeffs);

  static IntPolynomial monomial(int degree, Coefficient c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Coefficient coeff(int i) const noexcept;
  const std::vector<Coefficient>& coefficients() const noexcept { return coeffs_; }

  Coefficient evaluate(Coefficient q) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial operator-() const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  /// Total order (degree, then coefficients) so polynomials can key ordered sets.
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

  /// "1 + 3*q + 5*q^2 + 4*q^3 + q^4"
  std::string to_string() const;

 private:
  void trim() noexcept;

  std::vector<Coefficient> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// [n]_q = 1 + q + ... + q^(n-1). Throws std::invalid_argument for n < 1.
IntPolynomial q_analog(int n);

/// Product of [n_i]_q over the given list; the empty product is 1.
IntPolynomial q_analog_product(std::span<const int> ns);

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial scalar(const IntPolynomial& a, IntPolynomial::Coefficient c);

/// coeff(i) == coeff(top_degree - i) for 0 <= i <= top_degree.
/// Throws for the zero polynomial or when top_degree < degree(p).
bool is_palindromic(const IntPolynomial& p, int top_degree);

/// JSON form is the coefficient array, e.g. [1,3,5,4,1]; zero is [].
void to_json(nlohmann::json& j, const IntPolynomial& p);
void from_json(const nlohmann::json& j, IntPolynomial& p);

namespace detail {
IntPolynomial::Coefficient checked_add(IntPolynomial::Coefficient a, IntPolynomial::Coefficient b);
IntPolynomial::Coefficient checked_mul(IntPolynomial::Coefficient a, IntPolynomial::Coefficient b);
}  // namespace detail

}  // namespace coxlehmer

template <>
struct std::hash<coxlehmer::IntPolynomial> {
  std::size_t operator()(const coxlehmer::IntPolynomial& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto c : p.coefficients()) {
      h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

#endif  // COXLEHMER_POLY_HPP
