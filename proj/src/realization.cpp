#include "realization.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace coxlehmer::detail {
namespace {

int sign(std::int32_t v) { return v < 0 ? -1 : 1; }

/// Permutations of [n+1] in one-line notation; generator i is s_{i+1}.
class SymmetricRealization final : public Realization {
 public:
  explicit SymmetricRealization(int rank) : rank_(rank) {}
  CanonicalForm identity() const override {
    CanonicalForm f(static_cast<std::size_t>(rank_) + 1);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<std::int32_t>(i + 1);
    return f;
  }
  CanonicalForm right(const CanonicalForm& w, int s) const override {
    CanonicalForm r = w;
    std::swap(r[static_cast<std::size_t>(s)], r[static_cast<std::size_t>(s) + 1]);
    return r;
  }
  CanonicalForm left(const CanonicalForm& w, int s) const override {
    CanonicalForm r = w;
    for (auto& v : r) {
      if (v == s + 1) v = s + 2;
      else if (v == s + 2) v = s + 1;
    }
    return r;
  }

 private:
  int rank_;
};

/// Signed permutations. Generator 0 (s1) negates position 1; generator i >= 1
/// swaps positions i and i+1.
class HyperoctahedralRealization final : public Realization {
 public:
  explicit HyperoctahedralRealization(int rank) : rank_(rank) {}
  CanonicalForm identity() const override {
    CanonicalForm f(static_cast<std::size_t>(rank_));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<std::int32_t>(i + 1);
    return f;
  }
  CanonicalForm right(const CanonicalForm& w, int s) const override {
    CanonicalForm r = w;
    if (s == 0) {
      r[0] = -r[0];
    } else {
      std::swap(r[static_cast<std::size_t>(s) - 1], r[static_cast<std::size_t>(s)]);
    }
    return r;
  }
  CanonicalForm left(const CanonicalForm& w, int s) const override {
    CanonicalForm r = w;
    for (auto& v : r) {
      int a = v < 0 ? -v : v;
      if (s == 0) {
        if (a == 1) v = -v;
      } else if (a == s) {
        v = sign(v) * (s + 1);
      } else if (a == s + 1) {
        v = sign(v) * s;
      }
    }
    return r;
  }

 private:
  int rank_;
};

/// Even-signed permutations. Generator i >= 1 swaps positions i and i+1;
/// generator 0 sends [w1, w2, ...] to [-w2, -w1, ...].
class EvenSignedRealization final : public Realization {
 public:
  explicit EvenSignedRealization(int rank) : rank_(rank) {}
  CanonicalForm identity() const override {
    CanonicalForm f(static_cast<std::size_t>(rank_));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<std::int32_t>(i + 1);
    return f;
  }
  CanonicalForm right(const CanonicalForm& w, int s) const override {
    CanonicalForm r = w;
    if (s == 0) {
      r[0] = -w[1];
      r[1] = -w[0];
    } else {
      std::swap(r[static_cast<std::size_t>(s) - 1], r[static_cast<std::size_t>(s)]);
    }
    return r;
  }
  CanonicalForm left(const CanonicalForm& w, int s) const override {
    CanonicalForm r = w;
    for (auto& v : r) {
      int a = v < 0 ? -v : v;
      if (s == 0) {
        if (a == 1 || a == 2) v = -sign(v) * (3 - a);
      } else if (a == s) {
        v = sign(v) * (s + 1);
      } else if (a == s + 1) {
        v = sign(v) * s;
      }
    }
    return r;
  }

 private:
  int rank_;
};

/// Element a + b*phi of Z[phi], phi^2 = phi + 1.
struct GoldenInt {
  std::int32_t a = 0;
  std::int32_t b = 0;
  GoldenInt operator+(GoldenInt o) const { return {a + o.a, b + o.b}; }
  GoldenInt operator-(GoldenInt o) const { return {a - o.a, b - o.b}; }
  GoldenInt operator*(GoldenInt o) const { return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b}; }
};

using Matrix3 = std::array<std::array<GoldenInt, 3>, 3>;

/// Geometric representation of H3 on the root basis; forms are the nine
/// matrix entries as (a, b) pairs in row-major order.
class IcosahedralRealization final : public Realization {
 public:
  explicit IcosahedralRealization(const CoxeterSystem& system) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        GoldenInt c;
        int m = system.coxeter_matrix[i][j];
        if (i == j) c = {2, 0};
        else if (m == 3) c = {-1, 0};
        else if (m == 5) c = {0, -1};
        else if (m != 2) throw std::invalid_argument("H3 realization: unexpected Coxeter matrix entry");
        // Row i of the reflection s_i is e_i - c_i; other rows are unchanged.
        for (int r = 0; r < 3; ++r) {
          GoldenInt id = (r == j) ? GoldenInt{1, 0} : GoldenInt{0, 0};
          gens_[i][r][j] = (r == i) ? id - c : id;
        }
      }
    }
  }
  CanonicalForm identity() const override {
    Matrix3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = {1, 0};
    return encode(m);
  }
  CanonicalForm right(const CanonicalForm& w, int s) const override { return encode(mul(decode(w), gens_[s])); }
  CanonicalForm left(const CanonicalForm& w, int s) const override { return encode(mul(gens_[s], decode(w))); }

 private:
  static Matrix3 mul(const Matrix3& x, const Matrix3& y) {
    Matrix3 r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + x[i][k] * y[k][j];
    return r;
  }
  static CanonicalForm encode(const Matrix3& m) {
    CanonicalForm f;
    f.reserve(18);
    for (const auto& row : m)
      for (const auto& e : row) {
        f.push_back(e.a);
        f.push_back(e.b);
      }
    return f;
  }
  static Matrix3 decode(const CanonicalForm& f) {
    Matrix3 m{};
    for (std::size_t k = 0; k < 9; ++k) m[k / 3][k % 3] = {f[2 * k], f[2 * k + 1]};
    return m;
  }

  std::array<Matrix3, 3> gens_{};
};

/// Dihedral group I2(m): form (first letter, length) of the alternating
/// reduced word; e is (0, 0) and w0 is (0, m).
class DihedralRealization final : public Realization {
 public:
  explicit DihedralRealization(int m) : m_(m) {}
  CanonicalForm identity() const override { return {0, 0}; }
  CanonicalForm right(const CanonicalForm& w, int g) const override {
    int f = w[0], l = w[1];
    if (l == 0) return normalize(g, 1);
    if (l == m_) return normalize(m_ % 2 == 1 ? g : 1 - g, m_ - 1);
    int last = (l % 2 == 1) ? f : 1 - f;
    if (last == g) return normalize(f, l - 1);
    return normalize(f, l + 1);
  }
  CanonicalForm left(const CanonicalForm& w, int g) const override {
    int f = w[0], l = w[1];
    if (l == 0) return normalize(g, 1);
    if (l == m_) return normalize(1 - g, m_ - 1);
    if (f == g) return normalize(1 - f, l - 1);
    return normalize(g, l + 1);
  }

 private:
  CanonicalForm normalize(int f, int l) const {
    if (l == 0 || l == m_) return {0, l};
    return {f, l};
  }
  int m_;
};

class ProductRealization final : public Realization {
 public:
  ProductRealization(std::unique_ptr<Realization> a, std::unique_ptr<Realization> b, int rank_a)
      : a_(std::move(a)), b_(std::move(b)), rank_a_(rank_a), size_a_(a_->form_size()) {}
  CanonicalForm identity() const override { return join(a_->identity(), b_->identity()); }
  CanonicalForm right(const CanonicalForm& w, int s) const override {
    auto [x, y] = split(w);
    if (s < rank_a_) return join(a_->right(x, s), y);
    return join(x, b_->right(y, s - rank_a_));
  }
  CanonicalForm left(const CanonicalForm& w, int s) const override {
    auto [x, y] = split(w);
    if (s < rank_a_) return join(a_->left(x, s), y);
    return join(x, b_->left(y, s - rank_a_));
  }

 private:
  std::pair<CanonicalForm, CanonicalForm> split(const CanonicalForm& w) const {
    auto mid = w.begin() + static_cast<std::ptrdiff_t>(size_a_);
    return {CanonicalForm(w.begin(), mid), CanonicalForm(mid, w.end())};
  }
  static CanonicalForm join(CanonicalForm x, const CanonicalForm& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  }
  std::unique_ptr<Realization> a_;
  std::unique_ptr<Realization> b_;
  int rank_a_;
  std::size_t size_a_;
};

}  // namespace

std::unique_ptr<Realization> make_realization(const CoxeterSystem& system) {
  switch (system.type) {
    case CoxeterType::A: return std::make_unique<SymmetricRealization>(system.rank);
    case CoxeterType::B: return std::make_unique<HyperoctahedralRealization>(system.rank);
    case CoxeterType::D: return std::make_unique<EvenSignedRealization>(system.rank);
    case CoxeterType::H3: return std::make_unique<IcosahedralRealization>(system);
    case CoxeterType::I2: return std::make_unique<DihedralRealization>(system.dihedral_m);
    case CoxeterType::Product:
      return std::make_unique<ProductRealization>(make_realization(system.factors.at(0)),
                                                  make_realization(system.factors.at(1)),
                                                  system.factors.at(0).rank);
  }
  throw std::invalid_argument("unknown Coxeter type");
}

}  // namespace coxlehmer::detail
