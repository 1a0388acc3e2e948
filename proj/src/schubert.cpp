#include "coxlehmer/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coxlehmer/intervals.hpp"

namespace coxlehmer {

std::string format_partition(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

int part_count(const Partition& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int x) { return x > 0; }));
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition dual_partition(const Partition& p) {
  std::vector<int> parts;
  for (int x : p)
    if (x > 0) parts.push_back(x);
  if (parts.empty()) return {0};
  std::sort(parts.begin(), parts.end());
  int r = static_cast<int>(parts.size());
  auto lam = [&](int i) { return i == 0 ? 0 : parts[static_cast<std::size_t>(i) - 1]; };
  Partition out;
  for (int k = 1; k <= r; ++k)
    for (int c = 0; c < lam(r - k + 1) - lam(r - k); ++c) out.push_back(k);
  return out;
}

bool is_smooth(const Permutation& w) {
  static const Permutation p3412 = Permutation::parse("3412");
  static const Permutation p4231 = Permutation::parse("4231");
  return avoids(w, p3412) && avoids(w, p4231);
}

std::vector<Permutation> smooth_set(int n) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (is_smooth(w)) out.push_back(std::move(w));
  return out;
}

PermPoset::PermPoset(const Permutation& w) : n_(w.size()) {
  less_.assign(static_cast<std::size_t>(n_) + 1, std::vector<char>(static_cast<std::size_t>(n_) + 1, 0));
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) less_[i][j] = w.inverse_at(j) < w.inverse_at(i);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      if (!less_[i][j]) continue;
      bool cover = true;
      for (int k = i + 1; k < j && cover; ++k) cover = !(less_[i][k] && less_[k][j]);
      if (cover) edges_.emplace_back(i, j);
    }
}

bool PermPoset::less(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("PermPoset::less: index out of range");
  return less_[i][j];
}

bool PermPoset::is_forest() const {
  std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges_) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

std::vector<std::uint64_t> PermPoset::chain_counts() const {
  // paths[v][k]: saturated chains with k+1 elements ending at v. Covers go
  // from smaller to larger labels, so increasing order is topological.
  std::vector<std::vector<std::uint64_t>> paths(static_cast<std::size_t>(n_) + 1);
  std::vector<std::uint64_t> rho;
  for (int v = 1; v <= n_; ++v) {
    paths[v] = {1};
    for (auto [a, b] : edges_) {
      if (b != v) continue;
      if (paths[v].size() < paths[a].size() + 1) paths[v].resize(paths[a].size() + 1, 0);
      for (std::size_t k = 0; k < paths[a].size(); ++k) paths[v][k + 1] += paths[a][k];
    }
    if (rho.size() < paths[v].size()) rho.resize(paths[v].size(), 0);
    for (std::size_t k = 0; k < paths[v].size(); ++k) rho[k] += paths[v][k];
  }
  while (rho.size() > 1 && rho.back() == 0) rho.pop_back();
  return rho;
}

std::optional<int> PermPoset::height() const {
  auto rho = chain_counts();
  if (rho.size() < 2) return std::nullopt;
  return static_cast<int>(rho.size()) - 1;
}

Partition lambda_of(const Permutation& w) {
  if (!is_smooth(w)) throw std::invalid_argument("lambda_of: " + w.to_string() + " is not smooth");
  PermPoset P(w);
  auto m = P.height();
  if (!m) return {0};
  auto rho = P.chain_counts();
  Partition out;
  for (int i = *m; i >= 1; --i) out.push_back(static_cast<int>(rho[static_cast<std::size_t>(i)]));
  return out;
}

Partition exponents_of(const Permutation& w) { return dual_partition(lambda_of(w)); }

bool is_fubini(const std::vector<int>& x) {
  int k = static_cast<int>(x.size());
  if (k == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  int mx = 0;
  for (int v : x) {
    if (v < 0 || v >= k) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    mx = std::max(mx, v);
  }
  return std::all_of(seen.begin(), seen.begin() + mx + 1, [](char c) { return c != 0; });
}

bool is_lazy_fubini(const std::vector<int>& x) {
  if (x.empty() || x[0] != 0) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] - x[i] > 1 || x[i + 1] < 0) return false;
  return true;
}

bool is_weakly_increasing(const std::vector<int>& x) { return std::is_sorted(x.begin(), x.end()); }

std::vector<std::vector<int>> lazy_fubini_words(int k) {
  if (k < 1) throw std::invalid_argument("lazy_fubini_words: k must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> cur{0};
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= cur.back() + 1; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

bool is_unimodal_perm(const Permutation& w) {
  int n = w.size(), j = 1;
  while (j < n && w(j) < w(j + 1)) ++j;
  while (j < n && w(j) > w(j + 1)) ++j;
  return j >= n;
}

std::vector<Permutation> unimodal_perms(int n) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (is_unimodal_perm(w)) out.push_back(std::move(w));
  return out;
}

Partition Lambda(const Permutation& u) {
  if (!is_unimodal_perm(u)) throw std::invalid_argument("Lambda: " + u.to_string() + " is not unimodal");
  if (u.is_identity()) return {0};
  int n = u.size();
  Partition out;
  for (int i = u.inverse_at(n) + 1; i <= n; ++i) out.push_back(n - u(i));
  return out;
}

Permutation Lambda_inverse(const Partition& lambda, int n) {
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> tail;
  for (int x : lambda) {
    if (x == 0 && lambda.size() == 1) break;
    if (x < 1 || x > n - 1 || used[static_cast<std::size_t>(n - x)])
      throw std::invalid_argument("Lambda_inverse: " + format_partition(lambda) + " needs distinct parts in [1, " +
                                  std::to_string(n - 1) + "]");
    if (!tail.empty() && n - x > tail.back())
      throw std::invalid_argument("Lambda_inverse: parts of " + format_partition(lambda) + " must increase");
    used[static_cast<std::size_t>(n - x)] = 1;
    tail.push_back(n - x);
  }
  std::vector<int> one_line;
  for (int t = 1; t <= n; ++t)
    if (!used[static_cast<std::size_t>(t)]) one_line.push_back(t);
  one_line.insert(one_line.end(), tail.begin(), tail.end());
  return Permutation(std::move(one_line));
}

SymmetricGroup::SymmetricGroup(int n)
    : SymmetricGroup(BruhatOrder::build(CoxeterGroup::enumerate(
          build_system(CoxeterType::A, n >= 2 ? n - 1 : throw std::invalid_argument("SymmetricGroup: n must be at least 2"))))) {}

SymmetricGroup::SymmetricGroup(BruhatPtr bruhat)
    : n_(bruhat->group().rank() + 1), group_(bruhat->group_ptr()), bruhat_(std::move(bruhat)), code_(code_A(group_)) {}

bool SymmetricGroup::is_principal(const Permutation& w) const {
  return coxlehmer::is_principal(element(w), code_, *bruhat_);
}

namespace {

std::string instance_name(const SymmetricGroup& s) { return "S" + std::to_string(s.n()); }

IntPolynomial product_of(const std::vector<int>& exps) {
  std::vector<int> ns;
  for (int e : exps) ns.push_back(e + 1);
  return q_analog_product(ns);
}

}  // namespace

VerificationReport verify_catalan_equivalence(const SymmetricGroup& s) {
  VerificationReport report("catalan-equivalence", instance_name(s));
  ReportTimer timer(report);
  static const Permutation p312 = Permutation::parse("312");
  auto principal = principal_set(s.code(), s.bruhat());
  std::vector<char> in(s.group().size(), 0);
  for (Element p : principal) in[p.index()] = 1;
  for (Element e : s.group().elements()) {
    auto w = s.permutation(e);
    bool pr = in[e.index()], lazy = is_lazy_fubini(code_L_n(s.code(), e)), av = avoids(w, p312);
    report.record(pr == lazy && lazy == av, [&] {
      std::ostringstream os;
      os << w.to_string() << ": principal " << pr << ", lazy Fubini " << lazy << ", 312-avoiding " << av;
      return os.str();
    });
  }
  report.note("principal", principal.size());
  report.note("catalan", catalan(s.n()));
  report.record(principal.size() == catalan(s.n()), [&] {
    return std::to_string(principal.size()) + " principal elements, expected " + std::to_string(catalan(s.n()));
  });
  return report;
}

VerificationReport verify_312_exponents(const SymmetricGroup& s) {
  VerificationReport report("312-exponents", instance_name(s));
  ReportTimer timer(report);
  static const Permutation p312 = Permutation::parse("312");
  for (Element e : s.group().elements()) {
    auto w = s.permutation(e);
    if (!avoids(w, p312)) continue;
    auto code = code_L_n(s.code(), e);
    auto dual = exponents_of(w);
    std::set<int> lhs(dual.begin(), dual.end()), rhs(code.begin(), code.end());
    lhs.insert(0);
    report.record(lhs == rhs && s.bruhat().lower_poincare(e) == product_of(code), [&] {
      return w.to_string() + ": code " + format_vector(code) + ", exponents " + format_partition(dual);
    });
  }
  return report;
}

VerificationReport verify_unimodal_equivalence(const SymmetricGroup& s) {
  VerificationReport report("unimodal-equivalence", instance_name(s));
  ReportTimer timer(report);
  auto U = unimodal_subset(s.code(), principal_set(s.code(), s.bruhat()));
  std::vector<char> in(s.group().size(), 0);
  for (Element u : U) in[u.index()] = 1;
  for (Element e : s.group().elements()) {
    auto w = s.permutation(e);
    auto code = code_L_n(s.code(), e);
    bool lu = in[e.index()], wf = is_fubini(code) && is_weakly_increasing(code), up = is_unimodal_perm(w);
    report.record(lu == wf && wf == up, [&] {
      std::ostringstream os;
      os << w.to_string() << ": L-unimodal " << lu << ", increasing Fubini code " << wf << ", unimodal " << up;
      return os.str();
    });
  }
  std::uint64_t expected = std::uint64_t{1} << (s.n() - 1);
  report.note("unimodal", U.size());
  report.record(U.size() == expected, [&] {
    return std::to_string(U.size()) + " unimodal elements, expected " + std::to_string(expected);
  });
  return report;
}

VerificationReport verify_annals(const SymmetricGroup& s, const Permutation& u) {
  VerificationReport report("annals", u.to_string());
  ReportTimer timer(report);
  auto lam = Lambda(u);
  auto lam_u = lambda_of(u);
  report.record(lam == lam_u, [&] {
    return "Lambda(" + u.to_string() + ") = " + format_partition(lam) + " but lambda_u = " + format_partition(lam_u);
  });
  LehmerVector expected(static_cast<std::size_t>(u(u.size())), 0);
  if (part_count(lam) > 0)
    for (int x : dual_partition(lam)) expected.push_back(x);
  auto code = s.L(u);
  report.record(code == expected, [&] {
    return "L_n(" + u.to_string() + ") = " + format_vector(code) + ", expected " + format_vector(expected);
  });
  return report;
}

VerificationReport verify_smooth_exponents(const SymmetricGroup& s) {
  VerificationReport report("smooth-exponents", instance_name(s));
  ReportTimer timer(report);
  for (Element e : s.group().elements()) {
    auto w = s.permutation(e);
    if (!is_smooth(w)) continue;
    PermPoset P(w);
    report.record(P.is_forest(), [&] { return "Hasse diagram of P_" + w.to_string() + " is not a forest"; });
    auto rho = P.chain_counts();
    report.record(std::is_sorted(rho.rbegin(), rho.rend()) &&
                      std::adjacent_find(rho.begin(), rho.end()) == rho.end(),
                  [&] { return "chain counts of P_" + w.to_string() + " do not strictly decrease"; });
    auto E = exponents_of(w);
    report.record(partition_size(lambda_of(w)) == w.length(),
                  [&] { return "lambda of " + w.to_string() + " is not a partition of its length"; });
    report.record(s.bruhat().lower_poincare(e) == product_of(E), [&] {
      return "h_" + w.to_string() + " differs from the product over E = " + format_partition(E);
    });
  }
  return report;
}

std::set<IntPolynomial> h_set(const SymmetricGroup& s, const std::vector<Permutation>& perms) {
  std::set<IntPolynomial> out;
  for (const auto& w : perms) out.insert(s.h(w));
  return out;
}

VerificationReport verify_smooth_classification(const SymmetricGroup& s) {
  VerificationReport report("smooth-classification", instance_name(s));
  ReportTimer timer(report);
  auto smooth = h_set(s, smooth_set(s.n()));
  auto unimodal = h_set(s, unimodal_perms(s.n()));
  std::size_t expected = std::size_t{1} << (s.n() - 1);
  report.note("smooth_polynomials", smooth.size());
  report.note("unimodal_polynomials", unimodal.size());
  report.record(smooth == unimodal, [] { return std::string("smooth and unimodal polynomial sets differ"); });
  report.record(smooth.size() == expected, [&] {
    return std::to_string(smooth.size()) + " polynomials, expected " + std::to_string(expected);
  });
  if (s.n() == 4) {
    auto q = [](int k) { return q_analog(k); };
    std::set<IntPolynomial> listed{q(2) * q(3) * q(4), q(2) * q(3) * q(3), q(2) * q(2) * q(3), q(2) * q(3),
                                   q(2) * q(2) * q(2), q(2) * q(2),        q(2),               q(1)};
    report.record(smooth == listed, [] { return std::string("S4 polynomials differ from the listed products"); });
    std::vector<Partition> partitions;
    for (const auto& u : unimodal_perms(4)) partitions.push_back(Lambda(u));
    std::sort(partitions.begin(), partitions.end());
    std::vector<Partition> listed_partitions{{1, 2, 3}, {2, 3}, {1, 3}, {1, 2}, {3}, {2}, {1}, {0}};
    std::sort(listed_partitions.begin(), listed_partitions.end());
    report.record(partitions == listed_partitions,
                  [] { return std::string("Lambda on U4 differs from the listed partitions"); });
  }
  return report;
}

}  // namespace coxlehmer
