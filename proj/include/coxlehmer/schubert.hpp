#ifndef COXLEHMER_SCHUBERT_HPP
#define COXLEHMER_SCHUBERT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxlehmer/bruhat.hpp"
#include "coxlehmer/lehmer.hpp"
#include "coxlehmer/permutation.hpp"
#include "coxlehmer/poly.hpp"
#include "coxlehmer/report.hpp"

namespace coxlehmer {

/// Parts in weakly increasing order; (0) is the empty partition.
using Partition = std::vector<int>;

std::string format_partition(const Partition& p);
/// Number of nonzero parts.
int part_count(const Partition& p);
int partition_size(const Partition& p);

/// Conjugate partition, built from m_k(lambda*) = lambda_{r-k+1} - lambda_{r-k}.
Partition dual_partition(const Partition& p);

/// Avoids 3412 and 4231.
bool is_smooth(const Permutation& w);
std::vector<Permutation> smooth_set(int n);

/// P_w on [n]: i <_w j iff i < j and w^{-1}(j) < w^{-1}(i).
class PermPoset {
 public:
  explicit PermPoset(const Permutation& w);

  int size() const noexcept { return n_; }
  /// 1-based.
  bool less(int i, int j) const;
  /// Cover pairs (i, j) with i <_w j.
  const std::vector<std::pair<int, int>>& hasse_edges() const noexcept { return edges_; }
  /// The Hasse diagram, as an undirected graph, has no cycle.
  bool is_forest() const;
  /// rho_0, rho_1, ...: saturated chains with i+1 elements. rho_0 = n.
  std::vector<std::uint64_t> chain_counts() const;
  /// max{i >= 1 : rho_i > 0}; empty for an antichain.
  std::optional<int> height() const;

 private:
  int n_ = 0;
  std::vector<std::vector<char>> less_;
  std::vector<std::pair<int, int>> edges_;
};

/// lambda_w = (rho_m, ..., rho_1), lambda_e = (0). Throws std::invalid_argument
/// for non-smooth w.
Partition lambda_of(const Permutation& w);
/// E(w) = lambda_w*.
Partition exponents_of(const Permutation& w);

bool is_fubini(const std::vector<int>& x);
bool is_lazy_fubini(const std::vector<int>& x);
bool is_weakly_increasing(const std::vector<int>& x);
/// All lazy Fubini words of length k in lexicographic order.
std::vector<std::vector<int>> lazy_fubini_words(int k);
std::uint64_t catalan(int n);

/// Rises then falls.
bool is_unimodal_perm(const Permutation& w);
std::vector<Permutation> unimodal_perms(int n);

/// Lambda(u) = (n - u(j+1), ..., n - u(n)) with j = u^{-1}(n). Throws
/// std::invalid_argument unless u is unimodal.
Partition Lambda(const Permutation& u);
/// Throws std::invalid_argument unless the parts are distinct and at most n-1.
Permutation Lambda_inverse(const Partition& lambda, int n);

/// S_n realized as A_{n-1}, with its Bruhat order and L_{A_{n-1}}.
class SymmetricGroup {
 public:
  /// n >= 2.
  explicit SymmetricGroup(int n);
  /// From an already built Bruhat order of A_{n-1}.
  explicit SymmetricGroup(BruhatPtr bruhat);

  int n() const noexcept { return n_; }
  const CoxeterGroup& group() const noexcept { return *group_; }
  const BruhatOrder& bruhat() const noexcept { return *bruhat_; }
  const LehmerCode& code() const noexcept { return code_; }
  Element element(const Permutation& w) const { return from_permutation(*group_, w); }
  Permutation permutation(Element w) const { return to_permutation(*group_, w); }
  /// L_n(w) = (0, L_{A_{n-1}}(w)).
  LehmerVector L(const Permutation& w) const { return code_L_n(code_, element(w)); }
  /// h_w(q) from the Bruhat interval.
  IntPolynomial h(const Permutation& w) const { return bruhat_->lower_poincare(element(w)); }
  bool is_principal(const Permutation& w) const;

 private:
  int n_;
  GroupPtr group_;
  BruhatPtr bruhat_;
  LehmerCode code_;
};

/// L_n-principal <=> lazy Fubini code <=> 312-avoiding, and |Pr(L_n)| = C_n.
VerificationReport verify_catalan_equivalence(const SymmetricGroup& s);
/// For 312-avoiding w: parts of lambda_w* plus 0 are the code entries and
/// h_w = prod [L_n(w)_k + 1]_q.
VerificationReport verify_312_exponents(const SymmetricGroup& s);
/// L_n-unimodal <=> weakly increasing Fubini code <=> unimodal permutation.
VerificationReport verify_unimodal_equivalence(const SymmetricGroup& s);
/// Lambda(u) = lambda_u and L_n(u) = (0^{u(n)}, Lambda(u)*).
VerificationReport verify_annals(const SymmetricGroup& s, const Permutation& u);
/// Forest Hasse diagrams and strictly decreasing chain counts on smooth w,
/// and h_w = prod [E(w)_i + 1]_q.
VerificationReport verify_smooth_exponents(const SymmetricGroup& s);
/// {h_w : smooth} = {h_w : unimodal} with 2^{n-1} elements; for n = 4 also
/// the explicit list of eight products.
VerificationReport verify_smooth_classification(const SymmetricGroup& s);

std::set<IntPolynomial> h_set(const SymmetricGroup& s, const std::vector<Permutation>& perms);

}  // namespace coxlehmer

#endif  // COXLEHMER_SCHUBERT_HPP
