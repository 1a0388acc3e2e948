#ifndef COXLEHMER_LEHMER_HPP
#define COXLEHMER_LEHMER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coxlehmer/bruhat.hpp"
#include "coxlehmer/coxeter.hpp"
#include "coxlehmer/permutation.hpp"
#include "coxlehmer/report.hpp"

namespace coxlehmer {

/// A point of prod {0, ..., e_i}; entry i is bounded by the i-th exponent.
using LehmerVector = std::vector<int>;

std::string format_vector(const LehmerVector& v);

/// A map from a finite Coxeter group to a product of chains, stored as full
/// forward and inverse tables. The constructor does not insist on validity so
/// that broken tables can be inspected with verify_code; decode() throws for
/// points without a preimage.
class LehmerCode {
 public:
  LehmerCode(GroupPtr group, std::string name, std::vector<int> bounds, std::vector<LehmerVector> table);

  const std::string& name() const noexcept { return name_; }
  const CoxeterGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  /// Exponents e_i: the codomain is prod {0, ..., e_i}.
  const std::vector<int>& bounds() const noexcept { return bounds_; }
  /// d_i = e_i + 1.
  std::vector<int> degrees() const;
  int dimension() const noexcept { return static_cast<int>(bounds_.size()); }
  std::size_t box_size() const noexcept { return box_size_; }
  bool experimental() const noexcept { return experimental_; }
  void set_experimental(bool e) { experimental_ = e; }

  const LehmerVector& encode(Element w) const { return table_[w.index()]; }
  const LehmerVector& operator()(Element w) const { return encode(w); }
  bool in_box(const LehmerVector& x) const;
  bool has_preimage(const LehmerVector& x) const;
  Element decode(const LehmerVector& x) const;
  /// Mixed-radix position of x in the box, first coordinate most significant.
  std::size_t box_index(const LehmerVector& x) const;
  LehmerVector box_point(std::size_t index) const;

  const std::vector<LehmerVector>& table() const noexcept { return table_; }

 private:
  static constexpr std::uint32_t kNoPreimage = 0xffffffffU;

  GroupPtr group_;
  std::string name_;
  std::vector<int> bounds_;
  std::vector<LehmerVector> table_;
  std::vector<std::uint32_t> inverse_;
  std::size_t box_size_ = 1;
  bool experimental_ = false;
};

/// (l(w^(1)), ..., l(w^(n))) along the given generator chain.
LehmerCode code_from_quotients(GroupPtr group, std::vector<int> chain, std::vector<int> bounds, std::string name);
LehmerCode code_I2(GroupPtr group);
LehmerCode code_A(GroupPtr group);
/// Also checks that the maximal quotient for S \ {s_n} is a Bruhat chain of
/// 2n elements; throws ConsistencyError otherwise.
LehmerCode code_B(GroupPtr group);
/// Quotient code of B_n along the order s2, s1, s3, ..., sn (experimental).
LehmerCode code_B_tilde(GroupPtr group);
/// Product of the chains X_1, ..., X_{n-1}, Y_n; checks bijectivity and
/// additivity of lengths while building. Available for n = 4, 5, 6.
LehmerCode code_D(GroupPtr group);
/// ux -> (0, l(u), l(x)) for u in Y and (1, l(u) - 1, l(x)) for u in Z.
LehmerCode code_H3(GroupPtr group);
LehmerCode dual_code(const LehmerCode& code);
/// Concatenation of codes of the two factors of a product group.
LehmerCode product_code(GroupPtr product, const LehmerCode& first, const LehmerCode& second);

/// The shipped code for an irreducible group (LA, LB, LD, LH3 or LI2).
LehmerCode default_code(GroupPtr group);
/// LA, LB, LBtilde, LD, LH3, LI2, or "dual-" followed by one of these.
LehmerCode code_by_name(GroupPtr group, std::string_view name);
std::vector<std::string> code_names();

/// Checks bijectivity onto the box, l(w) = sum of entries, and that every
/// componentwise cover x < y of the box satisfies L^-1(x) <= L^-1(y).
VerificationReport verify_code(const LehmerCode& code, const BruhatOrder& bruhat);

/// All rank-compatible bijections I2(m) -> {0,1} x {0..m-1} whose inverse is
/// order preserving. Throws SizeLimitError for m > 8.
std::vector<LehmerCode> enumerate_dihedral_codes(GroupPtr group, const BruhatOrder& bruhat);

/// Entry k = #{i < k : w^-1(i) > w^-1(k)}.
LehmerVector code_A_inversions(const Permutation& w);
/// Entry i = #{j > i : w(j) < w(i)}.
LehmerVector classic_lehmer(const Permutation& w);
/// L_n(w) = (0, L_{A_{n-1}}(w)).
LehmerVector code_L_n(const LehmerCode& code_a, Element w);

Permutation to_permutation(const CoxeterGroup& group, Element w);
Element from_permutation(const CoxeterGroup& group, const Permutation& p);

/// Chain words by name (e.g. "X", "Y", "Z" for H3; "X1".."X5", "Y4".."Y6"
/// for D_n), in generator labels.
using ChainWords = std::map<std::string, std::vector<std::vector<int>>>;
ChainWords chain_words(const std::string& system_name);
/// Elements of a named chain, in order.
std::vector<Element> chain_elements(const CoxeterGroup& group, const std::string& chain);

/// Checks that every stored chain is saturated: consecutive elements are
/// Bruhat covers and the sizes match the expected counts.
VerificationReport verify_chains(const CoxeterGroup& group, const BruhatOrder& bruhat);
/// Y_{n-1} * ^{S \ {s_{n-1}}}D_n = X_{n-1} Y_n, and D_n = X_1 ... X_{n-1} Y_n
/// with unique factorizations and additive lengths.
VerificationReport verify_D_factorization(const CoxeterGroup& group);
/// Y + Z = [e, z0]_L = (H3)_{s1,s2} {e, s3s2s1} = H3/{x0} = H3/X, the
/// factorization H3 = (H3/X) X with additive lengths, and |^{S\{s3}}H3| = 20.
VerificationReport verify_H3_quotients(const CoxeterGroup& group);

void to_json(nlohmann::json& j, const LehmerCode& code);

namespace detail {
extern const std::string_view kChainDataJson;
}

}  // namespace coxlehmer

#endif  // COXLEHMER_LEHMER_HPP
