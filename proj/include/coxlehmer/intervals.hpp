#ifndef COXLEHMER_INTERVALS_HPP
#define COXLEHMER_INTERVALS_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coxlehmer/bruhat.hpp"
#include "coxlehmer/lehmer.hpp"
#include "coxlehmer/multicomplex.hpp"
#include "coxlehmer/report.hpp"
#include "coxlehmer/simplicial.hpp"

namespace coxlehmer {

/// J_w = {L(v) : v <= w}, 0-based. Throws ConsistencyError if the image is
/// not an order ideal (the code is then not a Lehmer code).
OrderIdeal ideal_of(Element w, const LehmerCode& code, const BruhatOrder& bruhat);

/// M_d with d_i = e_i + 1 from the exponents of the group.
SimplicialComplex lehmer_complex_system(const CoxeterGroup& group);
/// M_d(J_w).
SimplicialComplex lehmer_complex_interval(Element w, const LehmerCode& code, const BruhatOrder& bruhat);

enum class HRoute { Direct, Complex, Maduro };
std::string to_string(HRoute r);
/// "direct", "complex" or "maduro".
HRoute parse_route(std::string_view s);

inline constexpr std::size_t kDefaultMaduroLimit = 20;

/// One inclusion-exclusion term: a nonempty subset of the maxima, its
/// componentwise meet and the sign (-1)^(|X|+1).
struct MaduroTerm {
  std::vector<std::size_t> subset;
  Point meet;
  int sign = 1;
};
/// All 2^|M| - 1 terms; throws SizeLimitError when |M| > limit.
std::vector<MaduroTerm> maduro_terms(const std::vector<Point>& maxima, std::size_t limit = kDefaultMaduroLimit);
/// Sum over nonempty X of (-1)^(|X|+1) prod_i [meet(X)_i + 1]_q.
IntPolynomial maduro_polynomial(const std::vector<Point>& maxima, std::size_t limit = kDefaultMaduroLimit);
/// h-vector of M_d(J) read off the shelling given by the lexicographic order
/// of J; throws ConsistencyError if that order is not a shelling.
IntPolynomial shelling_polynomial(const OrderIdeal& J);

/// h_w(q) by the chosen route.
IntPolynomial h_poly(Element w, HRoute route, const LehmerCode& code, const BruhatOrder& bruhat,
                     std::size_t maduro_limit = kDefaultMaduroLimit);

/// u Lh v iff L(u) <= L(v) componentwise.
bool lh_leq(Element u, Element v, const LehmerCode& code);
Element curlywedge(Element u, Element v, const LehmerCode& code);
Element curlyvee(Element u, Element v, const LehmerCode& code);

/// [e, w] = {v : L(v) <= L(w)} as sets.
bool is_principal(Element w, const LehmerCode& code, const BruhatOrder& bruhat);
std::vector<Element> principal_set(const LehmerCode& code, const BruhatOrder& bruhat);
/// Closure of Pr(L) under the curly meet and join, and distributivity on
/// all triples.
VerificationReport verify_principal_lattice(const LehmerCode& code, const BruhatOrder& bruhat);

/// O_w: codes of principal elements that are coordinate permutations of L(w).
std::vector<LehmerVector> orbit(Element w, const LehmerCode& code, const std::vector<Element>& principal);
/// Throws std::invalid_argument when w is not principal.
bool is_unimodal_element(Element w, const LehmerCode& code, const BruhatOrder& bruhat);
std::vector<Element> unimodal_set(const LehmerCode& code, const BruhatOrder& bruhat);
/// Same, reusing an already computed principal set.
std::vector<Element> unimodal_subset(const LehmerCode& code, const std::vector<Element>& principal);

/// {h_w : h_w palindromic of top degree l(w)}.
std::set<IntPolynomial> pal_set(const BruhatOrder& bruhat);
std::set<IntPolynomial> h_set(const std::vector<Element>& elements, const BruhatOrder& bruhat);

struct IntervalAnalysis {
  Element w;
  OrderIdeal ideal;
  std::vector<Point> maxima;
  IntPolynomial h;
  bool principal = false;
  bool unimodal = false;
  bool palindromic = false;
};
IntervalAnalysis analyze_interval(Element w, const LehmerCode& code, const BruhatOrder& bruhat);

/// direct = complex = maduro for every element.
VerificationReport verify_route_agreement(const LehmerCode& code, const BruhatOrder& bruhat,
                                          std::size_t maduro_limit = kDefaultMaduroLimit);
/// On the given elements, Bruhat order and Lh coincide relation by relation.
VerificationReport verify_order_agreement(const std::vector<Element>& elements, const LehmerCode& code,
                                          const BruhatOrder& bruhat, const std::string& label);
/// |Pal| against |U(L)| for B3 and B4 (both B codes), D4 and D5.
VerificationReport verify_strict_inclusions();

}  // namespace coxlehmer

#endif  // COXLEHMER_INTERVALS_HPP
