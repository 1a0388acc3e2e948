#include "coxlehmer/intervals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace coxlehmer {

OrderIdeal ideal_of(Element w, const LehmerCode& code, const BruhatOrder& bruhat) {
  std::vector<Point> pts;
  for (Element v : bruhat.lower_interval(w)) pts.push_back(code.encode(v));
  ChainProduct box(code.degrees());
  if (!OrderIdeal::is_order_ideal(box, pts))
    throw ConsistencyError("ideal_of: image of [e, " + code.group().format(w) + "] under " + code.name() +
                           " is not an order ideal");
  return OrderIdeal::from_ideal_points(box, std::move(pts));
}

SimplicialComplex lehmer_complex_system(const CoxeterGroup& group) {
  std::vector<int> d;
  for (int e : group.exponents()) d.push_back(e + 1);
  return build_M(d);
}

SimplicialComplex lehmer_complex_interval(Element w, const LehmerCode& code, const BruhatOrder& bruhat) {
  return build_M_of_ideal(ideal_of(w, code, bruhat));
}

std::string to_string(HRoute r) {
  switch (r) {
    case HRoute::Direct: return "direct";
    case HRoute::Complex: return "complex";
    case HRoute::Maduro: return "maduro";
  }
  return "?";
}

HRoute parse_route(std::string_view s) {
  if (s == "direct") return HRoute::Direct;
  if (s == "complex") return HRoute::Complex;
  if (s == "maduro") return HRoute::Maduro;
  throw std::invalid_argument("unknown route '" + std::string(s) + "' (expected direct, complex or maduro)");
}

namespace {

void check_maduro_limit(std::size_t count, std::size_t limit) {
  if (count > limit)
    throw SizeLimitError("maduro route: " + std::to_string(count) + " maxima exceed the limit of " +
                         std::to_string(limit));
}

IntPolynomial box_polynomial(const Point& x) {
  std::vector<int> ns(x);
  for (int& n : ns) ++n;
  return q_analog_product(ns);
}

}  // namespace

std::vector<MaduroTerm> maduro_terms(const std::vector<Point>& maxima, std::size_t limit) {
  check_maduro_limit(maxima.size(), limit);
  std::vector<MaduroTerm> out;
  std::vector<std::size_t> subset;
  std::function<void(std::size_t, const Point&)> rec = [&](std::size_t next, const Point& running) {
    for (std::size_t i = next; i < maxima.size(); ++i) {
      subset.push_back(i);
      Point m = subset.size() == 1 ? maxima[i] : meet(running, maxima[i]);
      out.push_back({subset, m, subset.size() % 2 == 1 ? 1 : -1});
      rec(i + 1, m);
      subset.pop_back();
    }
  };
  rec(0, Point{});
  return out;
}

IntPolynomial maduro_polynomial(const std::vector<Point>& maxima, std::size_t limit) {
  check_maduro_limit(maxima.size(), limit);
  // Terms sharing a meet are merged before the q-analog products are formed.
  std::map<Point, std::int64_t> weight;
  std::function<void(std::size_t, const Point&, int)> rec = [&](std::size_t next, const Point& running, int size) {
    for (std::size_t i = next; i < maxima.size(); ++i) {
      Point m = size == 0 ? maxima[i] : meet(running, maxima[i]);
      weight[m] += (size % 2 == 0) ? 1 : -1;
      rec(i + 1, m, size + 1);
    }
  };
  rec(0, Point{}, 0);
  IntPolynomial h;
  for (const auto& [m, c] : weight)
    if (c != 0) h += scalar(box_polynomial(m), c);
  return h;
}

IntPolynomial shelling_polynomial(const OrderIdeal& J) {
  auto complex = build_M_of_ideal(J);
  std::vector<std::size_t> order(complex.facet_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto s = verify_shelling(complex, order);
  if (!s.ok) throw ConsistencyError("shelling_polynomial: lexicographic order is not a shelling");
  return IntPolynomial(s.h_vector);
}

IntPolynomial h_poly(Element w, HRoute route, const LehmerCode& code, const BruhatOrder& bruhat,
                     std::size_t maduro_limit) {
  switch (route) {
    case HRoute::Direct: return bruhat.lower_poincare(w);
    case HRoute::Complex: return shelling_polynomial(ideal_of(w, code, bruhat));
    case HRoute::Maduro: return maduro_polynomial(ideal_of(w, code, bruhat).maxima(), maduro_limit);
  }
  throw std::logic_error("h_poly: unknown route");
}

bool lh_leq(Element u, Element v, const LehmerCode& code) {
  return ChainProduct::leq(code.encode(u), code.encode(v));
}

Element curlywedge(Element u, Element v, const LehmerCode& code) {
  return code.decode(meet(code.encode(u), code.encode(v)));
}

Element curlyvee(Element u, Element v, const LehmerCode& code) {
  return code.decode(join(code.encode(u), code.encode(v)));
}

bool is_principal(Element w, const LehmerCode& code, const BruhatOrder& bruhat) {
  const auto& lw = code.encode(w);
  for (Element v : code.group().elements())
    if (bruhat.leq(v, w) != ChainProduct::leq(code.encode(v), lw)) return false;
  return true;
}

std::vector<Element> principal_set(const LehmerCode& code, const BruhatOrder& bruhat) {
  std::vector<Element> out;
  for (Element w : code.group().elements())
    if (is_principal(w, code, bruhat)) out.push_back(w);
  return out;
}

VerificationReport verify_principal_lattice(const LehmerCode& code, const BruhatOrder& bruhat) {
  const auto& g = code.group();
  VerificationReport report("principal-lattice", code.name() + " on " + g.system().name());
  ReportTimer timer(report);
  auto P = principal_set(code, bruhat);
  std::vector<char> in(g.size(), 0);
  for (Element p : P) in[p.index()] = 1;
  report.note("principal", P.size());
  for (Element a : P)
    for (Element b : P) {
      Element m = curlywedge(a, b, code), j = curlyvee(a, b, code);
      report.record(in[m.index()] && in[j.index()], [&] {
        return "meet or join of " + g.format(a) + " and " + g.format(b) + " is not principal";
      });
    }
  for (Element a : P)
    for (Element b : P)
      for (Element c : P) {
        Element lhs = curlywedge(a, curlyvee(b, c, code), code);
        Element rhs = curlyvee(curlywedge(a, b, code), curlywedge(a, c, code), code);
        report.record(lhs == rhs, [&] {
          return "distributivity fails for " + g.format(a) + ", " + g.format(b) + ", " + g.format(c);
        });
      }
  return report;
}

std::vector<LehmerVector> orbit(Element w, const LehmerCode& code, const std::vector<Element>& principal) {
  auto key = code.encode(w);
  std::sort(key.begin(), key.end());
  std::vector<LehmerVector> out;
  for (Element p : principal) {
    auto c = code.encode(p);
    auto s = c;
    std::sort(s.begin(), s.end());
    if (s == key) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_unimodal_element(Element w, const LehmerCode& code, const BruhatOrder& bruhat) {
  if (!is_principal(w, code, bruhat))
    throw std::invalid_argument("is_unimodal_element: " + code.group().format(w) + " is not principal");
  auto O = orbit(w, code, principal_set(code, bruhat));
  return O.front() == code.encode(w);
}

std::vector<Element> unimodal_subset(const LehmerCode& code, const std::vector<Element>& principal) {
  std::map<LehmerVector, LehmerVector> lex_min;
  for (Element p : principal) {
    const auto& c = code.encode(p);
    auto key = c;
    std::sort(key.begin(), key.end());
    auto [it, fresh] = lex_min.emplace(key, c);
    if (!fresh && c < it->second) it->second = c;
  }
  std::vector<Element> out;
  for (Element p : principal) {
    auto key = code.encode(p);
    std::sort(key.begin(), key.end());
    if (lex_min.at(key) == code.encode(p)) out.push_back(p);
  }
  return out;
}

std::vector<Element> unimodal_set(const LehmerCode& code, const BruhatOrder& bruhat) {
  return unimodal_subset(code, principal_set(code, bruhat));
}

std::set<IntPolynomial> pal_set(const BruhatOrder& bruhat) {
  const auto& g = bruhat.group();
  std::set<IntPolynomial> out;
  for (Element w : g.elements()) {
    auto h = bruhat.lower_poincare(w);
    if (is_palindromic(h, g.length(w))) out.insert(std::move(h));
  }
  return out;
}

std::set<IntPolynomial> h_set(const std::vector<Element>& elements, const BruhatOrder& bruhat) {
  std::set<IntPolynomial> out;
  for (Element w : elements) out.insert(bruhat.lower_poincare(w));
  return out;
}

IntervalAnalysis analyze_interval(Element w, const LehmerCode& code, const BruhatOrder& bruhat) {
  auto J = ideal_of(w, code, bruhat);
  auto maxima = J.maxima();
  auto h = bruhat.lower_poincare(w);
  IntervalAnalysis a{w, std::move(J), std::move(maxima), h};
  a.principal = is_principal(w, code, bruhat);
  if (a.principal) a.unimodal = is_unimodal_element(w, code, bruhat);
  a.palindromic = is_palindromic(h, code.group().length(w));
  return a;
}

VerificationReport verify_route_agreement(const LehmerCode& code, const BruhatOrder& bruhat,
                                          std::size_t maduro_limit) {
  const auto& g = code.group();
  VerificationReport report("route-agreement", code.name() + " on " + g.system().name());
  ReportTimer timer(report);
  for (Element w : g.elements()) {
    auto direct = h_poly(w, HRoute::Direct, code, bruhat);
    auto J = ideal_of(w, code, bruhat);
    auto complex = shelling_polynomial(J);
    auto maduro = maduro_polynomial(J.maxima(), maduro_limit);
    report.record(direct == complex && direct == maduro, [&] {
      return g.format(w) + ": direct " + direct.to_string() + ", complex " + complex.to_string() + ", maduro " +
             maduro.to_string();
    });
  }
  return report;
}

VerificationReport verify_order_agreement(const std::vector<Element>& elements, const LehmerCode& code,
                                          const BruhatOrder& bruhat, const std::string& label) {
  const auto& g = code.group();
  VerificationReport report("order-agreement", label + " under " + code.name() + " on " + g.system().name());
  ReportTimer timer(report);
  for (Element u : elements)
    for (Element v : elements)
      report.record(bruhat.leq(u, v) == lh_leq(u, v, code), [&] {
        return g.format(u) + " vs " + g.format(v) + ": Bruhat and Lh disagree";
      });
  return report;
}

VerificationReport verify_strict_inclusions() {
  VerificationReport report("strict-inclusions", "B3, B4, D4, D5");
  ReportTimer timer(report);
  struct Claim {
    CoxeterType type;
    int rank;
    std::string code;
    bool strict;
  };
  const std::vector<Claim> claims{
      {CoxeterType::B, 3, "LB", true},      {CoxeterType::B, 3, "LBtilde", false}, {CoxeterType::B, 4, "LBtilde", true},
      {CoxeterType::D, 4, "LD", false},     {CoxeterType::D, 5, "LD", true},
  };
  for (const auto& c : claims) {
    auto g = CoxeterGroup::enumerate(build_system(c.type, c.rank));
    auto b = BruhatOrder::build(g);
    auto L = code_by_name(g, c.code);
    auto U = unimodal_set(L, *b);
    auto pal = pal_set(*b);
    auto hu = h_set(U, *b);
    std::string inst = g->system().name() + " " + c.code;
    VerificationReport child("pal-vs-unimodal", inst);
    child.note("pal", pal.size());
    child.note("unimodal", U.size());
    child.note("unimodal_polynomials", hu.size());
    child.note("expected", c.strict ? "|Pal| > |U|" : "|Pal| = |U|");
    child.record(hu.size() == U.size(), [&] { return "unimodal elements share h-polynomials"; });
    child.record(std::includes(pal.begin(), pal.end(), hu.begin(), hu.end()),
                 [&] { return "an h-polynomial of a unimodal element is not palindromic"; });
    bool ok = c.strict ? pal.size() > U.size() : pal.size() == U.size();
    child.record(ok, [&] {
      return "|Pal| = " + std::to_string(pal.size()) + ", |U| = " + std::to_string(U.size()) + ", expected " +
             (c.strict ? "strict inequality" : "equality");
    });
    report.add_child(std::move(child));
  }
  return report;
}

}  // namespace coxlehmer
