#include "coxlehmer/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "coxlehmer/intervals.hpp"
#include "coxlehmer/lehmer.hpp"
#include "coxlehmer/multicomplex.hpp"
#include "coxlehmer/schubert.hpp"
#include "coxlehmer/simplicial.hpp"

namespace coxlehmer {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

struct SystemSpec {
  CoxeterType type;
  int rank;
  int m = 0;
};

BruhatPtr load(const SystemSpec& s, const VerifyOptions& o) {
  return load_bruhat(build_system(s.type, s.rank, s.m), o.cache);
}

// Runs one task per item and attaches the resulting reports in item order.
template <typename T>
void fan_out(VerificationReport& parent, const std::vector<T>& items, const VerifyOptions& o,
             const std::function<VerificationReport(const T&)>& task) {
  std::vector<VerificationReport> out(items.size());
  parallel_for(items.size(), o.threads, [&](std::size_t i) { out[i] = task(items[i]); });
  for (auto& r : out) parent.add_child(std::move(r));
}

std::vector<int> symmetric_range(const VerifyOptions& o, int lo, int hi) {
  if (o.n) return {*o.n};
  std::vector<int> out;
  for (int n = lo; n <= std::min(hi, o.max_rank + 1); ++n) out.push_back(n);
  return out;
}

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::string ideal_text(const OrderIdeal& J) {
  std::ostringstream os;
  os << "ideal with maxima";
  for (const auto& m : J.maxima()) os << ' ' << format_vector(m);
  return os.str();
}

// Every linear extension of J (all when there are at most 10^4, else 100
// sampled) is a shelling of M_d(J) whose h-vector is the f-polynomial of J.
// Returns true when the extensions were sampled.
bool check_shellings_of(const OrderIdeal& J, std::mt19937_64& rng, VerificationReport& report) {
  constexpr std::uint64_t kExhaustive = 10'000;
  constexpr int kSamples = 100;
  auto complex = build_M_of_ideal(J);
  auto fp = J.f_polynomial();
  const auto& f = fp.coefficients();
  std::vector<std::int64_t> expected(f.begin(), f.end());
  report.record(trimmed(h_from_f(complex.f_vector())) == expected,
                [&] { return ideal_text(J) + ": h from f differs from the f-polynomial"; });
  std::vector<Extension> exts;
  bool sampled = count_linear_extensions(J, kExhaustive) > kExhaustive;
  if (!sampled) {
    exts = linear_extensions(J, kExhaustive);
  } else {
    for (int i = 0; i < kSamples; ++i) exts.push_back(random_linear_extension(J, rng));
  }
  for (const auto& e : exts) {
    std::vector<std::size_t> order(e.begin(), e.end());
    auto r = verify_shelling(complex, order);
    report.record(r.ok && trimmed(r.h_vector) == expected, [&] {
      return ideal_text(J) + ": extension fails" +
             (r.violation ? " at position " + std::to_string(*r.violation) : std::string(" on the h-vector"));
    });
  }
  return sampled;
}

// Ordered tuples of chain sizes >= 2 with product at most `bound`.
std::vector<std::vector<int>> boxes_up_to(int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (!cur.empty()) out.push_back(cur);
    for (int d = 2; d <= left; ++d) {
      cur.push_back(d);
      rec(left / d);
      cur.pop_back();
    }
  };
  rec(bound);
  return out;
}

std::vector<int> classification_exponents(const CoxeterSystem& s) {
  std::vector<int> e;
  switch (s.type) {
    case CoxeterType::A:
      for (int i = 1; i <= s.rank; ++i) e.push_back(i);
      break;
    case CoxeterType::B:
      for (int i = 1; i <= s.rank; ++i) e.push_back(2 * i - 1);
      break;
    case CoxeterType::D:
      for (int i = 1; i < s.rank; ++i) e.push_back(2 * i - 1);
      e.push_back(s.rank - 1);
      break;
    case CoxeterType::H3: e = {1, 5, 9}; break;
    case CoxeterType::I2: e = {1, s.dihedral_m - 1}; break;
    case CoxeterType::Product:
      for (const auto& f : s.factors) {
        auto sub = classification_exponents(f);
        e.insert(e.end(), sub.begin(), sub.end());
      }
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

VerificationReport check_code_example(const VerifyOptions& o) {
  VerificationReport report("code-example", "A3");
  ReportTimer timer(report);
  auto b = load({CoxeterType::A, 3}, o);
  auto L = code_A(b->group_ptr());
  Element w = b->group().parse("s2 s1 s3 s2");
  auto c = L.encode(w);
  report.note("code", format_vector(c));
  report.record(c == LehmerVector{0, 2, 2}, [&] { return "L(s2 s1 s3 s2) = " + format_vector(c); });
  return report;
}

VerificationReport check_interval_example(const VerifyOptions& o) {
  VerificationReport report("interval-example", "3412 in S4");
  ReportTimer timer(report);
  auto b = load({CoxeterType::A, 3}, o);
  const auto& g = b->group();
  auto L = code_A(b->group_ptr());
  Element w = g.parse("3412");
  IntPolynomial want{1, 3, 5, 4, 1};
  for (auto r : {HRoute::Direct, HRoute::Complex, HRoute::Maduro}) {
    auto h = h_poly(w, r, L, *b);
    report.record(h == want, [&] { return to_string(r) + " route gives " + h.to_string(); });
  }
  auto J = ideal_of(w, L, *b);
  auto max_points = J.maxima();
  std::set<LehmerVector> maxima(max_points.begin(), max_points.end());
  std::set<LehmerVector> want_maxima;
  for (const char* v : {"2413", "3214", "3412"}) want_maxima.insert(L.encode(g.parse(v)));
  report.record(maxima == want_maxima, [] { return std::string("maxima differ from the codes of 2413, 3214, 3412"); });
  std::set<std::string> meets;
  for (const auto& t : maduro_terms(J.maxima()))
    if (t.subset.size() > 1) meets.insert(g.format(L.decode(t.meet)));
  report.record(meets == std::set<std::string>{"2134", "1423", "3124", "1234"},
                [] { return std::string("meets of maxima differ from 2134, 1423, 3124, 1234"); });
  return report;
}

VerificationReport suite_examples(const VerifyOptions& o) {
  VerificationReport report("examples", "worked examples");
  ReportTimer timer(report);
  report.add_child(check_code_example(o));
  report.add_child(check_interval_example(o));
  return report;
}

VerificationReport suite_codes(const VerifyOptions& o) {
  VerificationReport report("codes", "validity of all codes and their duals");
  ReportTimer timer(report);
  std::vector<SystemSpec> systems;
  for (int n = 1; n <= std::min(5, o.max_rank); ++n) systems.push_back({CoxeterType::A, n});
  for (int n = 2; n <= std::min(4, o.max_rank); ++n) systems.push_back({CoxeterType::B, n});
  for (int n = 4; n <= std::min(5, o.max_rank); ++n) systems.push_back({CoxeterType::D, n});
  if (o.max_rank >= 3) systems.push_back({CoxeterType::H3, 3});
  for (int m = 3; m <= 10; ++m) systems.push_back({CoxeterType::I2, 2, m});
  fan_out<SystemSpec>(report, systems, o, [&](const SystemSpec& s) {
    auto b = load(s, o);
    VerificationReport sys("codes", b->group().system().name());
    std::vector<LehmerCode> codes{default_code(b->group_ptr())};
    if (s.type == CoxeterType::B) codes.push_back(code_B_tilde(b->group_ptr()));
    for (std::size_t i = 0, k = codes.size(); i < k; ++i) codes.push_back(dual_code(codes[i]));
    for (const auto& c : codes) sys.add_child(verify_code(c, *b));
    return sys;
  });
  return report;
}

VerificationReport suite_shellings(const VerifyOptions& o) {
  VerificationReport report("shellings", "linear extensions of order ideals");
  ReportTimer timer(report);
  report.set_seed(o.seed);
  std::vector<OrderIdeal> ideals;
  for (const auto& d : std::vector<std::vector<int>>{{2, 3}, {2, 2, 2}})
    for (auto& J : all_order_ideals(ChainProduct(d))) ideals.push_back(std::move(J));
  std::mt19937_64 rng(o.seed);
  ChainProduct big({3, 3, 4});
  for (int i = 0; i < 100; ++i) ideals.push_back(random_order_ideal(big, rng));
  std::vector<std::uint64_t> seeds(ideals.size());
  for (auto& s : seeds) s = rng();
  std::vector<VerificationReport> parts(ideals.size());
  std::atomic<std::size_t> sampled{0};
  parallel_for(ideals.size(), o.threads, [&](std::size_t i) {
    std::mt19937_64 local(seeds[i]);
    sampled += check_shellings_of(ideals[i], local, parts[i]);
  });
  for (const auto& p : parts) report.absorb(p);
  report.note("ideals", ideals.size());
  report.note("sampled_ideals", sampled.load());
  return report;
}

VerificationReport suite_vd(const VerifyOptions& o) {
  VerificationReport report("vd", "vertex decomposability");
  ReportTimer timer(report);
  std::vector<OrderIdeal> ideals;
  for (const auto& d : boxes_up_to(16))
    for (auto& J : all_order_ideals(ChainProduct(d))) ideals.push_back(std::move(J));
  VerificationReport boxes("vd", "ideals of boxes with at most 16 points");
  {
    ConcurrentReport c(boxes);
    parallel_for(ideals.size(), o.threads, [&](std::size_t i) {
      bool ok = is_vertex_decomposable(build_M_of_ideal(ideals[i]), o.vd_facet_limit);
      c.record(ok, [&] { return ideal_text(ideals[i]) + " in " + format_vector(ideals[i].ambient().degrees()); });
    });
  }
  report.add_child(std::move(boxes));
  if (o.max_rank >= 3) {
    auto b = load({CoxeterType::A, 3}, o);
    auto L = code_A(b->group_ptr());
    VerificationReport s4("vd", "Lehmer complexes of S4");
    auto elems = b->group().elements();
    ConcurrentReport c(s4);
    parallel_for(elems.size(), o.threads, [&](std::size_t i) {
      bool ok = is_vertex_decomposable(lehmer_complex_interval(elems[i], L, *b), o.vd_facet_limit);
      c.record(ok, [&] { return "complex of " + b->group().format(elems[i]); });
    });
    report.add_child(std::move(s4));
  }
  return report;
}

VerificationReport suite_flag(const VerifyOptions& o) {
  VerificationReport report("flag", "flag complexes versus flag ideals");
  ReportTimer timer(report);
  std::vector<OrderIdeal> ideals;
  for (int k = 3; k <= 4; ++k)
    for (auto& J : all_order_ideals(ChainProduct(std::vector<int>(static_cast<std::size_t>(k), 2))))
      ideals.push_back(std::move(J));
  ConcurrentReport c(report);
  std::atomic<std::size_t> flags{0};
  parallel_for(ideals.size(), o.threads, [&](std::size_t i) {
    bool complex_flag = is_flag(build_M_of_ideal(ideals[i]));
    bool ideal_flag = is_flag_ideal(ideals[i]);
    flags += ideal_flag;
    c.record(complex_flag == ideal_flag, [&] {
      return ideal_text(ideals[i]) + ": complex flag " + std::to_string(complex_flag) + ", ideal flag " +
             std::to_string(ideal_flag);
    });
  });
  report.note("ideals", ideals.size());
  report.note("flag_ideals", flags.load());
  return report;
}

VerificationReport suite_maduro(const VerifyOptions& o) {
  VerificationReport report("maduro", "direct, complex and inclusion-exclusion routes");
  ReportTimer timer(report);
  std::vector<SystemSpec> systems;
  for (int n = 1; n <= std::min(4, o.max_rank); ++n) systems.push_back({CoxeterType::A, n});
  if (o.max_rank >= 3) systems.push_back({CoxeterType::B, 3});
  if (o.max_rank >= 4) systems.push_back({CoxeterType::D, 4});
  if (o.max_rank >= 3) systems.push_back({CoxeterType::H3, 3});
  for (int m = 3; m <= 8; ++m) systems.push_back({CoxeterType::I2, 2, m});
  fan_out<SystemSpec>(report, systems, o, [&](const SystemSpec& s) {
    auto b = load(s, o);
    return verify_route_agreement(default_code(b->group_ptr()), *b);
  });
  return report;
}

VerificationReport suite_catalan(const VerifyOptions& o) {
  VerificationReport report("catalan", "principal, lazy Fubini and 312-avoiding");
  ReportTimer timer(report);
  fan_out<int>(report, symmetric_range(o, 3, 7), o, [&](const int& n) {
    SymmetricGroup s(load({CoxeterType::A, n - 1}, o));
    auto r = verify_catalan_equivalence(s);
    r.add_child(verify_312_exponents(s));
    return r;
  });
  return report;
}

VerificationReport suite_unimodal(const VerifyOptions& o) {
  VerificationReport report("unimodal", "unimodal elements and the Lambda bijection");
  ReportTimer timer(report);
  fan_out<int>(report, symmetric_range(o, 3, 6), o, [&](const int& n) {
    SymmetricGroup s(load({CoxeterType::A, n - 1}, o));
    auto r = verify_unimodal_equivalence(s);
    VerificationReport annals("annals", "U" + std::to_string(n));
    for (const auto& u : unimodal_perms(n)) annals.absorb(verify_annals(s, u));
    r.add_child(std::move(annals));
    return r;
  });
  return report;
}

VerificationReport suite_smooth(const VerifyOptions& o) {
  VerificationReport report("smooth", "Poincare polynomials of smooth permutations");
  ReportTimer timer(report);
  fan_out<int>(report, symmetric_range(o, 3, 6), o, [&](const int& n) {
    SymmetricGroup s(load({CoxeterType::A, n - 1}, o));
    auto r = verify_smooth_classification(s);
    r.add_child(verify_smooth_exponents(s));
    return r;
  });
  return report;
}

VerificationReport suite_h3_figure(const VerifyOptions& o) {
  VerificationReport report("h3-figure", "unimodal elements of H3");
  ReportTimer timer(report);
  auto b = load({CoxeterType::H3, 3}, o);
  auto L = default_code(b->group_ptr());
  auto P = principal_set(L, *b);
  auto U = unimodal_subset(L, P);
  auto key = [&](Element w) {
    std::string s;
    for (int x : L.encode(w)) s += std::to_string(x);
    return s;
  };
  std::set<std::string> triples;
  for (Element u : U) triples.insert(key(u));
  const std::set<std::string> figure{"159", "154", "144", "134", "124", "114", "123", "014", "113",
                                     "122", "013", "112", "012", "111", "011", "001", "000"};
  report.note("unimodal", U.size());
  report.record(U.size() == 17, [&] { return std::to_string(U.size()) + " unimodal elements"; });
  report.record(triples == figure, [] { return std::string("code triples differ from the figure"); });

  std::set<std::pair<std::string, std::string>> edges;
  for (Element x : U)
    for (Element y : U) {
      if (x == y || !b->leq(x, y)) continue;
      bool cover = std::none_of(U.begin(), U.end(),
                                [&](Element z) { return z != x && z != y && b->leq(x, z) && b->leq(z, y); });
      if (cover) edges.emplace(key(y), key(x));
    }
  const std::set<std::pair<std::string, std::string>> figure_edges{
      {"159", "154"}, {"154", "144"}, {"144", "134"}, {"134", "124"}, {"124", "114"}, {"124", "123"},
      {"123", "113"}, {"123", "122"}, {"114", "014"}, {"114", "113"}, {"113", "013"}, {"113", "112"},
      {"122", "112"}, {"014", "013"}, {"013", "012"}, {"112", "012"}, {"112", "111"}, {"012", "011"},
      {"111", "011"}, {"011", "001"}, {"001", "000"}};
  report.note("hasse_edges", edges.size());
  report.record(edges == figure_edges, [] { return std::string("Hasse diagram differs from the figure"); });

  auto pal = pal_set(*b);
  report.note("pal", pal.size());
  report.record(pal == h_set(U, *b), [] { return std::string("Pal(H3) differs from h(U)"); });
  report.record(pal == h_set(P, *b), [] { return std::string("Pal(H3) differs from h(Pr)"); });
  return report;
}

VerificationReport suite_d_factorization(const VerifyOptions& o) {
  VerificationReport report("d-factorization", "chain factorization of D4 and D5");
  ReportTimer timer(report);
  std::vector<int> ranks;
  for (int n = 4; n <= std::min(5, o.max_rank); ++n) ranks.push_back(n);
  fan_out<int>(report, ranks, o, [&](const int& n) {
    auto b = load({CoxeterType::D, n}, o);
    auto r = verify_D_factorization(b->group());
    r.add_child(verify_chains(b->group(), *b));
    return r;
  });
  return report;
}

VerificationReport suite_h3_quotients(const VerifyOptions& o) {
  VerificationReport report("h3-quotients", "generalized quotients of H3");
  ReportTimer timer(report);
  auto b = load({CoxeterType::H3, 3}, o);
  report.add_child(verify_H3_quotients(b->group()));
  report.add_child(verify_chains(b->group(), *b));
  return report;
}

VerificationReport suite_strict_inclusions(const VerifyOptions&) { return verify_strict_inclusions(); }

VerificationReport suite_msequence(const VerifyOptions& o) {
  VerificationReport report("msequence", "Macaulay test on interval Poincare polynomials");
  ReportTimer timer(report);
  std::vector<SystemSpec> systems;
  if (o.max_rank >= 4) systems.push_back({CoxeterType::A, 4});
  if (o.max_rank >= 3) systems.push_back({CoxeterType::B, 3});
  if (o.max_rank >= 4) systems.push_back({CoxeterType::D, 4});
  if (o.max_rank >= 3) systems.push_back({CoxeterType::H3, 3});
  systems.push_back({CoxeterType::I2, 2, 8});
  fan_out<SystemSpec>(report, systems, o, [&](const SystemSpec& s) {
    auto b = load(s, o);
    VerificationReport r("msequence", b->group().system().name());
    for (Element w : b->group().elements()) {
      auto h = b->lower_poincare(w);
      r.record(is_m_sequence(h), [&] { return b->group().format(w) + ": " + h.to_string(); });
    }
    return r;
  });
  return report;
}

VerificationReport suite_dihedral(const VerifyOptions& o) {
  VerificationReport report("dihedral", "number of Lehmer codes of I2(m)");
  ReportTimer timer(report);
  for (int m = 3; m <= 5; ++m) {
    auto b = load({CoxeterType::I2, 2, m}, o);
    auto codes = enumerate_dihedral_codes(b->group_ptr(), *b);
    VerificationReport r("dihedral", b->group().system().name());
    r.note("codes", codes.size());
    r.record(codes.size() == (std::size_t{1} << (m - 1)),
             [&] { return std::to_string(codes.size()) + " codes, expected " + std::to_string(1 << (m - 1)); });
    report.add_child(std::move(r));
  }
  return report;
}

VerificationReport suite_exponents(const VerifyOptions& o) {
  VerificationReport report("exponents", "W(q) as a product over the exponents");
  ReportTimer timer(report);
  std::vector<CoxeterSystem> systems;
  for (int n = 1; n <= std::min(7, o.max_rank); ++n) systems.push_back(build_system(CoxeterType::A, n));
  for (int n = 2; n <= std::min(6, o.max_rank); ++n) systems.push_back(build_system(CoxeterType::B, n));
  for (int n = 4; n <= std::min(6, o.max_rank); ++n) systems.push_back(build_system(CoxeterType::D, n));
  if (o.max_rank >= 3) systems.push_back(build_system(CoxeterType::H3, 3));
  for (int m = 3; m <= 12; ++m) systems.push_back(build_system(CoxeterType::I2, 2, m));
  systems.push_back(product_system(build_system(CoxeterType::A, 2), build_system(CoxeterType::A, 1)));
  fan_out<CoxeterSystem>(report, systems, o, [&](const CoxeterSystem& s) {
    auto g = CoxeterGroup::enumerate(s);
    auto e = classification_exponents(s);
    std::vector<int> ns;
    for (int x : e) ns.push_back(x + 1);
    VerificationReport r("exponents", s.name());
    r.note("exponents", format_vector(e));
    r.note("size", g->size());
    r.record(g->poincare_polynomial() == q_analog_product(ns),
             [&] { return "W(q) = " + g->poincare_polynomial().to_string(); });
    r.record(g->exponents() == e, [&] { return "exponents read off W(q): " + format_vector(g->exponents()); });
    r.record(g->size() == s.expected_order(), [&] { return std::to_string(g->size()) + " elements"; });
    return r;
  });
  return report;
}

VerificationReport suite_all(const VerifyOptions& o) {
  VerificationReport report("all", "every suite");
  ReportTimer timer(report);
  for (const auto& n : suite_names())
    if (n != "all") report.add_child(run_suite(n, o));
  return report;
}

std::vector<std::string> suite_names() {
  return {"examples", "codes",      "shellings",      "vd",         "flag",         "maduro",
          "catalan",  "unimodal",   "smooth",         "h3-figure",  "d-factorization", "h3-quotients",
          "strict-inclusions",      "msequence",      "dihedral",   "exponents",    "all"};
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& options) {
  static const std::map<std::string, std::function<VerificationReport(const VerifyOptions&)>> suites{
      {"examples", suite_examples},
      {"codes", suite_codes},
      {"shellings", suite_shellings},
      {"vd", suite_vd},
      {"flag", suite_flag},
      {"maduro", suite_maduro},
      {"catalan", suite_catalan},
      {"unimodal", suite_unimodal},
      {"smooth", suite_smooth},
      {"h3-figure", suite_h3_figure},
      {"d-factorization", suite_d_factorization},
      {"h3-quotients", suite_h3_quotients},
      {"strict-inclusions", suite_strict_inclusions},
      {"msequence", suite_msequence},
      {"dihedral", suite_dihedral},
      {"exponents", suite_exponents},
  };
  if (name == "all") return suite_all(options);
  auto it = suites.find(name);
  if (it == suites.end()) {
    std::string valid;
    for (const auto& n : suite_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown suite '" + name + "'; valid suites: " + valid);
  }
  try {
    return it->second(options);
  } catch (const std::exception& e) {
    VerificationReport r(name, "aborted");
    r.fail(std::string("exception: ") + e.what());
    return r;
  }
}

}  // namespace coxlehmer
