// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// bound. Exits nonzero when any criterion fails or runs over its bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "coxlehmer/verify.hpp"

using namespace coxlehmer;

namespace {

struct Criterion {
  int id;
  std::string title;
  double bound_seconds;
  std::function<VerificationReport(const VerifyOptions&)> run;
  // Further exact checks on the notes of the report.
  std::function<bool(const VerificationReport&)> extra = [](const VerificationReport&) { return true; };
};

const VerificationReport* find_child(const VerificationReport& r, const std::string& instance) {
  for (const auto& c : r.children())
    if (c.instance() == instance) return &c;
  return nullptr;
}

}  // namespace

int main() {
  VerifyOptions o;
  o.seed = 1;
  o.max_rank = 6;
  o.vd_facet_limit = 24;

  const std::vector<Criterion> criteria{
      {1, "L_A3(s2 s1 s3 s2) = (0,2,2)", 1, check_code_example},
      {2, "3412 interval: three routes, maxima and meets", 1, check_interval_example},
      {3, "code validity for A1-A5, B2-B4, D4-D5, H3, I2(3..10) and duals", 120, suite_codes},
      {4, "Catalan classification for S3..S7", 120, suite_catalan,
       [](const VerificationReport& r) {
         const std::vector<int> expected{5, 14, 42, 132, 429};
         if (r.children().size() != expected.size()) return false;
         for (std::size_t i = 0; i < expected.size(); ++i)
           if (r.children()[i].notes().value("principal", -1) != expected[i]) return false;
         return true;
       }},
      {5, "smooth and unimodal Poincare polynomials for S3..S6", 180, suite_smooth,
       [](const VerificationReport& r) {
         if (r.children().size() != 4) return false;
         for (std::size_t i = 0; i < 4; ++i)
           if (r.children()[i].notes().value("smooth_polynomials", -1) != (1 << (i + 2))) return false;
         return true;
       }},
      {6, "H3 unimodal triples, Hasse diagram and Pal(H3)", 30, suite_h3_figure,
       [](const VerificationReport& r) { return r.notes().value("unimodal", -1) == 17; }},
      {7, "shellings from linear extensions of order ideals", 180, suite_shellings},
      {8, "vertex decomposability of M_d(J) and of S4 Lehmer complexes", 180, suite_vd,
       [](const VerificationReport& r) {
         const auto* s4 = find_child(r, "Lehmer complexes of S4");
         return s4 && s4->instances() == 24;
       }},
      {9, "flag complexes versus flag ideals over [2]^3 and [2]^4", 60, suite_flag,
       [](const VerificationReport& r) { return r.notes().value("ideals", -1) == 19 + 167; }},
      {10, "Macaulay test on h_w for A4, B3, D4, H3, I2(8)", 60, suite_msequence,
       [](const VerificationReport& r) { return r.children().size() == 5; }},
      {11, "D4 and D5 quotient equality and chain factorization", 60, suite_d_factorization,
       [](const VerificationReport& r) { return r.children().size() == 2; }},
      {12, "H3 five-set equality, factorization and 20-element quotient", 10, suite_h3_quotients,
       [](const VerificationReport& r) {
         const auto* h = find_child(r, "H3");
         return h && h->notes().value("max_quotient_size", -1) == 20;
       }},
      {13, "2^(m-1) Lehmer codes of I2(m) for m = 3, 4, 5", 30, suite_dihedral,
       [](const VerificationReport& r) {
         if (r.children().size() != 3) return false;
         for (std::size_t i = 0; i < 3; ++i)
           if (r.children()[i].notes().value("codes", -1) != (1 << (i + 2))) return false;
         return true;
       }},
      {14, "Pal versus unimodal sizes for B3, B4, D4, D5", 300, suite_strict_inclusions,
       [](const VerificationReport& r) { return r.children().size() == 5; }},
      {15, "W(q) = prod [e_i + 1]_q for every implemented system", 30, suite_exponents,
       [](const VerificationReport& r) {
         const auto* h3 = find_child(r, "H3");
         return h3 && h3->notes().value("exponents", std::string()) == "(1,5,9)";
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    bool ok = false;
    try {
      report = c.run(o);
      ok = report.pass() && c.extra(report);
    } catch (const std::exception& e) {
      std::cerr << "criterion " << c.id << " threw: " << e.what() << '\n';
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.bound_seconds;
    bool pass = ok && in_time;
    failures += !pass;
    std::printf("%s criterion %2d: %s (%.2f s, bound %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                seconds, c.bound_seconds);
    if (!pass) std::cerr << report.to_text();
  }
  return failures == 0 ? 0 : 1;
}
