#include "coxlehmer/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxlehmer/cache.hpp"
#include "coxlehmer/intervals.hpp"
#include "coxlehmer/lehmer.hpp"
#include "coxlehmer/schubert.hpp"
#include "coxlehmer/verify.hpp"

namespace coxlehmer {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CoxeterSystem system_of(const RunConfig& c) {
  CoxeterType t;
  try {
    t = parse_coxeter_type(c.type);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  int rank = c.rank;
  if (t == CoxeterType::H3) rank = 3;
  if (t == CoxeterType::I2) rank = 2;
  try {
    return build_system(t, rank, c.m);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

struct Context {
  BruhatPtr bruhat;
  LehmerCode code;
  const CoxeterGroup& group() const { return bruhat->group(); }
};

Context context_of(const RunConfig& c, std::optional<PosetCache>& cache) {
  auto sys = system_of(c);
  auto b = load_bruhat(sys, cache ? &*cache : nullptr);
  try {
    return {b, code_by_name(b->group_ptr(), c.code)};
  } catch (const std::invalid_argument& e) {
    std::string names;
    for (const auto& n : code_names()) names += " " + n;
    throw UsageError(std::string(e.what()) + "; available codes: default" + names + " (and dual-<name>)");
  }
}

Element element_of(const RunConfig& c, const CoxeterGroup& g) {
  if (c.element == "w0") return g.longest();
  try {
    return g.parse(c.element.value_or(""));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json element_list(const CoxeterGroup& g, const LehmerCode& L, const std::vector<Element>& xs) {
  auto out = nlohmann::json::array();
  for (Element w : xs) out.push_back({{"element", g.format(w)}, {"code", L.encode(w)}});
  return out;
}

int cmd_code(const RunConfig& c, std::optional<PosetCache>& cache, std::ostream& out) {
  auto ctx = context_of(c, cache);
  Element w = element_of(c, ctx.group());
  const auto& v = ctx.code.encode(w);
  if (c.json) {
    out << nlohmann::json{{"system", ctx.group().system().name()},
                          {"code", ctx.code.name()},
                          {"element", ctx.group().format(w)},
                          {"lehmer", v},
                          {"length", ctx.group().length(w)}}
               .dump()
        << '\n';
  } else {
    out << format_vector(v) << "  length " << ctx.group().length(w) << '\n';
  }
  return kExitPass;
}

int cmd_hpoly(const RunConfig& c, const std::string& route, std::size_t maduro_limit, std::optional<PosetCache>& cache,
              std::ostream& out, std::ostream& err) {
  auto ctx = context_of(c, cache);
  Element w = element_of(c, ctx.group());
  std::vector<HRoute> routes;
  if (route == "all") {
    routes = {HRoute::Direct, HRoute::Complex, HRoute::Maduro};
  } else {
    try {
      routes = {parse_route(route)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::map<std::string, IntPolynomial> results;
  for (auto r : routes) {
    try {
      results[to_string(r)] = h_poly(w, r, ctx.code, *ctx.bruhat, maduro_limit);
    } catch (const SizeLimitError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  bool agree = std::all_of(results.begin(), results.end(),
                           [&](const auto& kv) { return kv.second == results.begin()->second; });
  if (c.json) {
    nlohmann::json j{{"system", ctx.group().system().name()}, {"element", ctx.group().format(w)}};
    for (const auto& [name, p] : results) j["routes"][name] = p;
    j["agree"] = agree;
    out << j.dump() << '\n';
  } else {
    for (auto r : routes) out << to_string(r) << ": " << results.at(to_string(r)).to_string() << '\n';
  }
  if (!agree) {
    err << "routes disagree\n";
    return kExitFailure;
  }
  return kExitPass;
}

int cmd_complex(const RunConfig& c, std::optional<PosetCache>& cache, std::ostream& out) {
  auto ctx = context_of(c, cache);
  nlohmann::json j;
  if (c.element) {
    Element w = element_of(c, ctx.group());
    j["element"] = ctx.group().format(w);
    j["complex"] = lehmer_complex_interval(w, ctx.code, *ctx.bruhat);
  } else {
    j["complex"] = lehmer_complex_system(ctx.group());
  }
  j["system"] = ctx.group().system().name();
  out << (c.json ? j.dump() : j.dump(2)) << '\n';
  return kExitPass;
}

int cmd_classify(const RunConfig& c, std::optional<int> n, const std::string& cls, std::optional<PosetCache>& cache,
                 std::ostream& out) {
  nlohmann::json j;
  if (n) {
    if (*n < 2) throw UsageError("--n must be at least 2");
    std::vector<Permutation> perms;
    if (cls == "smooth") {
      perms = smooth_set(*n);
    } else if (cls == "unimodal") {
      perms = unimodal_perms(*n);
    } else if (cls == "principal") {
      for (auto& w : all_permutations(*n))
        if (avoids(w, Permutation::parse("312"))) perms.push_back(std::move(w));
    } else {
      throw UsageError("--class must be smooth, unimodal or principal");
    }
    SymmetricGroup s(load_bruhat(build_system(CoxeterType::A, *n - 1), cache ? &*cache : nullptr));
    auto polys = nlohmann::json::array();
    for (const auto& p : h_set(s, perms)) polys.push_back(p);
    j = {{"n", *n}, {"class", cls}, {"count", perms.size()}, {"polynomials", polys}};
  } else {
    auto ctx = context_of(c, cache);
    auto P = principal_set(ctx.code, *ctx.bruhat);
    auto U = unimodal_subset(ctx.code, P);
    auto pal = nlohmann::json::array();
    for (const auto& p : pal_set(*ctx.bruhat)) pal.push_back(p);
    j = {{"system", ctx.group().system().name()},
         {"code", ctx.code.name()},
         {"principal", element_list(ctx.group(), ctx.code, P)},
         {"unimodal", element_list(ctx.group(), ctx.code, U)},
         {"pal", pal}};
  }
  out << (c.json ? j.dump() : j.dump(2)) << '\n';
  return kExitPass;
}

int cmd_verify(const RunConfig& c, const std::string& suite, const VerifyOptions& base, const std::string& output,
               std::optional<PosetCache>& cache, std::ostream& out) {
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string valid;
    for (const auto& n : names) valid += " " + n;
    throw UsageError("unknown suite '" + suite + "'; valid suites:" + valid);
  }
  VerifyOptions o = base;
  o.seed = c.seed;
  o.threads = c.threads;
  o.cache = cache ? &*cache : nullptr;
  auto report = run_suite(suite, o);
  std::string text = c.json ? report.to_json().dump(2) + "\n" : report.to_text();
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) throw UsageError("cannot write " + output);
    f << text;
    out << (report.pass() ? "PASS " : "FAIL ") << suite << '\n';
  }
  return report.pass() ? kExitPass : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lehmer codes of finite Coxeter groups", "coxlehmer"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--cache", cfg.cache_dir, std::string("Poset cache directory (default $") + kCacheEnvVar + ")");
  app.add_option("--seed", cfg.seed, "Seed for sampling suites");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "A, B, D, H3 or I2")->capture_default_str();
    sub->add_option("--rank", cfg.rank, "Rank n")->capture_default_str();
    sub->add_option("--m", cfg.m, "m for I2(m)");
    sub->add_option("--code", cfg.code, "Code name: default, LA, LB, LBtilde, LD, LH3, LI2, dual-<name>")
        ->capture_default_str();
    sub->add_option("--word,--element,element", cfg.element,
                    "Element: generator word \"s2 s1 s3 s2\", one-line 3412, signed [-2,1,3] or w0");
  };
  auto* code = app.add_subcommand("code", "Print L(w) and l(w)");
  add_system(code);
  auto* hpoly = app.add_subcommand("hpoly", "Poincare polynomial of [e, w]");
  add_system(hpoly);
  std::string route = "direct";
  std::size_t maduro_limit = kDefaultMaduroLimit;
  hpoly->add_option("--route", route, "direct, complex, maduro or all")->capture_default_str();
  hpoly->add_option("--maduro-limit", maduro_limit, "Largest number of maxima for the maduro route")
      ->capture_default_str();
  auto* complex = app.add_subcommand("complex", "Lehmer complex of the group or of [e, w] as JSON");
  add_system(complex);
  auto* classify = app.add_subcommand("classify", "Principal, unimodal and palindromic listings");
  add_system(classify);
  std::optional<int> n;
  std::string cls = "smooth";
  classify->add_option("--n", n, "Classify permutations of S_n instead");
  classify->add_option("--class", cls, "smooth, unimodal or principal (with --n)")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::string output;
  VerifyOptions vopts;
  std::optional<int> vn;
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--n", vn, "Restrict symmetric-group suites to S_n");
  verify->add_option("--max-rank", vopts.max_rank, "Largest rank built by any suite")->capture_default_str();
  verify->add_option("--vd-limit", vopts.vd_facet_limit, "Facet limit for vertex decomposition")
      ->capture_default_str();
  verify->add_option("--output,-o", output, "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    auto cache = PosetCache::resolve(cfg.cache_dir);
    if (*code) return cmd_code(cfg, cache, out);
    if (*hpoly) return cmd_hpoly(cfg, route, maduro_limit, cache, out, err);
    if (*complex) return cmd_complex(cfg, cache, out);
    if (*classify) return cmd_classify(cfg, n, cls, cache, out);
    vopts.n = vn;
    return cmd_verify(cfg, suite, vopts, output, cache, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace coxlehmer
