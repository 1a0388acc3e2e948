#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxlehmer/cache.hpp"
#include "coxlehmer/cli.hpp"
#include "coxlehmer/verify.hpp"

using namespace coxlehmer;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "coxlehmer");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("coxlehmer-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("code subcommand") {
  auto r = run({"code", "--type", "A", "--rank", "3", "--word", "s2 s1 s3 s2"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("(0,2,2)", 0) == 0);
  CHECK(run({"code", "--type", "H3", "--word", ""}).out.rfind("(0,0,0)", 0) == 0);
  CHECK(run({"code", "--type", "B", "--rank", "2", "--word", "s2 s1 s2"}).out.rfind("(0,3)", 0) == 0);
  // Type D words accept s0.
  CHECK(run({"code", "--type", "D", "--rank", "4", "--word", "s0"}).code == kExitPass);

  auto j = nlohmann::json::parse(run({"code", "--json", "--type", "A", "--rank", "3", "3412"}).out);
  CHECK(j["lehmer"] == nlohmann::json::parse("[0,2,2]"));
  CHECK(j["length"] == 4);
  CHECK(j["system"] == "A3");
}

TEST_CASE("usage errors") {
  auto bad_word = run({"code", "--type", "A", "--rank", "3", "--word", "s2 s9"});
  CHECK(bad_word.code == kExitUsage);
  CHECK(bad_word.err.find("position") != std::string::npos);
  auto bad_code = run({"code", "--code", "LX"});
  CHECK(bad_code.code == kExitUsage);
  CHECK(bad_code.err.find("LH3") != std::string::npos);
  auto bad_suite = run({"verify", "nope"});
  CHECK(bad_suite.code == kExitUsage);
  CHECK(bad_suite.err.find("strict-inclusions") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"code", "--rank", "x"}).code == kExitUsage);
  CHECK(run({"code", "--type", "E"}).code == kExitUsage);
  CHECK(run({"hpoly", "--route", "fast"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("hpoly subcommand") {
  auto r = run({"hpoly", "--json", "--type", "A", "--rank", "3", "--element", "3412", "--route", "all"});
  CHECK(r.code == kExitPass);
  auto j = nlohmann::json::parse(r.out);
  auto want = nlohmann::json::parse("[1,3,5,4,1]");
  CHECK(j["routes"]["direct"] == want);
  CHECK(j["routes"]["complex"] == want);
  CHECK(j["routes"]["maduro"] == want);
  CHECK(j["agree"] == true);
  CHECK(nlohmann::json::parse(run({"hpoly", "--json", "--type", "A", "--rank", "2"}).out)["routes"]["direct"] ==
        nlohmann::json::parse("[1]"));
  // [2][6][10] = (1+q)(1+...+q^5)(1+...+q^9), expanded independently.
  std::vector<int> product(16, 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 10; ++c) ++product[static_cast<std::size_t>(a + b + c)];
  auto h3 = nlohmann::json::parse(run({"hpoly", "--json", "--type", "H3", "w0", "--route", "all"}).out);
  CHECK(h3["routes"]["maduro"] == nlohmann::json(product));
  auto limited = run({"hpoly", "--type", "A", "--rank", "3", "3412", "--route", "maduro", "--maduro-limit", "2"});
  CHECK(limited.code == kExitUsage);
  CHECK(limited.err.find("error") != std::string::npos);
}

TEST_CASE("complex and classify subcommands") {
  auto c = nlohmann::json::parse(run({"complex", "--json", "--type", "A", "--rank", "3", "3412"}).out);
  CHECK(c["complex"]["facets"].size() == 14);
  auto whole = nlohmann::json::parse(run({"complex", "--json", "--type", "I2", "--m", "5"}).out);
  CHECK(whole["complex"]["facets"].size() == 10);

  auto s = nlohmann::json::parse(run({"classify", "--json", "--n", "4", "--class", "smooth"}).out);
  CHECK(s["count"] == 22);
  CHECK(s["polynomials"].size() == 8);
  auto u = nlohmann::json::parse(run({"classify", "--json", "--n", "5", "--class", "unimodal"}).out);
  CHECK(u["count"] == 16);
  CHECK(u["polynomials"].size() == 16);
  auto p = nlohmann::json::parse(run({"classify", "--json", "--n", "5", "--class", "principal"}).out);
  CHECK(p["count"] == 42);
  auto h3 = nlohmann::json::parse(run({"classify", "--json", "--type", "H3"}).out);
  CHECK(h3["unimodal"].size() == 17);
  CHECK(h3["pal"].size() == 17);
  CHECK(run({"classify", "--n", "4", "--class", "odd"}).code == kExitUsage);
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "catalan", "--n", "5", "--json"});
  CHECK(r.code == kExitPass);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["children"][0]["notes"]["principal"] == 42);
  auto fig = run({"verify", "h3-figure"});
  CHECK(fig.code == kExitPass);
  CHECK(fig.out.rfind("PASS", 0) == 0);
  CHECK(run({"verify", "all", "--max-rank", "4"}).code == kExitPass);

  auto dir = scratch_dir("report");
  std::filesystem::create_directories(dir);
  auto file = (dir / "report.json").string();
  auto w = run({"verify", "dihedral", "--json", "-o", file});
  CHECK(w.code == kExitPass);
  CHECK(w.out == "PASS dihedral\n");
  std::ifstream in(file);
  CHECK(nlohmann::json::parse(in)["check"] == "dihedral");
}

TEST_CASE("poset cache") {
  auto dir = scratch_dir("cache");
  PosetCache cache(dir);
  auto sys = build_system(CoxeterType::B, 3);
  auto cold = cache.bruhat(sys);
  CHECK_FALSE(cache.last_hit());
  CHECK(std::filesystem::exists(cache.file_for(sys)));
  auto warm = cache.bruhat(sys);
  CHECK(cache.last_hit());
  CHECK(warm->size() == cold->size());
  CHECK(warm->cover_count() == cold->cover_count());
  for (Element u : cold->group().elements())
    for (Element v : cold->group().elements()) {
      Element wu = *warm->group().find(cold->group().canonical_form(u));
      Element wv = *warm->group().find(cold->group().canonical_form(v));
      CHECK(cold->leq(u, v) == warm->leq(wu, wv));
    }

  // A file with the wrong format version or garbage is rebuilt.
  {
    std::ofstream f(cache.file_for(sys));
    f << "{\"header\": {\"format\": 0}}";
  }
  cache.bruhat(sys);
  CHECK_FALSE(cache.last_hit());
  cache.bruhat(sys);
  CHECK(cache.last_hit());

  auto r = run({"--cache", dir.string(), "verify", "catalan", "--n", "4"});
  CHECK(r.code == kExitPass);
  CHECK(std::filesystem::exists(cache.file_for(build_system(CoxeterType::A, 3))));
  CHECK(PosetCache::resolve("x").has_value());
}

TEST_CASE("parallel_for") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  VerifyOptions o;
  o.threads = 3;
  CHECK(run_suite("maduro", o).pass());
  auto threaded = run_suite("shellings", o).to_json();
  CHECK(threaded["seed"] == 1);
  o.threads = 1;
  auto serial = run_suite("shellings", o).to_json();
  CHECK(threaded["instances"] == serial["instances"]);
  CHECK(threaded["notes"] == serial["notes"]);
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}
