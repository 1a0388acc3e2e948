#include "coxlehmer/cache.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace coxlehmer {

namespace {

std::string file_stem(const CoxeterSystem& s) {
  std::string out;
  for (char c : s.name())
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    else if (c == '(') out += '_';
  return out;
}

nlohmann::json header(const CoxeterSystem& s) {
  return {{"format", kCacheFormatVersion},
          {"system", s.name()},
          {"type", to_string(s.type)},
          {"rank", s.rank},
          {"m", s.dihedral_m},
          {"size", s.expected_order()}};
}

std::optional<BruhatPtr> read(const std::filesystem::path& file, const CoxeterSystem& system) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("header") != header(system)) return std::nullopt;
    auto forms = j.at("forms").get<std::vector<CanonicalForm>>();
    auto lengths = j.at("lengths").get<std::vector<int>>();
    auto covers = j.at("lower_covers").get<std::vector<std::vector<std::uint32_t>>>();
    auto group = CoxeterGroup::from_canonical_forms(system, forms);
    if (lengths.size() != group->size()) return std::nullopt;
    for (std::size_t i = 0; i < lengths.size(); ++i)
      if (group->length(Element(static_cast<std::uint32_t>(i))) != lengths[i]) return std::nullopt;
    return BruhatOrder::from_lower_covers(group, std::move(covers));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void write(const std::filesystem::path& file, const BruhatOrder& bruhat) {
  const auto& g = bruhat.group();
  nlohmann::json j;
  j["header"] = header(g.system());
  auto& forms = j["forms"] = nlohmann::json::array();
  auto& lengths = j["lengths"] = nlohmann::json::array();
  auto& covers = j["lower_covers"] = nlohmann::json::array();
  for (Element w : g.elements()) {
    forms.push_back(g.canonical_form(w));
    lengths.push_back(g.length(w));
    covers.push_back(bruhat.lower_covers(w));
  }
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace

PosetCache::PosetCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<PosetCache> PosetCache::resolve(const std::string& dir) {
  if (!dir.empty()) return PosetCache(dir);
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return PosetCache(env);
  return std::nullopt;
}

std::filesystem::path PosetCache::file_for(const CoxeterSystem& system) const {
  return dir_ / (file_stem(system) + ".v" + std::to_string(kCacheFormatVersion) + ".json");
}

BruhatPtr PosetCache::bruhat(const CoxeterSystem& system) {
  auto file = file_for(system);
  if (auto hit = read(file, system)) {
    last_hit_ = true;
    return *hit;
  }
  last_hit_ = false;
  auto b = BruhatOrder::build(CoxeterGroup::enumerate(system));
  write(file, *b);
  return b;
}

BruhatPtr load_bruhat(const CoxeterSystem& system, PosetCache* cache) {
  if (cache) return cache->bruhat(system);
  return BruhatOrder::build(CoxeterGroup::enumerate(system));
}

}  // namespace coxlehmer
