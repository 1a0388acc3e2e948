#include "coxlehmer/lehmer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace coxlehmer {

namespace {

void require_type(const CoxeterGroup& g, CoxeterType t, const char* what) {
  if (g.system().type != t)
    throw std::invalid_argument(std::string(what) + " needs a group of type " + to_string(t) + ", got " +
                                g.system().name());
}

std::string element_text(const CoxeterGroup& g, Element w) { return g.format(w); }

const nlohmann::json& chain_data() {
  static const nlohmann::json data = nlohmann::json::parse(detail::kChainDataJson);
  return data;
}

Element word_product(const CoxeterGroup& g, const std::vector<int>& labels) { return g.apply_label_word(labels); }

}  // namespace

std::string format_vector(const LehmerVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

LehmerCode::LehmerCode(GroupPtr group, std::string name, std::vector<int> bounds, std::vector<LehmerVector> table)
    : group_(std::move(group)), name_(std::move(name)), bounds_(std::move(bounds)), table_(std::move(table)) {
  if (!group_) throw std::invalid_argument("LehmerCode: null group");
  if (table_.size() != group_->size())
    throw std::invalid_argument("LehmerCode: table has " + std::to_string(table_.size()) + " entries for a group of order " +
                                std::to_string(group_->size()));
  for (int b : bounds_) {
    if (b < 0) throw std::invalid_argument("LehmerCode: negative bound");
    if (box_size_ > (std::size_t{1} << 40) / static_cast<std::size_t>(b + 1))
      throw SizeLimitError("LehmerCode: box too large");
    box_size_ *= static_cast<std::size_t>(b + 1);
  }
  inverse_.assign(box_size_, kNoPreimage);
  for (std::size_t w = 0; w < table_.size(); ++w) {
    if (!in_box(table_[w])) continue;
    auto& slot = inverse_[box_index(table_[w])];
    if (slot == kNoPreimage) slot = static_cast<std::uint32_t>(w);
  }
}

std::vector<int> LehmerCode::degrees() const {
  std::vector<int> d(bounds_);
  for (int& x : d) ++x;
  return d;
}

bool LehmerCode::in_box(const LehmerVector& x) const {
  if (x.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] > bounds_[i]) return false;
  return true;
}

bool LehmerCode::has_preimage(const LehmerVector& x) const {
  return in_box(x) && inverse_[box_index(x)] != kNoPreimage;
}

Element LehmerCode::decode(const LehmerVector& x) const {
  if (!in_box(x)) throw std::out_of_range("decode: " + format_vector(x) + " is outside the box of " + name_);
  auto id = inverse_[box_index(x)];
  if (id == kNoPreimage) throw std::out_of_range("decode: " + format_vector(x) + " has no preimage under " + name_);
  return Element(id);
}

std::size_t LehmerCode::box_index(const LehmerVector& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < bounds_.size(); ++i) idx = idx * static_cast<std::size_t>(bounds_[i] + 1) + static_cast<std::size_t>(x[i]);
  return idx;
}

LehmerVector LehmerCode::box_point(std::size_t index) const {
  LehmerVector x(bounds_.size());
  for (std::size_t i = bounds_.size(); i-- > 0;) {
    auto radix = static_cast<std::size_t>(bounds_[i] + 1);
    x[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return x;
}

LehmerCode code_from_quotients(GroupPtr group, std::vector<int> chain, std::vector<int> bounds, std::string name) {
  if (static_cast<int>(chain.size()) != group->rank())
    throw std::invalid_argument("code_from_quotients: chain must list every generator once");
  std::vector<LehmerVector> table(group->size());
  for (Element w : group->elements()) {
    auto factors = group->quotient_factorization(w, chain);
    LehmerVector v(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) v[i] = group->length(factors[i]);
    table[w.index()] = std::move(v);
  }
  return LehmerCode(std::move(group), std::move(name), std::move(bounds), std::move(table));
}

LehmerCode code_I2(GroupPtr group) {
  require_type(*group, CoxeterType::I2, "code_I2");
  int m = group->system().dihedral_m;
  return code_from_quotients(group, group->system().generator_order, {1, m - 1}, "LI2");
}

LehmerCode code_A(GroupPtr group) {
  require_type(*group, CoxeterType::A, "code_A");
  std::vector<int> bounds(static_cast<std::size_t>(group->rank()));
  std::iota(bounds.begin(), bounds.end(), 1);
  return code_from_quotients(group, group->system().generator_order, bounds, "LA");
}

namespace {

void check_B_top_chain(const CoxeterGroup& g) {
  int n = g.rank();
  GeneratorSet I = GeneratorSet::all(n);
  I.erase(n - 1);
  auto q = g.parabolic_quotient(I, GeneratorSet::all(n));
  std::ostringstream err;
  if (static_cast<int>(q.size()) != 2 * n) {
    err << "maximal quotient of " << g.system().name() << " has " << q.size() << " elements, expected " << 2 * n;
    throw ConsistencyError(err.str());
  }
  std::sort(q.begin(), q.end(), [&](Element a, Element b) { return g.length(a) < g.length(b); });
  for (int k = 0; k < 2 * n; ++k) {
    if (g.length(q[static_cast<std::size_t>(k)]) != k) {
      err << "maximal quotient of " << g.system().name() << " has no element of length " << k;
      throw ConsistencyError(err.str());
    }
  }
  for (int k = 1; k < 2 * n; ++k) {
    auto below = subword_lower_interval(g, q[static_cast<std::size_t>(k)]);
    if (std::find(below.begin(), below.end(), q[static_cast<std::size_t>(k) - 1]) == below.end()) {
      err << "maximal quotient of " << g.system().name() << " is not a chain: " << g.format(q[static_cast<std::size_t>(k) - 1])
          << " is not below " << g.format(q[static_cast<std::size_t>(k)]);
      throw ConsistencyError(err.str());
    }
  }
}

std::vector<int> odd_bounds(int n) {
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = 2 * i + 1;
  return b;
}

}  // namespace

LehmerCode code_B(GroupPtr group) {
  require_type(*group, CoxeterType::B, "code_B");
  check_B_top_chain(*group);
  return code_from_quotients(group, group->system().generator_order, odd_bounds(group->rank()), "LB");
}

LehmerCode code_B_tilde(GroupPtr group) {
  require_type(*group, CoxeterType::B, "code_B_tilde");
  int n = group->rank();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (n >= 2) std::swap(order[0], order[1]);
  auto code = code_from_quotients(group, order, odd_bounds(n), "LBtilde");
  code.set_experimental(true);
  return code;
}

LehmerCode code_D(GroupPtr group) {
  require_type(*group, CoxeterType::D, "code_D");
  const auto& g = *group;
  int n = g.rank();
  std::vector<std::vector<Element>> chains;
  for (int i = 1; i < n; ++i) chains.push_back(chain_elements(g, "X" + std::to_string(i)));
  chains.push_back(chain_elements(g, "Y" + std::to_string(n)));

  std::vector<int> bounds;
  for (const auto& c : chains) bounds.push_back(static_cast<int>(c.size()) - 1);

  std::vector<LehmerVector> table(g.size());
  std::vector<char> seen(g.size(), 0);
  LehmerVector x(chains.size(), 0);
  std::size_t count = 0;
  while (true) {
    Element w = g.identity();
    int total = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      Element f = chains[i][static_cast<std::size_t>(x[i])];
      w = g.multiply(w, f);
      total += g.length(f);
    }
    if (g.length(w) != total)
      throw ConsistencyError("code_D: lengths are not additive at " + format_vector(x) + " in " + g.system().name());
    if (seen[w.index()])
      throw ConsistencyError("code_D: factorization is not unique for " + g.format(w) + " in " + g.system().name());
    seen[w.index()] = 1;
    table[w.index()] = x;
    ++count;
    std::size_t i = chains.size();
    while (i > 0 && x[i - 1] == bounds[i - 1]) x[--i] = 0;
    if (i == 0) break;
    ++x[i - 1];
  }
  if (count != g.size())
    throw ConsistencyError("code_D: chain product has " + std::to_string(count) + " elements, group has " +
                           std::to_string(g.size()));
  return LehmerCode(std::move(group), "LD", std::move(bounds), std::move(table));
}

LehmerCode code_H3(GroupPtr group) {
  require_type(*group, CoxeterType::H3, "code_H3");
  const auto& g = *group;
  auto X = chain_elements(g, "X");
  auto Y = chain_elements(g, "Y");
  auto Z = chain_elements(g, "Z");
  std::vector<LehmerVector> table(g.size());
  std::vector<char> seen(g.size(), 0);
  auto place = [&](Element u, int first, int second) {
    for (Element x : X) {
      Element w = g.multiply(u, x);
      if (g.length(w) != g.length(u) + g.length(x))
        throw ConsistencyError("code_H3: lengths are not additive for " + g.format(u) + " * " + g.format(x));
      if (seen[w.index()]) throw ConsistencyError("code_H3: " + g.format(w) + " is reached twice");
      seen[w.index()] = 1;
      table[w.index()] = {first, second, g.length(x)};
    }
  };
  for (Element u : Y) place(u, 0, g.length(u));
  for (Element u : Z) place(u, 1, g.length(u) - 1);
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(g.size()))
    throw ConsistencyError("code_H3: (Y + Z) X does not cover H3");
  return LehmerCode(std::move(group), "LH3", {1, 5, 9}, std::move(table));
}

LehmerCode dual_code(const LehmerCode& code) {
  const auto& g = code.group();
  std::vector<LehmerVector> table(g.size());
  for (Element w : g.elements()) table[w.index()] = code.encode(g.inverse(w));
  std::string name = code.name().rfind("dual-", 0) == 0 ? code.name().substr(5) : "dual-" + code.name();
  LehmerCode d(code.group_ptr(), name, code.bounds(), std::move(table));
  d.set_experimental(code.experimental());
  return d;
}

LehmerCode product_code(GroupPtr product, const LehmerCode& first, const LehmerCode& second) {
  const auto& sys = product->system();
  if (sys.type != CoxeterType::Product || sys.factors.size() != 2)
    throw std::invalid_argument("product_code needs a product of two systems, got " + sys.name());
  if (sys.factors[0].name() != first.group().system().name() || sys.factors[1].name() != second.group().system().name())
    throw std::invalid_argument("product_code: factor mismatch, " + sys.name() + " vs " + first.group().system().name() +
                                " x " + second.group().system().name());
  std::vector<LehmerVector> table(product->size());
  for (Element w : product->elements()) {
    auto [fa, fb] = product->split_product_form(w);
    auto a = first.group().find(fa);
    auto b = second.group().find(fb);
    if (!a || !b) throw ConsistencyError("product_code: component of " + product->format(w) + " not found");
    LehmerVector v = first.encode(*a);
    const auto& tail = second.encode(*b);
    v.insert(v.end(), tail.begin(), tail.end());
    table[w.index()] = std::move(v);
  }
  std::vector<int> bounds = first.bounds();
  bounds.insert(bounds.end(), second.bounds().begin(), second.bounds().end());
  return LehmerCode(std::move(product), "product(" + first.name() + "," + second.name() + ")", std::move(bounds),
                    std::move(table));
}

LehmerCode default_code(GroupPtr group) {
  switch (group->system().type) {
    case CoxeterType::A: return code_A(group);
    case CoxeterType::B: return code_B(group);
    case CoxeterType::D: return code_D(group);
    case CoxeterType::H3: return code_H3(group);
    case CoxeterType::I2: return code_I2(group);
    case CoxeterType::Product: {
      const auto& f = group->system().factors;
      auto a = CoxeterGroup::enumerate(f.at(0));
      auto b = CoxeterGroup::enumerate(f.at(1));
      return product_code(group, default_code(a), default_code(b));
    }
  }
  throw std::logic_error("default_code: unknown type");
}

std::vector<std::string> code_names() { return {"LA", "LB", "LBtilde", "LD", "LH3", "LI2"}; }

LehmerCode code_by_name(GroupPtr group, std::string_view name) {
  if (name.rfind("dual-", 0) == 0) return dual_code(code_by_name(std::move(group), name.substr(5)));
  if (name == "default") return default_code(group);
  if (name == "LA") return code_A(group);
  if (name == "LB") return code_B(group);
  if (name == "LBtilde") return code_B_tilde(group);
  if (name == "LD") return code_D(group);
  if (name == "LH3") return code_H3(group);
  if (name == "LI2") return code_I2(group);
  throw std::invalid_argument("unknown code '" + std::string(name) + "'");
}

VerificationReport verify_code(const LehmerCode& code, const BruhatOrder& bruhat) {
  const auto& g = code.group();
  if (&bruhat.group() != &g) throw std::invalid_argument("verify_code: Bruhat order belongs to a different group");
  VerificationReport report("code-validity", code.name() + " on " + g.system().name());
  ReportTimer timer(report);
  report.note("elements", g.size());
  report.note("box_size", code.box_size());

  VerificationReport bij("bijectivity", code.name());
  if (code.box_size() != g.size())
    bij.fail("box has " + std::to_string(code.box_size()) + " points, group has " + std::to_string(g.size()));
  std::vector<std::uint32_t> owner(code.box_size(), 0xffffffffU);
  for (Element w : g.elements()) {
    const auto& v = code.encode(w);
    if (!code.in_box(v)) {
      bij.fail(element_text(g, w) + " -> " + format_vector(v) + " is outside the box");
      continue;
    }
    auto& slot = owner[code.box_index(v)];
    bool fresh = slot == 0xffffffffU;
    bij.record(fresh, [&] {
      return element_text(g, w) + " and " + element_text(g, Element(slot)) + " both map to " + format_vector(v);
    });
    if (fresh) slot = w.index();
  }

  VerificationReport rank("rank", code.name());
  for (Element w : g.elements()) {
    const auto& v = code.encode(w);
    int sum = std::accumulate(v.begin(), v.end(), 0);
    rank.record(sum == g.length(w), [&] {
      return element_text(g, w) + " has length " + std::to_string(g.length(w)) + " but code " + format_vector(v);
    });
  }

  VerificationReport morph("morphism", code.name());
  for (std::size_t idx = 0; idx < code.box_size(); ++idx) {
    if (owner[idx] == 0xffffffffU) continue;
    LehmerVector x = code.box_point(idx);
    Element u(owner[idx]);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == code.bounds()[i]) continue;
      LehmerVector y = x;
      ++y[i];
      auto t = owner[code.box_index(y)];
      if (t == 0xffffffffU) continue;
      Element w(t);
      morph.record(bruhat.leq(u, w), [&] {
        return "L^-1" + format_vector(x) + " = " + element_text(g, u) + " is not below L^-1" + format_vector(y) + " = " +
               element_text(g, w);
      });
    }
  }
  report.add_child(std::move(bij));
  report.add_child(std::move(rank));
  report.add_child(std::move(morph));
  return report;
}

namespace {
constexpr int kMaxDihedralSearch = 8;
}

std::vector<LehmerCode> enumerate_dihedral_codes(GroupPtr group, const BruhatOrder& bruhat) {
  require_type(*group, CoxeterType::I2, "enumerate_dihedral_codes");
  int m = group->system().dihedral_m;
  if (m > kMaxDihedralSearch)
    throw SizeLimitError("enumerate_dihedral_codes: exhaustive search is limited to m <= " +
                         std::to_string(kMaxDihedralSearch) + ", got m = " + std::to_string(m));
  const auto& g = *group;
  std::vector<std::vector<Element>> by_rank(static_cast<std::size_t>(m) + 1);
  for (Element w : g.elements()) by_rank[static_cast<std::size_t>(g.length(w))].push_back(w);
  std::vector<int> bounds{1, m - 1};
  std::vector<LehmerCode> out;
  for (std::uint32_t mask = 0; mask < (1U << (m - 1)); ++mask) {
    std::vector<LehmerVector> table(g.size());
    table[g.identity().index()] = {0, 0};
    table[g.longest().index()] = {1, m - 1};
    for (int k = 1; k < m; ++k) {
      const auto& pair = by_rank[static_cast<std::size_t>(k)];
      bool swap = (mask >> (k - 1)) & 1U;
      table[pair[swap ? 1 : 0].index()] = {0, k};
      table[pair[swap ? 0 : 1].index()] = {1, k - 1};
    }
    LehmerCode candidate(group, "LI2-variant-" + std::to_string(mask), bounds, std::move(table));
    if (verify_code(candidate, bruhat).pass()) out.push_back(std::move(candidate));
  }
  return out;
}

LehmerVector code_A_inversions(const Permutation& w) {
  int n = w.size();
  LehmerVector v(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i < k; ++i)
      if (w.inverse_at(i) > w.inverse_at(k)) ++v[static_cast<std::size_t>(k) - 1];
  return v;
}

LehmerVector classic_lehmer(const Permutation& w) {
  int n = w.size();
  LehmerVector v(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++v[static_cast<std::size_t>(i) - 1];
  return v;
}

LehmerVector code_L_n(const LehmerCode& code_a, Element w) {
  LehmerVector v{0};
  const auto& tail = code_a.encode(w);
  v.insert(v.end(), tail.begin(), tail.end());
  return v;
}

Permutation to_permutation(const CoxeterGroup& group, Element w) {
  require_type(group, CoxeterType::A, "to_permutation");
  const auto& f = group.canonical_form(w);
  return Permutation(std::vector<int>(f.begin(), f.end()));
}

Element from_permutation(const CoxeterGroup& group, const Permutation& p) {
  require_type(group, CoxeterType::A, "from_permutation");
  if (p.size() != group.rank() + 1)
    throw std::invalid_argument("from_permutation: " + p.to_string() + " is not in " + group.system().name());
  CanonicalForm f(p.one_line().begin(), p.one_line().end());
  return *group.find(f);
}

ChainWords chain_words(const std::string& system_name) {
  const auto& data = chain_data();
  if (!data.contains(system_name)) throw std::out_of_range("no chain data for " + system_name);
  ChainWords out;
  for (const auto& [name, words] : data.at(system_name).items()) out[name] = words.get<std::vector<std::vector<int>>>();
  return out;
}

std::vector<Element> chain_elements(const CoxeterGroup& group, const std::string& chain) {
  auto words = chain_words(group.system().name());
  auto it = words.find(chain);
  if (it == words.end()) throw std::out_of_range("no chain " + chain + " for " + group.system().name());
  std::vector<Element> out;
  for (const auto& w : it->second) {
    Element e = word_product(group, w);
    if (group.length(e) != static_cast<int>(w.size()))
      throw ConsistencyError("chain " + chain + " of " + group.system().name() + " contains a non-reduced word");
    out.push_back(e);
  }
  return out;
}

namespace {

std::size_t expected_chain_size(CoxeterType type, const std::string& name) {
  if (type == CoxeterType::H3) return name == "X" ? 10 : 6;
  int i = std::stoi(name.substr(1));
  return name[0] == 'X' ? static_cast<std::size_t>(2 * i) : static_cast<std::size_t>(i);
}

}  // namespace

VerificationReport verify_chains(const CoxeterGroup& group, const BruhatOrder& bruhat) {
  VerificationReport report("chains-saturated", group.system().name());
  ReportTimer timer(report);
  for (const auto& [name, words] : chain_words(group.system().name())) {
    auto elems = chain_elements(group, name);
    std::size_t want = expected_chain_size(group.system().type, name);
    report.record(elems.size() == want, [&] {
      return name + " has " + std::to_string(elems.size()) + " elements, expected " + std::to_string(want);
    });
    for (std::size_t k = 1; k < elems.size(); ++k) {
      const auto& covers = bruhat.lower_covers(elems[k]);
      bool ok = std::find(covers.begin(), covers.end(), elems[k - 1].index()) != covers.end();
      report.record(ok, [&] {
        return name + ": " + group.format(elems[k - 1]) + " is not covered by " + group.format(elems[k]);
      });
    }
  }
  return report;
}

VerificationReport verify_D_factorization(const CoxeterGroup& g) {
  require_type(g, CoxeterType::D, "verify_D_factorization");
  int n = g.rank();
  VerificationReport report("D-structure", g.system().name());
  ReportTimer timer(report);

  VerificationReport eq("quotient-set-equality", g.system().name());
  auto Yprev = chain_elements(g, "Y" + std::to_string(n - 1));
  auto Xprev = chain_elements(g, "X" + std::to_string(n - 1));
  auto Yn = chain_elements(g, "Y" + std::to_string(n));
  GeneratorSet I = GeneratorSet::all(n);
  I.erase(n - 1);
  auto Q = g.parabolic_quotient(I, GeneratorSet::all(n));
  std::set<Element> lhs, rhs;
  for (Element y : Yprev)
    for (Element q : Q) lhs.insert(g.multiply(y, q));
  for (Element x : Xprev)
    for (Element y : Yn) rhs.insert(g.multiply(x, y));
  eq.note("quotient_size", Q.size());
  eq.note("lhs_size", lhs.size());
  eq.note("rhs_size", rhs.size());
  eq.record(Q.size() == static_cast<std::size_t>(2 * n),
            [&] { return "quotient has " + std::to_string(Q.size()) + " elements, expected " + std::to_string(2 * n); });
  eq.record(lhs.size() == static_cast<std::size_t>((n - 1) * 2 * n), [&] {
    return "left side has " + std::to_string(lhs.size()) + " elements, expected " + std::to_string((n - 1) * 2 * n);
  });
  for (Element w : lhs)
    eq.record(rhs.count(w) > 0, [&] { return g.format(w) + " is in Y_{n-1} * quotient only"; });
  for (Element w : rhs)
    eq.record(lhs.count(w) > 0, [&] { return g.format(w) + " is in X_{n-1} Y_n only"; });

  VerificationReport fact("chain-factorization", g.system().name());
  std::vector<std::vector<Element>> chains;
  for (int i = 1; i < n; ++i) chains.push_back(chain_elements(g, "X" + std::to_string(i)));
  chains.push_back(Yn);
  std::vector<std::uint32_t> hits(g.size(), 0);
  std::vector<std::size_t> pos(chains.size(), 0);
  while (true) {
    Element w = g.identity();
    int total = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      w = g.multiply(w, chains[i][pos[i]]);
      total += g.length(chains[i][pos[i]]);
    }
    fact.record(g.length(w) == total, [&] { return "lengths not additive for " + g.format(w); });
    ++hits[w.index()];
    std::size_t i = chains.size();
    while (i > 0 && pos[i - 1] + 1 == chains[i - 1].size()) pos[--i] = 0;
    if (i == 0) break;
    ++pos[i - 1];
  }
  for (Element w : g.elements())
    fact.record(hits[w.index()] == 1, [&] {
      return g.format(w) + " has " + std::to_string(hits[w.index()]) + " factorizations";
    });

  report.add_child(std::move(eq));
  report.add_child(std::move(fact));
  return report;
}

VerificationReport verify_H3_quotients(const CoxeterGroup& g) {
  require_type(g, CoxeterType::H3, "verify_H3_quotients");
  VerificationReport report("H3-structure", g.system().name());
  ReportTimer timer(report);
  auto X = chain_elements(g, "X");
  auto Y = chain_elements(g, "Y");
  auto Z = chain_elements(g, "Z");
  auto sorted = [](std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };

  std::vector<Element> yz(Y);
  yz.insert(yz.end(), Z.begin(), Z.end());
  bool disjoint = sorted(yz).size() == Y.size() + Z.size();
  report.record(disjoint, [] { return std::string("Y and Z intersect"); });
  yz = sorted(yz);

  Element z0 = Z.back();
  std::vector<Element> weak;
  for (Element u : g.elements())
    if (g.left_weak_leq(u, z0)) weak.push_back(u);

  std::vector<Element> coset;
  Element c = g.apply_label_word(std::vector<int>{3, 2, 1});
  for (Element p : g.parabolic_subgroup(GeneratorSet{g.system().index_of_label(1), g.system().index_of_label(2)})) {
    coset.push_back(p);
    coset.push_back(g.multiply(p, c));
  }

  Element x0 = X.back();
  std::vector<Element> top{x0};
  auto quot_x0 = g.generalized_quotient(top);
  auto quot_X = g.generalized_quotient(X);

  const std::vector<std::pair<std::string, std::vector<Element>>> sets{
      {"[e,z0]_L", sorted(weak)},
      {"(H3)_{s1,s2}{e,s3s2s1}", sorted(coset)},
      {"H3/{x0}", sorted(quot_x0)},
      {"H3/X", sorted(quot_X)},
  };
  report.note("Y+Z", yz.size());
  for (const auto& [name, s] : sets) {
    report.note(name, s.size());
    report.record(s == yz, [&] { return name + " differs from Y + Z (" + std::to_string(s.size()) + " elements)"; });
  }

  std::vector<char> hit(g.size(), 0);
  std::size_t products = 0;
  for (Element u : quot_X)
    for (Element x : X) {
      Element w = g.multiply(u, x);
      report.record(g.length(w) == g.length(u) + g.length(x),
                    [&] { return "lengths not additive for " + g.format(u) + " * " + g.format(x); });
      report.record(!hit[w.index()], [&] { return g.format(w) + " factors twice as (H3/X) X"; });
      hit[w.index()] = 1;
      ++products;
    }
  report.record(products == g.size(), [&] { return "(H3/X) X has " + std::to_string(products) + " products"; });

  GeneratorSet I = GeneratorSet::all(3);
  I.erase(g.system().index_of_label(3));
  auto q = g.parabolic_quotient(I, GeneratorSet::all(3));
  report.note("max_quotient_size", q.size());
  report.record(q.size() == 20, [&] { return "^{S\\{s3}}H3 has " + std::to_string(q.size()) + " elements"; });
  return report;
}

void to_json(nlohmann::json& j, const LehmerCode& code) {
  const auto& g = code.group();
  j = nlohmann::json::object();
  j["code"] = code.name();
  j["system"] = g.system().name();
  j["bounds"] = code.bounds();
  if (code.experimental()) j["experimental"] = true;
  nlohmann::json table = nlohmann::json::object();
  for (Element w : g.elements()) table[g.format(w)] = code.encode(w);
  j["table"] = std::move(table);
}

}  // namespace coxlehmer
