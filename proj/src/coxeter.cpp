#include "coxlehmer/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "realization.hpp"

namespace coxlehmer {

std::string to_string(CoxeterType t) {
  switch (t) {
    case CoxeterType::A: return "A";
    case CoxeterType::B: return "B";
    case CoxeterType::D: return "D";
    case CoxeterType::H3: return "H3";
    case CoxeterType::I2: return "I2";
    case CoxeterType::Product: return "product";
  }
  return "?";
}

CoxeterType parse_coxeter_type(std::string_view s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "A") return CoxeterType::A;
  if (u == "B") return CoxeterType::B;
  if (u == "D") return CoxeterType::D;
  if (u == "H3" || u == "H") return CoxeterType::H3;
  if (u == "I2" || u == "I") return CoxeterType::I2;
  throw std::invalid_argument("unknown Coxeter type '" + std::string(s) + "' (expected A, B, D, H3 or I2)");
}

GeneratorSet::GeneratorSet(std::initializer_list<int> gens) {
  for (int s : gens) insert(s);
}

GeneratorSet GeneratorSet::all(int rank) { return from_mask(rank >= 32 ? ~0U : ((1U << rank) - 1U)); }

std::vector<int> GeneratorSet::members() const {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string CoxeterSystem::name() const {
  switch (type) {
    case CoxeterType::H3: return "H3";
    case CoxeterType::I2: return "I2(" + std::to_string(dihedral_m) + ")";
    case CoxeterType::Product: return factors.at(0).name() + "x" + factors.at(1).name();
    default: return to_string(type) + std::to_string(rank);
  }
}

int CoxeterSystem::index_of_label(int lbl) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == lbl) return static_cast<int>(i);
  throw std::out_of_range("generator s" + std::to_string(lbl) + " does not exist in " + name());
}

std::uint64_t CoxeterSystem::expected_order() const {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (type) {
    case CoxeterType::A: return factorial(rank + 1);
    case CoxeterType::B: return (std::uint64_t{1} << rank) * factorial(rank);
    case CoxeterType::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case CoxeterType::H3: return 120;
    case CoxeterType::I2: return 2 * static_cast<std::uint64_t>(dihedral_m);
    case CoxeterType::Product: return factors.at(0).expected_order() * factors.at(1).expected_order();
  }
  return 0;
}

CoxeterSystem build_system(CoxeterType type, int rank, int dihedral_m) {
  CoxeterSystem sys;
  sys.type = type;
  sys.rank = rank;
  switch (type) {
    case CoxeterType::A:
      if (rank < 1) throw std::invalid_argument("A_n requires n >= 1, got n = " + std::to_string(rank));
      break;
    case CoxeterType::B:
      if (rank < 2) throw std::invalid_argument("B_n requires n >= 2, got n = " + std::to_string(rank));
      break;
    case CoxeterType::D:
      if (rank < 4) throw std::invalid_argument("D_n requires n >= 4, got n = " + std::to_string(rank));
      break;
    case CoxeterType::H3:
      if (rank != 3) throw std::invalid_argument("H3 has rank 3, got " + std::to_string(rank));
      break;
    case CoxeterType::I2:
      if (rank != 2) throw std::invalid_argument("I2(m) has rank 2, got " + std::to_string(rank));
      if (dihedral_m < 3) throw std::invalid_argument("I2(m) requires m >= 3, got m = " + std::to_string(dihedral_m));
      sys.dihedral_m = dihedral_m;
      break;
    case CoxeterType::Product:
      throw std::invalid_argument("use product_system for reducible systems");
  }
  if (rank > 16) throw std::invalid_argument("rank " + std::to_string(rank) + " exceeds the supported maximum 16");

  auto& m = sys.coxeter_matrix;
  m.assign(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 2));
  auto bond = [&](int i, int j, int v) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

  sys.labels.resize(static_cast<std::size_t>(rank));
  sys.generator_order.resize(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    sys.labels[static_cast<std::size_t>(i)] = type == CoxeterType::D ? i : i + 1;
    sys.generator_order[static_cast<std::size_t>(i)] = i;
  }

  switch (type) {
    case CoxeterType::A:
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1, 3);
      break;
    case CoxeterType::B:
      bond(0, 1, 4);
      for (int i = 1; i + 1 < rank; ++i) bond(i, i + 1, 3);
      break;
    case CoxeterType::D:
      for (int i = 1; i + 1 < rank; ++i) bond(i, i + 1, 3);
      bond(0, 2, 3);
      for (int i = 0; i + 1 < rank; ++i) sys.generator_order[static_cast<std::size_t>(i)] = i + 1;
      sys.generator_order.back() = 0;
      break;
    case CoxeterType::H3:
      bond(0, 1, 3);
      bond(1, 2, 5);
      break;
    case CoxeterType::I2:
      bond(0, 1, dihedral_m);
      break;
    case CoxeterType::Product:
      break;
  }
  return sys;
}

CoxeterSystem product_system(const CoxeterSystem& a, const CoxeterSystem& b) {
  if (a.type == CoxeterType::Product || b.type == CoxeterType::Product)
    throw std::invalid_argument("product_system expects irreducible factors");
  CoxeterSystem sys;
  sys.type = CoxeterType::Product;
  sys.rank = a.rank + b.rank;
  sys.factors = {a, b};
  auto n = static_cast<std::size_t>(sys.rank);
  auto ra = static_cast<std::size_t>(a.rank);
  sys.coxeter_matrix.assign(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < ra && j < ra) sys.coxeter_matrix[i][j] = a.coxeter_matrix[i][j];
      else if (i >= ra && j >= ra) sys.coxeter_matrix[i][j] = b.coxeter_matrix[i - ra][j - ra];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    sys.labels.push_back(static_cast<int>(i) + 1);
  }
  for (int s : a.generator_order) sys.generator_order.push_back(s);
  for (int s : b.generator_order) sys.generator_order.push_back(s + a.rank);
  return sys;
}

namespace detail {

std::size_t CanonicalFormHash::operator()(const CanonicalForm& k) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : k) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

/// Exact division by a polynomial with leading coefficient 1; nullopt when
/// the remainder is nonzero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
  auto rem = p.coefficients();
  const auto& dc = d.coefficients();
  if (dc.empty() || dc.back() != 1) throw std::invalid_argument("divide_exact: divisor must be monic");
  if (rem.size() < dc.size()) return std::nullopt;
  std::vector<IntPolynomial::Coefficient> quot(rem.size() - dc.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    auto c = rem[i + dc.size() - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < dc.size(); ++j) rem[i + j] -= checked_mul(c, dc[j]);
  }
  for (auto c : rem)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

}  // namespace
}  // namespace detail

CoxeterGroup::CoxeterGroup(CoxeterSystem system, std::unique_ptr<detail::Realization> realization)
    : system_(std::move(system)), realization_(std::move(realization)) {}

CoxeterGroup::~CoxeterGroup() = default;

GroupPtr CoxeterGroup::enumerate(const CoxeterSystem& system, std::size_t limit) {
  std::uint64_t order = system.expected_order();
  if (order > limit) {
    throw SizeLimitError(system.name() + " has " + std::to_string(order) + " elements, above the enumeration limit of " +
                         std::to_string(limit));
  }
  std::shared_ptr<CoxeterGroup> g(new CoxeterGroup(system, detail::make_realization(system)));
  auto& forms = g->forms_;
  forms.push_back(g->realization_->identity());
  g->index_.emplace(forms[0], 0);
  g->lengths_.push_back(0);
  g->parent_.push_back(0);
  g->parent_generator_.push_back(-1);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (int s = 0; s < system.rank; ++s) {
      CanonicalForm next = g->realization_->right(forms[i], s);
      if (g->index_.count(next) != 0) continue;
      if (forms.size() >= order) {
        throw ConsistencyError("enumeration of " + system.name() + " exceeded the classified order " +
                               std::to_string(order));
      }
      auto id = static_cast<std::uint32_t>(forms.size());
      g->index_.emplace(next, id);
      forms.push_back(std::move(next));
      g->lengths_.push_back(g->lengths_[i] + 1);
      g->parent_.push_back(static_cast<std::uint32_t>(i));
      g->parent_generator_.push_back(static_cast<std::int8_t>(s));
    }
  }
  if (forms.size() != order) {
    throw ConsistencyError("enumeration of " + system.name() + " produced " + std::to_string(forms.size()) +
                           " elements, expected " + std::to_string(order));
  }
  g->build_tables();
  return g;
}

GroupPtr CoxeterGroup::from_canonical_forms(const CoxeterSystem& system, const std::vector<CanonicalForm>& forms) {
  if (forms.size() != system.expected_order())
    throw std::invalid_argument("stored element list for " + system.name() + " has the wrong size");
  std::shared_ptr<CoxeterGroup> g(new CoxeterGroup(system, detail::make_realization(system)));
  if (forms.empty() || forms[0] != g->realization_->identity())
    throw std::invalid_argument("stored element list must start with the identity");
  g->forms_ = forms;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!g->index_.emplace(forms[i], static_cast<std::uint32_t>(i)).second)
      throw std::invalid_argument("stored element list contains duplicates");
  }
  // Lengths and parents by BFS over the stored indices.
  const std::size_t n = forms.size();
  g->lengths_.assign(n, -1);
  g->parent_.assign(n, 0);
  g->parent_generator_.assign(n, -1);
  g->lengths_[0] = 0;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (int s = 0; s < system.rank; ++s) {
      auto it = g->index_.find(g->realization_->right(forms[i], s));
      if (it == g->index_.end()) throw std::invalid_argument("stored element list is not closed under generators");
      if (g->lengths_[it->second] >= 0) continue;
      g->lengths_[it->second] = g->lengths_[i] + 1;
      g->parent_[it->second] = i;
      g->parent_generator_[it->second] = static_cast<std::int8_t>(s);
      queue.push_back(it->second);
    }
  }
  g->build_tables();
  return g;
}

void CoxeterGroup::build_tables() {
  const std::size_t n = forms_.size();
  const std::size_t r = stride();
  right_.assign(n * r, 0);
  left_.assign(n * r, 0);
  std::uint32_t top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < r; ++s) {
      right_[i * r + s] = lookup(realization_->right(forms_[i], static_cast<int>(s))).index();
      left_[i * r + s] = lookup(realization_->left(forms_[i], static_cast<int>(s))).index();
    }
    if (lengths_[i] > lengths_[top]) top = static_cast<std::uint32_t>(i);
  }
  longest_ = Element(top);
  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Word word = reduced_word(Element(static_cast<std::uint32_t>(i)));
    Element x = identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = right(x, *it);
    inverse_[i] = x.index();
  }
}

Element CoxeterGroup::lookup(const CanonicalForm& form) const {
  auto it = index_.find(form);
  if (it == index_.end()) throw ConsistencyError("canonical form outside the enumerated group " + system_.name());
  return Element(it->second);
}

std::optional<Element> CoxeterGroup::find(const CanonicalForm& form) const {
  auto it = index_.find(form);
  if (it == index_.end()) return std::nullopt;
  return Element(it->second);
}

std::vector<Element> CoxeterGroup::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(static_cast<std::uint32_t>(i));
  return out;
}

Element CoxeterGroup::multiply(Element a, Element b) const {
  for (int s : reduced_word(b)) a = right(a, s);
  return a;
}

Element CoxeterGroup::apply_word(std::span<const int> word) const {
  Element w = identity();
  for (int s : word) {
    if (s < 0 || s >= rank())
      throw std::out_of_range("generator index " + std::to_string(s) + " out of range for " + system_.name());
    w = right(w, s);
  }
  return w;
}

Element CoxeterGroup::apply_label_word(std::span<const int> labels) const {
  Word word;
  word.reserve(labels.size());
  for (int l : labels) word.push_back(system_.index_of_label(l));
  return apply_word(word);
}

Word CoxeterGroup::reduced_word(Element w) const {
  Word word(static_cast<std::size_t>(length(w)));
  std::uint32_t i = w.index();
  for (std::size_t k = word.size(); k-- > 0;) {
    word[k] = parent_generator_[i];
    i = parent_[i];
  }
  return word;
}

GeneratorSet CoxeterGroup::descents_left(Element w) const {
  GeneratorSet d;
  for (int s = 0; s < rank(); ++s)
    if (is_left_descent(w, s)) d.insert(s);
  return d;
}

GeneratorSet CoxeterGroup::descents_right(Element w) const {
  GeneratorSet d;
  for (int s = 0; s < rank(); ++s)
    if (is_right_descent(w, s)) d.insert(s);
  return d;
}

IntPolynomial CoxeterGroup::poincare_polynomial(std::span<const Element> xs) const {
  std::vector<IntPolynomial::Coefficient> c;
  for (Element x : xs) {
    auto l = static_cast<std::size_t>(length(x));
    if (c.size() <= l) c.resize(l + 1, 0);
    ++c[l];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial CoxeterGroup::poincare_polynomial() const {
  auto all = elements();
  return poincare_polynomial(all);
}

std::vector<int> CoxeterGroup::exponents() const {
  IntPolynomial p = poincare_polynomial();
  std::vector<int> exps;
  const IntPolynomial one_minus_q{1, -1};
  for (int remaining = rank(); remaining > 0; --remaining) {
    // p * (1-q)^r = prod (1 - q^{d_i}); its lowest non-constant term has
    // degree min d_i.
    IntPolynomial t = p;
    for (int i = 0; i < remaining; ++i) t *= one_minus_q;
    int k = 1;
    while (k <= t.degree() && t.coeff(k) == 0) ++k;
    if (k > t.degree()) throw ConsistencyError("W(q) of " + system_.name() + " does not factor into q-analogs");
    auto quotient = detail::divide_exact(p, q_analog(k));
    if (!quotient) throw ConsistencyError("W(q) of " + system_.name() + " is not divisible by [" + std::to_string(k) + "]_q");
    p = *quotient;
    exps.push_back(k - 1);
  }
  if (p != IntPolynomial(1)) throw ConsistencyError("W(q) of " + system_.name() + " has a leftover factor " + p.to_string());
  std::sort(exps.begin(), exps.end());
  return exps;
}

std::pair<Element, Element> CoxeterGroup::parabolic_decompose(Element w, GeneratorSet J) const {
  Element prefix = identity();
  Element rest = w;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int s : J.members()) {
      if (s >= rank()) throw std::out_of_range("generator set contains an index outside the system");
      if (is_left_descent(rest, s)) {
        rest = left(rest, s);
        prefix = right(prefix, s);
        stripped = true;
      }
    }
  }
  return {prefix, rest};
}

std::vector<Element> CoxeterGroup::quotient_factorization(Element w, std::span<const int> chain) const {
  const std::size_t n = chain.size();
  std::vector<Element> factors(n, identity());
  Element current = w;
  for (std::size_t i = n; i-- > 1;) {
    GeneratorSet J;
    for (std::size_t k = 0; k < i; ++k) J.insert(chain[k]);
    auto [head, tail] = parabolic_decompose(current, J);
    factors[i] = tail;
    current = head;
  }
  if (n > 0) factors[0] = current;
  return factors;
}

std::vector<Element> CoxeterGroup::quotient_factorization(Element w) const {
  return quotient_factorization(w, system_.generator_order);
}

std::vector<Element> CoxeterGroup::parabolic_subgroup(GeneratorSet J) const {
  std::vector<char> seen(size(), 0);
  std::vector<Element> out{identity()};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s : J.members()) {
      Element x = right(out[i], s);
      if (!seen[x.index()]) {
        seen[x.index()] = 1;
        out.push_back(x);
      }
    }
  }
  return out;
}

std::vector<Element> CoxeterGroup::parabolic_quotient(GeneratorSet I, GeneratorSet J) const {
  std::vector<Element> out;
  for (Element x : parabolic_subgroup(J)) {
    if ((descents_left(x).mask() & I.mask()) == 0) out.push_back(x);
  }
  return out;
}

Element CoxeterGroup::max_parabolic_element(GeneratorSet J) const {
  auto sub = parabolic_subgroup(J);
  return *std::max_element(sub.begin(), sub.end(), [&](Element a, Element b) { return length(a) < length(b); });
}

std::vector<Element> CoxeterGroup::generalized_quotient(std::span<const Element> V) const {
  std::vector<Element> out;
  for (Element w : elements()) {
    bool ok = true;
    for (Element v : V) {
      if (length(multiply(w, v)) != length(w) + length(v)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<Element> CoxeterGroup::reflections() const {
  std::vector<char> seen(size(), 0);
  std::vector<Element> out;
  for (int s = 0; s < rank(); ++s) {
    Element g = generator(s);
    if (!seen[g.index()]) {
      seen[g.index()] = 1;
      out.push_back(g);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s = 0; s < rank(); ++s) {
      Element c = left(right(out[i], s), s);
      if (!seen[c.index()]) {
        seen[c.index()] = 1;
        out.push_back(c);
      }
    }
  }
  return out;
}

bool CoxeterGroup::left_weak_leq(Element u, Element w) const {
  return length(multiply(w, inverse(u))) == length(w) - length(u);
}

bool CoxeterGroup::right_weak_leq(Element u, Element w) const {
  return length(multiply(inverse(u), w)) == length(w) - length(u);
}

std::vector<Element> CoxeterGroup::weak_left_interval(Element u, Element w) const {
  std::vector<Element> out;
  for (Element z : elements())
    if (left_weak_leq(u, z) && left_weak_leq(z, w)) out.push_back(z);
  return out;
}

std::vector<Element> CoxeterGroup::weak_right_interval(Element u, Element w) const {
  std::vector<Element> out;
  for (Element z : elements())
    if (right_weak_leq(u, z) && right_weak_leq(z, w)) out.push_back(z);
  return out;
}

std::string CoxeterGroup::format(Element w) const {
  const auto& f = canonical_form(w);
  std::ostringstream os;
  switch (system_.type) {
    case CoxeterType::A: {
      bool wide = f.size() > 9;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (wide && i > 0) os << ',';
        os << f[i];
      }
      return os.str();
    }
    case CoxeterType::B:
    case CoxeterType::D: {
      os << '[';
      for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
      os << ']';
      return os.str();
    }
    default: {
      Word word = reduced_word(w);
      if (word.empty()) return "e";
      for (int s : word) os << 's' << system_.label(s);
      return os.str();
    }
  }
}

std::string CoxeterGroup::format_word(Element w) const {
  std::ostringstream os;
  bool first = true;
  for (int s : reduced_word(w)) {
    os << (first ? "" : " ") << 's' << system_.label(s);
    first = false;
  }
  return os.str();
}

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("cannot parse element '" + std::string(text) + "' at position " + std::to_string(pos) +
                              ": " + what);
}

std::vector<std::int32_t> parse_int_list(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<std::int32_t> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && (text[i] == ' ' || text[i] == ',')) ++i;
    if (i >= end) break;
    std::size_t start = i;
    bool neg = false;
    if (text[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= end || !std::isdigit(static_cast<unsigned char>(text[i]))) parse_error(text, i, "expected an integer");
    std::int64_t v = 0;
    while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) parse_error(text, start, "integer too large");
      ++i;
    }
    out.push_back(static_cast<std::int32_t>(neg ? -v : v));
    if (i < end && text[i] != ',' && text[i] != ' ') parse_error(text, i, "unexpected character");
  }
  return out;
}

}  // namespace

Element CoxeterGroup::parse(std::string_view text) const {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (b == e || text.substr(b, e - b) == "e") return identity();

  if (text[b] == 's' || text[b] == 'S') {
    Word word;
    std::size_t i = b;
    while (i < e) {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.') {
        ++i;
        continue;
      }
      if (text[i] != 's' && text[i] != 'S') parse_error(text, i, "expected 's' followed by a generator label");
      std::size_t start = i++;
      if (i >= e || !std::isdigit(static_cast<unsigned char>(text[i]))) parse_error(text, i, "missing generator label");
      int label = 0;
      while (i < e && std::isdigit(static_cast<unsigned char>(text[i]))) {
        label = label * 10 + (text[i] - '0');
        if (label > 1000) parse_error(text, start, "generator label too large");
        ++i;
      }
      try {
        word.push_back(system_.index_of_label(label));
      } catch (const std::out_of_range&) {
        parse_error(text, start, "no generator s" + std::to_string(label) + " in " + system_.name());
      }
    }
    return apply_word(word);
  }

  CanonicalForm form;
  switch (system_.type) {
    case CoxeterType::A: {
      std::string_view body = text.substr(b, e - b);
      bool separated = body.find(',') != std::string_view::npos || body.find(' ') != std::string_view::npos;
      if (separated) {
        form = parse_int_list(text, b, e);
      } else {
        for (std::size_t i = b; i < e; ++i) {
          if (!std::isdigit(static_cast<unsigned char>(text[i]))) parse_error(text, i, "expected a digit");
          form.push_back(text[i] - '0');
        }
      }
      break;
    }
    case CoxeterType::B:
    case CoxeterType::D: {
      std::size_t lo = b, hi = e;
      if (text[lo] == '[') {
        if (text[hi - 1] != ']') parse_error(text, hi - 1, "missing closing ']'");
        ++lo;
        --hi;
      }
      form = parse_int_list(text, lo, hi);
      break;
    }
    default:
      parse_error(text, b, "elements of " + system_.name() + " must be given as generator words");
  }
  auto found = find(form);
  if (!found) parse_error(text, b, "not an element of " + system_.name());
  return *found;
}

std::pair<CanonicalForm, CanonicalForm> CoxeterGroup::split_product_form(Element w) const {
  if (system_.type != CoxeterType::Product) throw std::invalid_argument(system_.name() + " is not a product system");
  auto size_a = detail::make_realization(system_.factors.at(0))->form_size();
  const auto& f = canonical_form(w);
  auto mid = f.begin() + static_cast<std::ptrdiff_t>(size_a);
  return {CanonicalForm(f.begin(), mid), CanonicalForm(mid, f.end())};
}

GroupPtr enumerate_product(const CoxeterSystem& a, const CoxeterSystem& b, std::size_t limit) {
  return CoxeterGroup::enumerate(product_system(a, b), limit);
}

}  // namespace coxlehmer
