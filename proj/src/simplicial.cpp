#include "coxlehmer/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "coxlehmer/coxeter.hpp"

namespace coxlehmer {

std::vector<int> members(const VertexSet& s) {
  std::vector<int> out;
  for (std::size_t i = s._Find_first(); i < kMaxVertices; i = s._Find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

bool subset_of(const VertexSet& a, const VertexSet& b) { return (a & ~b).none(); }

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Vertex> vertices, std::vector<VertexSet> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  if (vertices_.size() > kMaxVertices) throw SizeLimitError("SimplicialComplex: too many vertices");
  for (const auto& f : facets_)
    for (int v : members(f))
      if (v >= static_cast<int>(vertices_.size())) throw std::out_of_range("SimplicialComplex: unknown vertex");
  normalize();
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, const std::vector<std::vector<int>>& facets) {
  if (vertex_count < 0 || static_cast<std::size_t>(vertex_count) > kMaxVertices)
    throw SizeLimitError("SimplicialComplex: too many vertices");
  std::vector<Vertex> vs;
  for (int i = 1; i <= vertex_count; ++i) vs.push_back({i, 0});
  std::vector<VertexSet> fs;
  for (const auto& f : facets) {
    VertexSet s;
    for (int v : f) {
      if (v < 0 || v >= vertex_count) throw std::out_of_range("SimplicialComplex: unknown vertex");
      s.set(static_cast<std::size_t>(v));
    }
    fs.push_back(s);
  }
  return SimplicialComplex(std::move(vs), std::move(fs));
}

void SimplicialComplex::normalize() {
  if (facets_.empty()) facets_.emplace_back();
  std::vector<VertexSet> kept;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < facets_.size() && !dominated; ++j) {
      if (i == j) continue;
      if (facets_[i] == facets_[j]) dominated = j < i;
      else dominated = subset_of(facets_[i], facets_[j]);
    }
    if (!dominated) kept.push_back(facets_[i]);
  }
  facets_ = std::move(kept);
}

int SimplicialComplex::dimension() const {
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.count());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (f.count() != facets_.front().count()) return false;
  return true;
}

bool SimplicialComplex::is_face(const VertexSet& s) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) { return subset_of(s, f); });
}

VertexSet SimplicialComplex::vertex_support() const {
  VertexSet s;
  for (const auto& f : facets_) s |= f;
  return s;
}

SimplicialComplex SimplicialComplex::link(int v) const {
  std::vector<VertexSet> fs;
  for (const auto& f : facets_)
    if (f.test(static_cast<std::size_t>(v))) {
      fs.push_back(f);
      fs.back().reset(static_cast<std::size_t>(v));
    }
  if (fs.empty()) throw std::invalid_argument("link: vertex is not in the complex");
  return SimplicialComplex(vertices_, std::move(fs));
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
  std::vector<VertexSet> fs;
  for (const auto& f : facets_) {
    fs.push_back(f);
    fs.back().reset(static_cast<std::size_t>(v));
  }
  return SimplicialComplex(vertices_, std::move(fs));
}

std::vector<std::int64_t> SimplicialComplex::f_vector(std::size_t face_limit) const {
  std::unordered_set<VertexSet> faces;
  for (const auto& f : facets_) {
    auto vs = members(f);
    if (vs.size() > 40) throw SizeLimitError("f_vector: facet too large for face enumeration");
    std::uint64_t n = std::uint64_t{1} << vs.size();
    for (std::uint64_t mask = 0; mask < n; ++mask) {
      VertexSet s;
      for (std::size_t b = 0; b < vs.size(); ++b)
        if ((mask >> b) & 1U) s.set(static_cast<std::size_t>(vs[b]));
      faces.insert(s);
      if (faces.size() > face_limit) throw SizeLimitError("f_vector: more than " + std::to_string(face_limit) + " faces");
    }
  }
  std::vector<std::int64_t> f(static_cast<std::size_t>(dimension() + 2), 0);
  for (const auto& s : faces) ++f[s.count()];
  return f;
}

std::string SimplicialComplex::key() const {
  std::vector<std::string> parts;
  for (const auto& f : facets_) parts.push_back(f.to_string());
  std::sort(parts.begin(), parts.end());
  std::string k;
  for (const auto& p : parts) k += p;
  return k;
}

std::vector<Vertex> facet_of(const Point& x, const std::vector<int>& d) {
  if (x.size() != d.size()) throw std::invalid_argument("facet_of: dimension mismatch");
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (x[i] < 1 || x[i] > d[i]) throw std::out_of_range("facet_of: point outside the box");
    int skip = d[i] + 1 - x[i];
    for (int v = 1; v <= d[i]; ++v)
      if (v != skip) out.push_back({v, static_cast<int>(i) + 1});
  }
  return out;
}

namespace {

struct MUniverse {
  std::vector<Vertex> vertices;
  std::vector<int> offset;
};

MUniverse m_universe(const std::vector<int>& d) {
  MUniverse u;
  for (std::size_t i = 0; i < d.size(); ++i) {
    u.offset.push_back(static_cast<int>(u.vertices.size()));
    for (int v = 1; v <= d[i]; ++v) u.vertices.push_back({v, static_cast<int>(i) + 1});
  }
  if (u.vertices.size() > kMaxVertices) throw SizeLimitError("M-complex: more than 128 vertices");
  return u;
}

SimplicialComplex m_complex(const std::vector<int>& d, const std::vector<Point>& zero_based) {
  auto u = m_universe(d);
  std::vector<VertexSet> fs;
  std::vector<Point> labels;
  for (const auto& p : zero_based) {
    Point x = p;
    for (int& v : x) ++v;
    VertexSet s;
    for (const auto& vert : facet_of(x, d))
      s.set(static_cast<std::size_t>(u.offset[static_cast<std::size_t>(vert.coordinate) - 1] + vert.value - 1));
    fs.push_back(s);
    labels.push_back(std::move(x));
  }
  SimplicialComplex c(std::move(u.vertices), std::move(fs));
  if (c.facet_count() == labels.size()) c.set_labels(std::move(labels));
  return c;
}

}  // namespace

SimplicialComplex build_M(const std::vector<int>& d) {
  ChainProduct box(d);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < box.size(); ++i) pts.push_back(box.point(i));
  return m_complex(d, pts);
}

SimplicialComplex build_M_of_ideal(const OrderIdeal& J) { return m_complex(J.ambient().degrees(), J.points()); }

ShellingResult verify_shelling(const SimplicialComplex& complex, const std::vector<std::size_t>& order) {
  if (!complex.is_pure()) throw std::invalid_argument("verify_shelling: complex is not pure");
  const auto& F = complex.facets();
  if (order.size() != F.size()) throw std::invalid_argument("verify_shelling: order must list every facet once");
  std::vector<char> seen(F.size(), 0);
  for (auto i : order) {
    if (i >= F.size() || seen[i]) throw std::invalid_argument("verify_shelling: order must list every facet once");
    seen[i] = 1;
  }
  ShellingResult res;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const auto& Fj = F[order[j]];
    VertexSet R;
    for (std::size_t h = 0; h < j; ++h) {
      VertexSet diff = Fj & ~F[order[h]];
      if (diff.count() == 1) R |= diff;
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (((Fj & ~F[order[i]]) & R).none()) {
        res.violation = j;
        res.restrictions.clear();
        return res;
      }
    }
    res.restrictions.push_back(R);
  }
  res.ok = true;
  res.h_vector.assign(static_cast<std::size_t>(complex.dimension() + 2), 0);
  for (const auto& R : res.restrictions) ++res.h_vector[R.count()];
  return res;
}

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  __int128 r = 1;
  for (int i = 1; i <= std::min(k, n - k); ++i) {
    r = r * (n - std::min(k, n - k) + i) / i;
    if (r > INT64_MAX) throw std::overflow_error("binomial coefficient overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t to_int64(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("f/h transform overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f) {
  int n = static_cast<int>(f.size()) - 1;
  std::vector<std::int64_t> h(f.size(), 0);
  for (int k = 0; k <= n; ++k) {
    __int128 s = 0;
    for (int i = 0; i <= k; ++i) {
      __int128 t = static_cast<__int128>(binom(n - i, k - i)) * f[static_cast<std::size_t>(i)];
      s += ((k - i) % 2 == 0) ? t : -t;
    }
    h[static_cast<std::size_t>(k)] = to_int64(s);
  }
  return h;
}

std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h) {
  int n = static_cast<int>(h.size()) - 1;
  std::vector<std::int64_t> f(h.size(), 0);
  for (int k = 0; k <= n; ++k) {
    __int128 s = 0;
    for (int i = 0; i <= k; ++i) s += static_cast<__int128>(binom(n - i, k - i)) * h[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(k)] = to_int64(s);
  }
  return f;
}

bool is_vertex_decomposable(const SimplicialComplex& complex, std::size_t facet_limit) {
  if (complex.facet_count() > facet_limit)
    throw SizeLimitError("is_vertex_decomposable: " + std::to_string(complex.facet_count()) +
                         " facets exceed the limit of " + std::to_string(facet_limit));
  std::unordered_map<std::string, bool> memo;
  std::function<bool(const SimplicialComplex&)> vd = [&](const SimplicialComplex& x) -> bool {
    if (x.is_simplex()) return true;
    if (!x.is_pure()) return false;
    auto k = x.key();
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    bool result = false;
    for (int v : members(x.vertex_support())) {
      auto del = x.deletion(v);
      if (!del.is_pure()) continue;
      if (vd(x.link(v)) && vd(del)) {
        result = true;
        break;
      }
    }
    memo.emplace(std::move(k), result);
    return result;
  };
  return vd(complex);
}

bool is_flag(const SimplicialComplex& complex) {
  auto support = members(complex.vertex_support());
  std::size_t n = support.size();
  std::vector<VertexSet> adj(kMaxVertices);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      VertexSet e;
      e.set(static_cast<std::size_t>(support[a]));
      e.set(static_cast<std::size_t>(support[b]));
      if (complex.is_face(e)) {
        adj[static_cast<std::size_t>(support[a])].set(static_cast<std::size_t>(support[b]));
        adj[static_cast<std::size_t>(support[b])].set(static_cast<std::size_t>(support[a]));
      }
    }
  // Flag iff every maximal clique of the 1-skeleton is a face.
  bool flag = true;
  std::function<void(VertexSet, VertexSet, VertexSet)> bron_kerbosch = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (!flag) return;
    if (p.none() && x.none()) {
      if (!complex.is_face(r)) flag = false;
      return;
    }
    VertexSet px = p | x;
    std::size_t pivot = px._Find_first();
    for (int v : members(p & ~adj[pivot])) {
      auto uv = static_cast<std::size_t>(v);
      VertexSet r2 = r;
      r2.set(uv);
      bron_kerbosch(r2, p & adj[uv], x & adj[uv]);
      p.reset(uv);
      x.set(uv);
    }
  };
  bron_kerbosch(VertexSet{}, complex.vertex_support(), VertexSet{});
  return flag;
}

bool is_flag_ideal(const OrderIdeal& J) {
  const auto& box = J.ambient();
  for (int d : box.degrees())
    if (d != 2) throw std::invalid_argument("is_flag_ideal: ambient box must be [2]^k");
  if (J.is_full()) return true;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    Point x = box.point(idx);
    if (J.contains(x)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < x.size() && minimal; ++i) {
      if (x[i] == 0) continue;
      --x[i];
      minimal = J.contains(x);
      ++x[i];
    }
    if (minimal && ChainProduct::rank(x) > 2) return false;
  }
  return true;
}

bool is_balanced(const SimplicialComplex& complex, const std::vector<int>& color, const std::vector<int>& type) {
  if (color.size() != complex.vertices().size()) throw std::invalid_argument("is_balanced: one color per vertex");
  for (const auto& f : complex.facets()) {
    std::vector<int> count(type.size(), 0);
    for (int v : members(f)) {
      int c = color[static_cast<std::size_t>(v)];
      if (c < 0 || c >= static_cast<int>(type.size())) throw std::out_of_range("is_balanced: color out of range");
      ++count[static_cast<std::size_t>(c)];
    }
    if (count != type) return false;
  }
  return true;
}

std::vector<int> coordinate_coloring(const SimplicialComplex& complex) {
  std::vector<int> c;
  for (const auto& v : complex.vertices()) c.push_back(v.coordinate - 1);
  return c;
}

std::string to_string(Thinness t) {
  switch (t) {
    case Thinness::Thin: return "thin";
    case Thinness::Subthin: return "subthin";
    case Thinness::Neither: return "neither";
  }
  return "?";
}

Thinness thinness(const SimplicialComplex& complex) {
  if (!complex.is_pure()) throw std::invalid_argument("thinness: complex is not pure");
  if (complex.facet_count() < 2) throw std::invalid_argument("thinness: needs at least two facets");
  std::unordered_map<VertexSet, int> ridges;
  for (const auto& f : complex.facets())
    for (int v : members(f)) {
      VertexSet r = f;
      r.reset(static_cast<std::size_t>(v));
      ++ridges[r];
    }
  bool all_two = true;
  for (const auto& [r, c] : ridges) {
    if (c > 2) return Thinness::Neither;
    if (c != 2) all_two = false;
  }
  return all_two ? Thinness::Thin : Thinness::Subthin;
}

void to_json(nlohmann::json& j, const SimplicialComplex& complex) {
  j = nlohmann::json::object();
  j["dim"] = complex.dimension();
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : complex.vertices()) vs.push_back({v.value, v.coordinate});
  j["vertices"] = std::move(vs);
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : complex.facets()) fs.push_back(members(f));
  j["facets"] = std::move(fs);
  if (!complex.labels().empty()) j["labels"] = complex.labels();
}

}  // namespace coxlehmer
