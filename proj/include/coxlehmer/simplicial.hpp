#ifndef COXLEHMER_SIMPLICIAL_HPP
#define COXLEHMER_SIMPLICIAL_HPP

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxlehmer/multicomplex.hpp"

namespace coxlehmer {

inline constexpr std::size_t kMaxVertices = 128;
using VertexSet = std::bitset<kMaxVertices>;

/// The pair (value, coordinate) of an M-complex, both 1-based. Complexes
/// built from plain facet lists use coordinate 0.
struct Vertex {
  int value = 0;
  int coordinate = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// A simplicial complex given by its facets over an indexed vertex universe.
/// Facets contained in other facets are dropped on construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::vector<Vertex> vertices, std::vector<VertexSet> facets);
  /// Facets as lists of vertex indices 0..n-1.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<std::vector<int>>& facets);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  /// max |F| - 1; -1 for the complex {empty set}.
  int dimension() const;
  bool is_pure() const;
  bool is_simplex() const noexcept { return facets_.size() == 1; }
  bool is_face(const VertexSet& s) const;
  VertexSet vertex_support() const;

  /// Source point x (1-based) of each facet, when built from a multicomplex.
  const std::vector<Point>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<Point> labels) { labels_ = std::move(labels); }

  SimplicialComplex link(int v) const;
  SimplicialComplex deletion(int v) const;

  /// f_i = number of faces of cardinality i, i = 0..dim+1. Enumerates faces;
  /// throws SizeLimitError past face_limit.
  std::vector<std::int64_t> f_vector(std::size_t face_limit = 10'000'000) const;

  /// Canonical text key of the facet set (sorted facets).
  std::string key() const;

 private:
  void normalize();

  std::vector<Vertex> vertices_;
  std::vector<VertexSet> facets_;
  std::vector<Point> labels_;
};

std::vector<int> members(const VertexSet& s);

/// F_x for a 1-based point x of [d_1] x ... x [d_k]:
/// the union over i of ([d_i] \ {d_i + 1 - x_i}) x {i}.
std::vector<Vertex> facet_of(const Point& x, const std::vector<int>& d);
/// M_d, one facet per point of the box.
SimplicialComplex build_M(const std::vector<int>& d);
/// M_d(J) for a 0-based ideal J; facet i belongs to J.points()[i] + (1, ..., 1).
SimplicialComplex build_M_of_ideal(const OrderIdeal& J);

struct ShellingResult {
  bool ok = false;
  /// Position in the order of the first facet that breaks the condition.
  std::optional<std::size_t> violation;
  /// R(F_i) per position, filled when ok.
  std::vector<VertexSet> restrictions;
  /// h_j = #{i : |R(F_i)| = j}, filled when ok.
  std::vector<std::int64_t> h_vector;
};

/// order lists facet indices; throws std::invalid_argument for a non-pure
/// complex or an order that is not a permutation of the facets.
ShellingResult verify_shelling(const SimplicialComplex& complex, const std::vector<std::size_t>& order);

/// h from f through sum h_i x^(n-i) = sum f_i (x-1)^(n-i), n = f.size() - 1.
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f);
std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h);

inline constexpr std::size_t kDefaultVdFacetLimit = 20;
/// Recursive vertex decomposition with memoization; throws SizeLimitError
/// when the complex has more than facet_limit facets.
bool is_vertex_decomposable(const SimplicialComplex& complex, std::size_t facet_limit = kDefaultVdFacetLimit);

/// Every minimal non-face has at most two vertices.
bool is_flag(const SimplicialComplex& complex);
/// J = [2]^k or every minimal point outside J has at most two entries 1
/// (0-based). Throws std::invalid_argument unless the ambient box is [2]^k.
bool is_flag_ideal(const OrderIdeal& J);

/// color[v] in 0..a.size()-1; |F cap S_i| = a_i for every facet.
bool is_balanced(const SimplicialComplex& complex, const std::vector<int>& color, const std::vector<int>& type);
/// Coloring of an M-complex by coordinate.
std::vector<int> coordinate_coloring(const SimplicialComplex& complex);

enum class Thinness { Thin, Subthin, Neither };
std::string to_string(Thinness t);
/// Throws std::invalid_argument for a non-pure complex or a single facet.
Thinness thinness(const SimplicialComplex& complex);

/// {dim, vertices: [[value, coord]...], facets: [[index...]...], labels?}
void to_json(nlohmann::json& j, const SimplicialComplex& complex);

}  // namespace coxlehmer

#endif  // COXLEHMER_SIMPLICIAL_HPP
