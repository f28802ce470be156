#pragma once

#include <cstddef>
#include <vector>

#include "hamloop/linalg.hpp"
#include "hamloop/rational.hpp"

namespace hamloop {

/// One linear constraint <x, conormal> <= level with an outward primitive
/// integer conormal. Construction normalizes the conormal to primitive form
/// (dividing the level by the same positive factor) and rejects zero rows.
struct HalfSpace {
  IVec conormal;
  Rational level;

  HalfSpace(IVec c, Rational l);

  bool operator==(const HalfSpace& o) const { return conormal == o.conormal && level == o.level; }
};

/**
 * Bounded full-dimensional rational convex polytope in H-representation with
 * exactly enumerated vertices. Immutable after construction; `build` is the
 * only way to make one and performs all validity checks:
 *
 *  - vertices enumerated by solving every n-subset of facet equalities,
 *  - unbounded / empty / lower-dimensional input rejected,
 *  - every halfspace must support a facet (no redundancy),
 *  - vertices sorted lexicographically, tight facet sets recorded.
 */
class Polytope {
 public:
  static Polytope build(std::size_t dim, std::vector<HalfSpace> halfspaces);

  std::size_t dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<QVec>& vertices() const { return vertices_; }
  /// Sorted indices of the facets on which each vertex is tight.
  const std::vector<std::vector<std::size_t>>& vertex_facets() const { return vertex_facets_; }

  bool contains(const QVec& p) const;
  bool strictly_contains(const QVec& p) const;

 private:
  Polytope() = default;

  std::size_t dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::vector<QVec> vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
};

/// Inward primitive edge generators at a vertex, one per facet through it.
struct VertexFrame {
  QVec vertex;
  std::vector<IVec> edges;
  bool unimodular = false;
};

/// Requires a simple polytope (exactly n facets through every vertex).
std::vector<VertexFrame> vertex_frames(const Polytope& p);

struct DelzantReport {
  bool delzant = false;
  std::vector<std::size_t> non_simple_vertices;
  std::vector<std::size_t> non_unimodular_vertices;
};

DelzantReport delzant_report(const Polytope& p);
bool is_delzant(const Polytope& p);

/// Deterministic triangulation: fan from the lexicographically smallest
/// vertex over the recursively triangulated facets not containing it.
/// Simplices are (n+1)-tuples of vertices with disjoint interiors covering p.
std::vector<std::vector<QVec>> triangulate(const Polytope& p);

Rational volume(const Polytope& p);

/// Mass center: the Euclidean centroid, computed exactly via the triangulation.
QVec centroid(const Polytope& p);

/// True iff every vertex has integer coordinates.
bool is_quantizable(const Polytope& p);

/// Largest r > 0 with all coordinates of P - v0 in r*Z, where v0 is the
/// lexicographically smallest vertex. Always exists for rational input.
Rational minimal_rescale(const Polytope& p);

/// Image U*P + w for unimodular integer U; conormals map by inverse-transpose.
Polytope transform(const Polytope& p, const IMat& u, const QVec& w);

}  // namespace hamloop
