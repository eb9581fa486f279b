#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetorder/exponent.hpp"
#include "jetorder/jets.hpp"
#include "jetorder/matrix.hpp"
#include "jetorder/subspace.hpp"

namespace jetorder {

struct Edge {
  std::size_t from = 0;  ///< vertex index
  std::size_t to = 0;    ///< vertex index
  IntVector direction;   ///< primitive, points from `from` to `to`
  long length = 0;       ///< vertex[to] - vertex[from] = length * direction
};

struct Face {
  std::size_t dim = 0;
  std::vector<std::size_t> vertices;
  std::vector<IntVector> points;
  /// Smooth polytopes only: a vertex of the face and the indices J into the
  /// basis at that vertex spanning the face.
  std::optional<std::size_t> anchor;
  std::vector<std::size_t> directions;
};

/// Lattice polytope with all of its lattice points, vertices, edges and faces.
class LatticePolytope {
 public:
  /// Convex hull of the given vertices (rank <= 3); lattice points are
  /// enumerated.
  static LatticePolytope from_vertices(std::vector<IntVector> vertices);
  /// Hull of a point list that must already contain every lattice point of
  /// its hull; Error(NonSaturated) otherwise.
  static LatticePolytope from_points(std::vector<IntVector> points);
  /// Explicit point and vertex lists, checked against the hull (rank <= 3).
  static LatticePolytope from_points_and_vertices(std::vector<IntVector> points,
                                                  std::vector<IntVector> vertices);
  /// Any rank: explicit data, trusted apart from consistency checks on edges.
  static LatticePolytope from_explicit(std::vector<IntVector> points,
                                       std::vector<IntVector> vertices,
                                       std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t nvars() const { return nvars_; }
  /// Affine dimension of the hull.
  std::size_t dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == nvars_; }
  const std::vector<IntVector>& points() const { return points_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Primitive directions of the edges leaving vertex i, sorted
  /// lexicographically.
  std::vector<IntVector> edge_directions(std::size_t vertex) const;
  std::optional<std::size_t> vertex_index(const IntVector& v) const;

  /// Facet inequalities a . x >= b (full-dimensional, rank <= 3 only).
  struct Inequality {
    IntVector normal;
    long offset = 0;
  };
  const std::vector<Inequality>& facets() const { return facets_; }

 private:
  LatticePolytope() = default;
  void finish();

  std::size_t nvars_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> points_;
  std::vector<IntVector> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<Inequality> facets_;
};

struct VertexDiagnostic {
  std::size_t vertex = 0;
  std::size_t edge_count = 0;
  /// |det| of the edge directions when there are exactly nvars of them.
  std::optional<Integer> determinant;
  bool ok = false;
};

struct SmoothResult {
  bool smooth = false;
  std::vector<VertexDiagnostic> vertices;
  /// First failing vertex, if any.
  std::optional<std::size_t> failing_vertex;
};

/// Basis condition at every vertex. Error(DegeneratePolytope) when P is not
/// full-dimensional.
SmoothResult smooth_check(const LatticePolytope& p);

/// Throws Error(NonSmooth) naming the first vertex failing the basis condition.
void require_smooth(const LatticePolytope& p);

struct VeryAmpleResult {
  bool very_ample = false;
  /// False when decided by the basis condition alone.
  bool bounded = true;
  long search_bound = 0;
  std::optional<std::size_t> failing_vertex;
  std::optional<IntVector> witness;
};

/// Saturation of every vertex semigroup, checked on the box [-bound, bound]^n.
VeryAmpleResult very_ample_check(const LatticePolytope& p, long search_bound = 10);

struct EdgeStats {
  long s = 0;
  std::vector<long> lengths;
};

EdgeStats edge_stats(const LatticePolytope& p);

/// Maximum number of collinear points.
std::size_t d_gonal(const std::vector<IntVector>& points);
inline std::size_t d_gonal(const LatticePolytope& p) { return d_gonal(p.points()); }

struct HilbertResult {
  int n_inj = 0;
  /// rank of the degree <= l evaluation matrix for l = 0 .. n_inj.
  std::vector<std::size_t> profile;
  std::size_t sublattice_rank = 0;
};

/// Generic injectivity order of the monomial space on a finite point set via
/// the Hilbert function of the points, after re-expressing them in the
/// lattice they generate.
HilbertResult n_inj_hilbert(const std::vector<IntVector>& points);

/// Coordinates of every lattice point of P in the basis at a vertex
/// (smooth P only).
std::vector<Exponent> vertex_coordinates(const LatticePolytope& p, std::size_t vertex);

/// The monomial subspace of P written in the affine chart at a vertex.
SubspaceV vertex_chart(const LatticePolytope& p, std::size_t vertex);

/// Monomial subspace for P itself; P must lie in the non-negative orthant.
SubspaceV monomial_space(const LatticePolytope& p);

/// Injectivity order on the torus orbit of a face: maximum of
/// N_inj(slice) + distance over the translates of the face meeting P.
int n_inj_face(const LatticePolytope& p, const Face& face);

/// Closed-point version: max coordinate sum of the vertices in the basis at
/// the given vertex.
int n_inj_vertex_formula(const LatticePolytope& p, std::size_t vertex);

/// Maximum of the vertex formula over all vertices; checked against the face
/// recursion (Error(Internal) on disagreement).
int n_inj_max(const LatticePolytope& p);

int n_surj_toric(const LatticePolytope& p);

struct SurjResult {
  int n1_surj = 0;
  std::vector<std::pair<std::size_t, int>> by_facet;  ///< face index, order
  RankMethod method = RankMethod::Symbolic;
  bool certified = true;
};

/// Minimum over codimension-1 faces of the surjectivity order at the generic
/// point of the face orbit, computed in the chart at the face's anchor.
SurjResult n1_surj_toric(const LatticePolytope& p, const RankOptions& options = {});

struct ToricOptions {
  RankOptions rank;
  long search_bound = 10;
};

struct ToricReport {
  bool smooth = false;
  bool very_ample = false;
  bool very_ample_bounded = true;
  std::size_t d_gonal = 0;
  HilbertResult hilbert;
  // The remaining fields need the basis condition.
  std::optional<long> s;
  std::vector<std::pair<std::size_t, int>> n_inj_by_face;
  std::vector<int> n_inj_by_vertex;
  std::optional<int> n_inj_max;
  std::optional<int> n_surj;
  std::optional<SurjResult> n1_surj;
};

/// Full report; smooth-only fields stay empty for non-smooth P unless
/// require_smooth_fields is set, in which case Error(NonSmooth) is thrown.
ToricReport toric_report(const LatticePolytope& p, const ToricOptions& options = {},
                         bool require_smooth_fields = false);

std::string describe(const LatticePolytope& p, const Face& face);

}  // namespace jetorder
