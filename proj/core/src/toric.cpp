#include "jetorder/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jetorder/error.hpp"
#include "jetorder/lattice.hpp"

namespace jetorder {

namespace {

using lattice::dot;
using lattice::subtract;

std::vector<IntVector> sorted_unique(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t check_width(const std::vector<IntVector>& pts) {
  if (pts.empty()) throw Error(ErrorCode::DegeneratePolytope, "polytope needs at least one point");
  const std::size_t n = pts.front().size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "lattice rank must be positive");
  for (const auto& p : pts)
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "points of different lengths");
  return n;
}

std::size_t affine_rank(const std::vector<IntVector>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(subtract(pts[i], pts[0]));
  return lattice::rank(diffs, pts[0].size());
}

IntVector cross(const IntVector& a, const IntVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

using Inequality = LatticePolytope::Inequality;

// Facets of the hull of full-dimensional points in Z^d, d <= 3.
std::vector<Inequality> facets_of(const std::vector<IntVector>& pts, std::size_t d) {
  std::set<std::pair<IntVector, long>> found;
  auto add_if_supporting = [&](IntVector normal, const IntVector& through) {
    if (std::all_of(normal.begin(), normal.end(), [](long x) { return x == 0; })) return;
    normal = lattice::primitive(normal).first;
    const long b = dot(normal, through);
    bool ge = true, le = true;
    for (const auto& p : pts) {
      const long v = dot(normal, p);
      if (v < b) ge = false;
      if (v > b) le = false;
    }
    if (ge) found.emplace(normal, b);
    if (le) {
      IntVector neg(normal.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -normal[i];
      found.emplace(neg, -b);
    }
  };

  const std::size_t n = pts.size();
  if (d == 1) {
    add_if_supporting({1}, *std::min_element(pts.begin(), pts.end()));
    add_if_supporting({1}, *std::max_element(pts.begin(), pts.end()));
  } else if (d == 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const IntVector e = subtract(pts[j], pts[i]);
        add_if_supporting({-e[1], e[0]}, pts[i]);
      }
  } else if (d == 3) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          add_if_supporting(cross(subtract(pts[j], pts[i]), subtract(pts[k], pts[i])), pts[i]);
  } else {
    throw Error(ErrorCode::DomainError,
                "convex hull enumeration supports lattice rank <= 3; supply explicit points, "
                "vertices and edges");
  }

  // A supporting hyperplane is a facet only if it touches d affinely
  // independent points.
  std::vector<Inequality> out;
  for (const auto& [normal, b] : found) {
    std::vector<IntVector> on;
    for (const auto& p : pts)
      if (dot(normal, p) == b) on.push_back(p);
    if (affine_rank(on) + 1 == d) out.push_back({normal, b});
  }
  return out;
}

struct Hull {
  std::size_t dim = 0;
  std::vector<IntVector> vertices;
  std::vector<std::vector<std::size_t>> faces;  // vertex index sets
  std::vector<Inequality> facets;                // full-dimensional case only
  std::vector<std::size_t> projection;           // coordinates spanning the hull
  IntVector origin;
};

std::vector<std::size_t> spanning_coordinates(const std::vector<IntVector>& pts, std::size_t dim) {
  const std::size_t n = pts[0].size();
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(subtract(pts[i], pts[0]));
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < n && chosen.size() < dim; ++c) {
    auto trial = chosen;
    trial.push_back(c);
    std::vector<IntVector> proj;
    for (const auto& d : diffs) {
      IntVector v;
      for (auto t : trial) v.push_back(d[t]);
      proj.push_back(v);
    }
    if (lattice::rank(proj, trial.size()) == trial.size()) chosen = std::move(trial);
  }
  return chosen;
}

IntVector project(const IntVector& p, const std::vector<std::size_t>& coords) {
  IntVector out;
  for (auto c : coords) out.push_back(p[c]);
  return out;
}

Hull compute_hull(const std::vector<IntVector>& input) {
  Hull h;
  const auto pts = sorted_unique(input);
  h.dim = affine_rank(pts);
  h.origin = pts[0];
  if (h.dim == 0) {
    h.vertices = {pts[0]};
    h.faces = {{0}};
    return h;
  }
  h.projection = spanning_coordinates(pts, h.dim);
  std::vector<IntVector> proj;
  for (const auto& p : pts) proj.push_back(project(p, h.projection));
  const auto facets = facets_of(proj, h.dim);
  if (h.dim == pts[0].size()) h.facets = facets;

  // Vertices: points whose tight facets have normals of full rank.
  std::vector<std::size_t> vertex_ids;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVector> normals;
    for (const auto& f : facets)
      if (dot(f.normal, proj[i]) == f.offset) normals.push_back(f.normal);
    if (!normals.empty() && lattice::rank(normals, h.dim) == h.dim) vertex_ids.push_back(i);
  }
  for (auto i : vertex_ids) h.vertices.push_back(pts[i]);

  std::set<std::vector<std::size_t>> faces;
  for (const auto& f : facets) {
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < vertex_ids.size(); ++v)
      if (dot(f.normal, proj[vertex_ids[v]]) == f.offset) on.push_back(v);
    faces.insert(on);
  }
  // Close under intersection to reach every face.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::size_t>> current(faces.begin(), faces.end());
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        std::vector<std::size_t> meet;
        std::set_intersection(current[a].begin(), current[a].end(), current[b].begin(),
                              current[b].end(), std::back_inserter(meet));
        if (!meet.empty() && faces.insert(meet).second) grew = true;
      }
  }
  std::vector<std::size_t> all(vertex_ids.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  faces.insert(all);
  h.faces.assign(faces.begin(), faces.end());
  return h;
}

bool in_hull(const Hull& h, const IntVector& q) {
  if (h.dim == 0) return q == h.origin;
  const IntVector d = subtract(q, h.origin);
  if (h.dim < q.size()) {
    // q must lie in the affine span of the hull.
    std::vector<IntVector> span;
    for (const auto& v : h.vertices) span.push_back(subtract(v, h.origin));
    auto with = span;
    with.push_back(d);
    if (lattice::rank(with, q.size()) != lattice::rank(span, q.size())) return false;
  }
  const IntVector pq = project(q, h.projection);
  std::vector<IntVector> proj;
  for (const auto& v : h.vertices) proj.push_back(project(v, h.projection));
  for (const auto& f : facets_of(proj, h.dim))
    if (dot(f.normal, pq) < f.offset) return false;
  return true;
}

std::vector<IntVector> lattice_points(const Hull& h) {
  const std::size_t n = h.vertices[0].size();
  IntVector lo = h.vertices[0], hi = h.vertices[0];
  for (const auto& v : h.vertices)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<IntVector> proj;
  for (const auto& v : h.vertices) proj.push_back(project(v, h.projection));
  const auto facets = h.dim == 0 ? std::vector<Inequality>{} : facets_of(proj, h.dim);
  std::vector<IntVector> span;
  for (const auto& v : h.vertices) span.push_back(subtract(v, h.origin));
  const std::size_t span_rank = lattice::rank(span, n);

  std::vector<IntVector> out;
  IntVector q = lo;
  while (true) {
    bool inside = true;
    if (h.dim == 0) {
      inside = q == h.origin;
    } else {
      if (h.dim < n) {
        auto with = span;
        with.push_back(subtract(q, h.origin));
        inside = lattice::rank(with, n) == span_rank;
      }
      if (inside) {
        const IntVector pq = project(q, h.projection);
        for (const auto& f : facets)
          if (dot(f.normal, pq) < f.offset) {
            inside = false;
            break;
          }
      }
    }
    if (inside) out.push_back(q);
    std::size_t i = 0;
    while (i < n && q[i] == hi[i]) q[i] = lo[i], ++i;
    if (i == n) break;
    ++q[i];
  }
  return out;
}

}  // namespace

LatticePolytope LatticePolytope::from_vertices(std::vector<IntVector> vertices) {
  check_width(vertices);
  const Hull h = compute_hull(vertices);
  LatticePolytope p;
  p.nvars_ = vertices[0].size();
  p.dim_ = h.dim;
  p.vertices_ = h.vertices;
  p.points_ = sorted_unique(lattice_points(h));
  p.facets_ = h.facets;
  for (const auto& f : h.faces)
    if (f.size() == 2) p.edges_.push_back({f[0], f[1], {}, 0});
  p.finish();
  return p;
}

LatticePolytope LatticePolytope::from_points(std::vector<IntVector> points) {
  check_width(points);
  const auto given = sorted_unique(points);
  LatticePolytope p = from_vertices(given);
  for (const auto& q : p.points_)
    if (!std::binary_search(given.begin(), given.end(), q))
      throw Error(ErrorCode::NonSaturated,
                  "lattice point " + to_string(q) + " of the convex hull is missing from the point list");
  return p;
}

LatticePolytope LatticePolytope::from_points_and_vertices(std::vector<IntVector> points,
                                                          std::vector<IntVector> vertices) {
  check_width(points);
  check_width(vertices);
  if (points[0].size() != vertices[0].size())
    throw Error(ErrorCode::DimensionMismatch, "points and vertices have different lengths");
  LatticePolytope p = from_vertices(vertices);
  const auto given = sorted_unique(points);
  for (const auto& q : given)
    if (!std::binary_search(p.points_.begin(), p.points_.end(), q))
      throw Error(ErrorCode::DomainError, "point " + to_string(q) + " lies outside the convex hull of the vertices");
  for (const auto& q : p.points_)
    if (!std::binary_search(given.begin(), given.end(), q))
      throw Error(ErrorCode::NonSaturated,
                  "lattice point " + to_string(q) + " of the convex hull is missing from the point list");
  const auto listed = sorted_unique(vertices);
  if (listed != p.vertices_)
    throw Error(ErrorCode::DomainError, "vertex list does not match the vertices of the convex hull");
  return p;
}

LatticePolytope LatticePolytope::from_explicit(std::vector<IntVector> points,
                                               std::vector<IntVector> vertices,
                                               std::vector<std::pair<std::size_t, std::size_t>> edges) {
  const std::size_t n = check_width(points);
  check_width(vertices);
  LatticePolytope p;
  p.nvars_ = n;
  p.points_ = sorted_unique(points);
  // Edge indices refer to the caller's vertex order.
  std::vector<IntVector> original = vertices;
  p.vertices_ = sorted_unique(vertices);
  if (p.vertices_.size() != original.size())
    throw Error(ErrorCode::DomainError, "duplicate vertices");
  for (const auto& v : p.vertices_)
    if (!std::binary_search(p.points_.begin(), p.points_.end(), v))
      throw Error(ErrorCode::DomainError, "vertex " + to_string(v) + " missing from the point list");
  p.dim_ = affine_rank(p.points_);
  for (const auto& [a, b] : edges) {
    if (a >= original.size() || b >= original.size() || a == b)
      throw Error(ErrorCode::MalformedDocument, "edge refers to an unknown vertex");
    const auto ia = *p.vertex_index(original[a]);
    const auto ib = *p.vertex_index(original[b]);
    p.edges_.push_back({std::min(ia, ib), std::max(ia, ib), {}, 0});
  }
  p.finish();
  return p;
}

std::optional<std::size_t> LatticePolytope::vertex_index(const IntVector& v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<IntVector> LatticePolytope::edge_directions(std::size_t vertex) const {
  std::vector<IntVector> out;
  for (const auto& e : edges_) {
    if (e.from == vertex) out.push_back(e.direction);
    if (e.to == vertex) {
      IntVector d = e.direction;
      for (auto& x : d) x = -x;
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void LatticePolytope::finish() {
  for (auto& e : edges_) {
    auto [dir, len] = lattice::primitive(subtract(vertices_[e.to], vertices_[e.from]));
    e.direction = std::move(dir);
    e.length = len;
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });

  faces_.clear();
  bool smooth = full_dimensional();
  for (std::size_t v = 0; smooth && v < vertices_.size(); ++v) {
    const auto dirs = edge_directions(v);
    smooth = dirs.size() == nvars_ && abs(lattice::determinant(dirs)) == 1;
  }

  if (smooth) {
    // Faces through a vertex are spanned by subsets of the basis there.
    std::map<std::vector<IntVector>, Face> by_points;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      const auto dirs = edge_directions(v);
      std::vector<IntVector> coords;
      for (const auto& q : points_)
        coords.push_back(*lattice::coordinates_in(dirs, subtract(q, vertices_[v])));
      for (unsigned mask = 0; mask < (1u << nvars_); ++mask) {
        Face f;
        f.anchor = v;
        for (std::size_t j = 0; j < nvars_; ++j)
          if (mask & (1u << j)) f.directions.push_back(j);
        f.dim = f.directions.size();
        for (std::size_t i = 0; i < points_.size(); ++i) {
          bool on = true;
          for (std::size_t j = 0; j < nvars_; ++j)
            if (!(mask & (1u << j)) && coords[i][j] != 0) on = false;
          if (on) f.points.push_back(points_[i]);
        }
        for (std::size_t u = 0; u < vertices_.size(); ++u)
          if (std::binary_search(f.points.begin(), f.points.end(), vertices_[u]))
            f.vertices.push_back(u);
        by_points.try_emplace(f.points, std::move(f));
      }
    }
    for (auto& [pts, f] : by_points) faces_.push_back(std::move(f));
  } else if (dim_ == 0) {
    faces_.push_back({0, {0}, points_, std::nullopt, {}});
  } else if (nvars_ <= 3) {
    const Hull h = compute_hull(vertices_);
    for (const auto& ids : h.faces) {
      Face f;
      std::vector<IntVector> vs;
      for (auto i : ids) {
        f.vertices.push_back(*vertex_index(h.vertices[i]));
        vs.push_back(h.vertices[i]);
      }
      std::sort(f.vertices.begin(), f.vertices.end());
      f.dim = affine_rank(vs);
      Hull sub = compute_hull(vs);
      for (const auto& q : points_)
        if (in_hull(sub, q)) f.points.push_back(q);
      faces_.push_back(std::move(f));
    }
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return std::pair(a.dim, a.points) < std::pair(b.dim, b.points);
  });
}

SmoothResult smooth_check(const LatticePolytope& p) {
  if (!p.full_dimensional())
    throw Error(ErrorCode::DegeneratePolytope,
                "polytope of dimension " + std::to_string(p.dim()) + " in a rank " +
                    std::to_string(p.nvars()) + " lattice is not full-dimensional");
  SmoothResult out;
  out.smooth = true;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    VertexDiagnostic d;
    d.vertex = v;
    const auto dirs = p.edge_directions(v);
    d.edge_count = dirs.size();
    if (dirs.size() == p.nvars()) {
      d.determinant = abs(lattice::determinant(dirs));
      d.ok = *d.determinant == 1;
    }
    if (!d.ok && out.smooth) {
      out.smooth = false;
      out.failing_vertex = v;
    }
    out.vertices.push_back(d);
  }
  return out;
}

void require_smooth(const LatticePolytope& p) {
  const auto res = smooth_check(p);
  if (res.smooth) return;
  const auto& d = res.vertices[*res.failing_vertex];
  std::string why = d.determinant ? "edge directions have determinant " + d.determinant->get_str()
                                  : std::to_string(d.edge_count) + " edges meet there";
  throw Error(ErrorCode::NonSmooth, "basis condition fails at vertex " +
                                        to_string(p.vertices()[*res.failing_vertex]) + " (" + why + ")");
}

VeryAmpleResult very_ample_check(const LatticePolytope& p, long search_bound) {
  if (!p.full_dimensional())
    throw Error(ErrorCode::DegeneratePolytope, "very ampleness needs a full-dimensional polytope");
  VeryAmpleResult out;
  out.search_bound = search_bound;
  if (smooth_check(p).smooth) {
    out.very_ample = true;
    out.bounded = false;
    return out;
  }
  if (p.facets().empty())
    throw Error(ErrorCode::DomainError, "saturation scan needs facet data (lattice rank <= 3)");

  const std::size_t n = p.nvars();
  for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
    const IntVector& m = p.vertices()[vi];
    std::vector<IntVector> cone;
    IntVector f(n, 0);
    for (const auto& facet : p.facets()) {
      if (dot(facet.normal, m) != facet.offset) continue;
      cone.push_back(facet.normal);
      for (std::size_t i = 0; i < n; ++i) f[i] += facet.normal[i];
    }
    auto in_cone = [&](const IntVector& z) {
      return std::all_of(cone.begin(), cone.end(), [&](const IntVector& a) { return dot(a, z) >= 0; });
    };
    std::vector<IntVector> gens;
    for (const auto& q : p.points())
      if (q != m) gens.push_back(subtract(q, m));

    std::vector<IntVector> targets;
    long fmax = 0;
    IntVector z(n, -search_bound);
    while (true) {
      if (in_cone(z)) {
        targets.push_back(z);
        fmax = std::max(fmax, dot(f, z));
      }
      std::size_t i = 0;
      while (i < n && z[i] == search_bound) z[i] = -search_bound, ++i;
      if (i == n) break;
      ++z[i];
    }

    // f is positive on every non-zero generator, so the semigroup elements
    // with f <= fmax are reached through sums that never exceed fmax.
    std::set<IntVector> reached{IntVector(n, 0)};
    std::vector<IntVector> frontier{IntVector(n, 0)};
    while (!frontier.empty()) {
      std::vector<IntVector> next;
      for (const auto& s : frontier)
        for (const auto& g : gens) {
          IntVector t = lattice::add(s, g);
          if (dot(f, t) > fmax) continue;
          if (reached.insert(t).second) next.push_back(std::move(t));
        }
      frontier = std::move(next);
    }
    for (const auto& t : targets) {
      if (!reached.contains(t)) {
        out.very_ample = false;
        out.failing_vertex = vi;
        out.witness = t;
        return out;
      }
    }
  }
  out.very_ample = true;
  return out;
}

EdgeStats edge_stats(const LatticePolytope& p) {
  if (p.edges().empty()) throw Error(ErrorCode::DegeneratePolytope, "polytope has no edges");
  EdgeStats out;
  for (const auto& e : p.edges()) out.lengths.push_back(e.length);
  out.s = *std::min_element(out.lengths.begin(), out.lengths.end());
  return out;
}

std::size_t d_gonal(const std::vector<IntVector>& points) {
  const auto pts = sorted_unique(points);
  if (pts.size() <= 2) return pts.size();
  std::size_t best = 2;
  const std::size_t n = pts[0].size();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const IntVector dir = subtract(pts[j], pts[i]);
      std::size_t count = 0;
      for (const auto& q : pts) {
        const IntVector d = subtract(q, pts[i]);
        bool parallel = true;
        for (std::size_t a = 0; a < n && parallel; ++a)
          for (std::size_t b = a + 1; b < n; ++b)
            if (dir[a] * d[b] - dir[b] * d[a] != 0) {
              parallel = false;
              break;
            }
        if (parallel) ++count;
      }
      best = std::max(best, count);
    }
  return best;
}

HilbertResult n_inj_hilbert(const std::vector<IntVector>& input) {
  const std::size_t width = check_width(input);
  const auto pts = sorted_unique(input);
  std::vector<IntVector> diffs;
  for (const auto& q : pts) diffs.push_back(subtract(q, pts[0]));
  const auto basis = lattice::sublattice_basis(diffs, width);

  HilbertResult out;
  out.sublattice_rank = basis.size();
  std::vector<std::vector<long>> coords;
  for (const auto& d : diffs) {
    const auto c = basis.empty() ? std::optional<IntVector>(IntVector{})
                                 : lattice::coordinates_in(basis, d);
    if (!c) throw Error(ErrorCode::Internal, "point outside its own sublattice");
    coords.push_back(*c);
  }

  for (int l = 0;; ++l) {
    const auto monos = exponents_up_to(basis.size(), l);
    RationalMatrix m(pts.size(), monos.size(), Rational(0));
    for (std::size_t r = 0; r < pts.size(); ++r)
      for (std::size_t c = 0; c < monos.size(); ++c) {
        Integer v = 1;
        for (std::size_t i = 0; i < basis.size(); ++i)
          for (int t = 0; t < monos[c][i]; ++t) v *= coords[r][i];
        m(r, c) = Rational(v);
      }
    out.profile.push_back(rank_exact(m));
    if (out.profile.back() == pts.size()) {
      out.n_inj = l;
      return out;
    }
    if (l > static_cast<int>(pts.size()))
      throw Error(ErrorCode::Internal, "Hilbert function failed to reach the point count");
  }
}

std::vector<Exponent> vertex_coordinates(const LatticePolytope& p, std::size_t vertex) {
  require_smooth(p);
  const auto dirs = p.edge_directions(vertex);
  std::vector<Exponent> out;
  for (const auto& q : p.points()) {
    const auto c = lattice::coordinates_in(dirs, subtract(q, p.vertices()[vertex]));
    if (!c) throw Error(ErrorCode::Internal, "point not integral in the vertex basis");
    std::vector<int> e(c->begin(), c->end());
    out.emplace_back(std::move(e));
  }
  return out;
}

SubspaceV vertex_chart(const LatticePolytope& p, std::size_t vertex) {
  return SubspaceV::from_monomials(p.nvars(), vertex_coordinates(p, vertex));
}

SubspaceV monomial_space(const LatticePolytope& p) {
  std::vector<Exponent> pts;
  for (const auto& q : p.points()) {
    std::vector<int> e(q.begin(), q.end());
    pts.emplace_back(std::move(e));
  }
  return SubspaceV::from_monomials(p.nvars(), std::move(pts));
}

int n_inj_face(const LatticePolytope& p, const Face& face) {
  require_smooth(p);
  if (!face.anchor) throw Error(ErrorCode::FaceNotFound, "face carries no vertex basis");
  const auto coords = vertex_coordinates(p, *face.anchor);
  std::vector<bool> tangent(p.nvars(), false);
  for (auto j : face.directions) tangent[j] = true;

  std::map<std::vector<int>, std::vector<IntVector>> slices;
  for (std::size_t i = 0; i < p.points().size(); ++i) {
    std::vector<int> key;
    for (std::size_t j = 0; j < p.nvars(); ++j)
      if (!tangent[j]) key.push_back(coords[i][j]);
    slices[key].push_back(p.points()[i]);
  }
  int best = 0;
  for (const auto& [key, slice] : slices) {
    int distance = 0;
    for (int c : key) distance += c;
    best = std::max(best, n_inj_hilbert(slice).n_inj + distance);
  }
  return best;
}

int n_inj_vertex_formula(const LatticePolytope& p, std::size_t vertex) {
  const auto coords = vertex_coordinates(p, vertex);
  int best = 0;
  for (const auto& v : p.vertices()) {
    const auto i = std::lower_bound(p.points().begin(), p.points().end(), v) - p.points().begin();
    best = std::max(best, coords[static_cast<std::size_t>(i)].degree());
  }
  return best;
}

int n_inj_max(const LatticePolytope& p) {
  require_smooth(p);
  int by_vertex = 0;
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    by_vertex = std::max(by_vertex, n_inj_vertex_formula(p, v));
  int by_face = 0;
  for (const auto& f : p.faces()) by_face = std::max(by_face, n_inj_face(p, f));
  if (by_face != by_vertex)
    throw Error(ErrorCode::Internal, "vertex formula " + std::to_string(by_vertex) +
                                         " disagrees with face recursion " + std::to_string(by_face));
  return by_vertex;
}

int n_surj_toric(const LatticePolytope& p) {
  require_smooth(p);
  return static_cast<int>(edge_stats(p).s);
}

SurjResult n1_surj_toric(const LatticePolytope& p, const RankOptions& options) {
  require_smooth(p);
  SurjResult out;
  out.method = RankMethod::Exact;
  bool first = true;
  for (std::size_t fi = 0; fi < p.faces().size(); ++fi) {
    const Face& f = p.faces()[fi];
    if (f.dim + 1 != p.nvars()) continue;
    const SubspaceV chart = vertex_chart(p, *f.anchor);
    std::vector<std::optional<Rational>> coords(p.nvars(), Rational(0));
    for (auto j : f.directions) coords[j] = std::nullopt;
    const SurjReport r = n_surj_report(chart, EvalPoint::partial(std::move(coords)), options);
    if (r.method == RankMethod::Randomized) out.method = RankMethod::Randomized;
    else if (r.method == RankMethod::Symbolic && out.method == RankMethod::Exact)
      out.method = RankMethod::Symbolic;
    out.certified = out.certified && r.certified;
    out.by_facet.emplace_back(fi, r.n_surj);
    out.n1_surj = first ? r.n_surj : std::min(out.n1_surj, r.n_surj);
    first = false;
  }
  if (first) throw Error(ErrorCode::DegeneratePolytope, "polytope has no codimension-1 faces");
  return out;
}

ToricReport toric_report(const LatticePolytope& p, const ToricOptions& options,
                         bool require_smooth_fields) {
  ToricReport r;
  r.d_gonal = d_gonal(p);
  r.hilbert = n_inj_hilbert(p.points());
  if (p.full_dimensional()) {
    r.smooth = smooth_check(p).smooth;
    const auto va = very_ample_check(p, options.search_bound);
    r.very_ample = va.very_ample;
    r.very_ample_bounded = va.bounded;
  } else if (require_smooth_fields) {
    smooth_check(p);  // throws DegeneratePolytope
  }
  if (!r.smooth) {
    if (require_smooth_fields) require_smooth(p);
    return r;
  }
  r.s = edge_stats(p).s;
  for (std::size_t fi = 0; fi < p.faces().size(); ++fi)
    r.n_inj_by_face.emplace_back(fi, n_inj_face(p, p.faces()[fi]));
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    r.n_inj_by_vertex.push_back(n_inj_vertex_formula(p, v));
  r.n_inj_max = n_inj_max(p);
  r.n_surj = n_surj_toric(p);
  r.n1_surj = n1_surj_toric(p, options.rank);
  return r;
}

std::string describe(const LatticePolytope& p, const Face& face) {
  if (face.dim == 0) return "vertex " + to_string(p.vertices()[face.vertices[0]]);
  if (face.dim == 1 && face.vertices.size() == 2)
    return "edge " + to_string(p.vertices()[face.vertices[0]]) + "-" +
           to_string(p.vertices()[face.vertices[1]]);
  std::string out = face.dim == p.nvars() ? "polytope {" : "face{dim " + std::to_string(face.dim) + "} {";
  for (std::size_t i = 0; i < face.vertices.size(); ++i) {
    if (i) out += " ";
    out += to_string(p.vertices()[face.vertices[i]]);
  }
  return out + "}";
}

}  // namespace jetorder
