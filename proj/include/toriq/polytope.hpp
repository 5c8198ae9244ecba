#pragma once

// Convex hulls of finitely many rational points: facets, polar duals,
// normalized volume by a pulling triangulation, lattice points.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "toriq/cone.hpp"
#include "toriq/exactmat.hpp"
#include "toriq/fandata.hpp"

namespace toriq {

// normal . x >= -offset on the polytope, with equality exactly on the facet.
struct Facet {
  IntVec normal;  // primitive
  Rat offset;
  IndexSet points;  // indices of input points lying on the facet (vertices only)
};

struct Polytope {
  std::size_t dim = 0;
  RatMatrix points;  // input points as columns
  IndexSet vertices;
  std::vector<Facet> facets;

  RatVec point(std::size_t j) const { return points.col(j); }
  RatMatrix vertex_matrix() const { return points.select_cols(vertices); }
};

inline Rat evaluate(const Facet& f, const RatVec& x) { return dot(f.normal, x) + f.offset; }

namespace detail {
inline std::size_t affine_rank(const RatMatrix& pts, const IndexSet& s) {
  if (s.size() <= 1) return 0;
  RatMatrix d(pts.rows(), s.size() - 1);
  for (std::size_t k = 1; k < s.size(); ++k)
    for (std::size_t i = 0; i < pts.rows(); ++i) d(i, k - 1) = pts(i, s[k]) - pts(i, s[0]);
  return rank(d);
}
}  // namespace detail

inline Polytope facet_enumeration(const RatMatrix& pts) {
  std::size_t n = pts.rows(), k = pts.cols();
  Polytope p;
  p.dim = n;
  p.points = pts;
  std::vector<IntVec> gens;
  for (std::size_t j = 0; j < k; ++j) {
    RatVec h = pts.col(j);
    h.push_back(1);
    gens.push_back(clear_denominators(h));
  }
  ConeFacets cf = cone_facets(gens, n + 1);
  if (!cf.eq.empty()) throw Error(ErrorCode::NotFullDimensional, "polytope is not full-dimensional");

  std::vector<bool> duplicate(k, false);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!duplicate[i] && pts.col(i) == pts.col(j)) duplicate[j] = true;

  std::vector<std::vector<std::size_t>> incident(k);
  for (const auto& y : cf.ineq) {
    IntVec a(y.begin(), y.begin() + n);
    Int g = content(a);
    Facet f;
    f.normal.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.normal[i] = a[i] / g;
    f.offset = Rat(y[n], g);
    f.offset.canonicalize();
    p.facets.push_back(f);
  }
  for (std::size_t t = 0; t < p.facets.size(); ++t)
    for (std::size_t j = 0; j < k; ++j)
      if (!duplicate[j] && evaluate(p.facets[t], pts.col(j)) == 0) incident[j].push_back(t);
  for (std::size_t j = 0; j < k; ++j) {
    if (duplicate[j] || incident[j].size() < n) continue;
    std::vector<IntVec> normals;
    for (auto t : incident[j]) normals.push_back(p.facets[t].normal);
    if (rank(rows_to_matrix(normals, n)) == n) p.vertices.push_back(j);
  }
  for (auto& f : p.facets)
    for (auto j : p.vertices)
      if (evaluate(f, pts.col(j)) == 0) f.points.push_back(j);
  return p;
}

inline Polytope facet_enumeration(const IntMatrix& pts) { return facet_enumeration(to_rat(pts)); }

inline bool origin_in_interior(const Polytope& p) {
  return std::all_of(p.facets.begin(), p.facets.end(), [](const Facet& f) { return f.offset > 0; });
}

// Vertices of the polar polytope {u : <u, x> >= -1 on P}, one per facet of P.
inline RatMatrix polar_vertices(const Polytope& p) {
  if (!origin_in_interior(p))
    throw Error(ErrorCode::OriginNotInterior, "origin is not an interior point");
  RatMatrix out(p.dim, p.facets.size());
  for (std::size_t t = 0; t < p.facets.size(); ++t)
    for (std::size_t i = 0; i < p.dim; ++i) out(i, t) = Rat(p.facets[t].normal[i]) / p.facets[t].offset;
  return out;
}

inline RatMatrix polar_vertices(const IntMatrix& v) { return polar_vertices(facet_enumeration(v)); }

// Pulling triangulation: cone the lexicographically least vertex over a
// triangulation of each facet avoiding it. Returns simplices as point indices.
inline std::vector<IndexSet> triangulate_face(const Polytope& p, IndexSet face, std::size_t d) {
  const RatMatrix& pts = p.points;
  auto lex_less = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < pts.rows(); ++i)
      if (pts(i, a) != pts(i, b)) return pts(i, a) < pts(i, b);
    return a < b;
  };
  std::sort(face.begin(), face.end(), lex_less);
  if (face.size() == d + 1) return {face};
  std::size_t v0 = face[0];

  std::set<IndexSet> cand;
  for (const auto& f : p.facets) {
    IndexSet s;
    for (auto j : face)
      if (std::find(f.points.begin(), f.points.end(), j) != f.points.end()) s.push_back(j);
    if (s.size() < d || s.size() == face.size()) continue;
    std::sort(s.begin(), s.end());
    if (detail::affine_rank(pts, s) == d - 1) cand.insert(s);
  }
  std::vector<IndexSet> sub(cand.begin(), cand.end()), maximal;
  for (std::size_t a = 0; a < sub.size(); ++a) {
    bool contained = false;
    for (std::size_t b = 0; b < sub.size() && !contained; ++b)
      if (a != b && sub[b].size() > sub[a].size() &&
          std::includes(sub[b].begin(), sub[b].end(), sub[a].begin(), sub[a].end()))
        contained = true;
    if (!contained) maximal.push_back(sub[a]);
  }
  std::vector<IndexSet> out;
  for (const auto& r : maximal) {
    if (std::binary_search(r.begin(), r.end(), v0)) continue;
    for (auto t : triangulate_face(p, r, d - 1)) {
      t.insert(t.begin(), v0);
      out.push_back(t);
    }
  }
  return out;
}

inline std::vector<IndexSet> triangulate(const Polytope& p) {
  return triangulate_face(p, p.vertices, p.dim);
}

inline Rat simplex_volume(const RatMatrix& pts, const IndexSet& s) {
  std::size_t n = pts.rows();
  RatMatrix d(n, n);
  for (std::size_t k = 1; k < s.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) d(i, k - 1) = pts(i, s[k]) - pts(i, s[0]);
  Rat v = det(d);
  return v < 0 ? Rat(-v) : v;
}

// n! times the Euclidean volume.
inline Rat normalized_volume(const Polytope& p) {
  Rat total = 0;
  for (const auto& s : triangulate(p)) total += simplex_volume(p.points, s);
  return total;
}
inline Rat normalized_volume(const RatMatrix& pts) { return normalized_volume(facet_enumeration(pts)); }
inline Rat normalized_volume(const IntMatrix& pts) { return normalized_volume(to_rat(pts)); }

// Simplices of a triangulation of the boundary, each with dim vertices.
inline std::vector<IndexSet> boundary_triangulation(const Polytope& p) {
  std::vector<IndexSet> out;
  for (const auto& f : p.facets)
    for (auto& s : triangulate_face(p, f.points, p.dim - 1)) {
      std::sort(s.begin(), s.end());
      out.push_back(s);
    }
  return out;
}

// Integer points x with every facet inequality strict (closed=false) or weak (closed=true).
inline std::vector<IntVec> lattice_points(const Polytope& p, bool closed, std::size_t limit = 5000000) {
  std::size_t n = p.dim;
  IntVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool first = true;
    for (auto j : p.vertices) {
      Int f = floor_div(p.points(i, j).get_num(), p.points(i, j).get_den());
      Int c = -floor_div(-p.points(i, j).get_num(), p.points(i, j).get_den());
      if (first || f < lo[i]) lo[i] = f;
      if (first || c > hi[i]) hi[i] = c;
      first = false;
    }
  }
  Int box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= hi[i] - lo[i] + 1;
  if (box > Int(static_cast<unsigned long>(limit)))
    throw Error(ErrorCode::TooLarge, "lattice point enumeration box is too large");
  std::vector<IntVec> out;
  IntVec x = lo;
  for (;;) {
    RatVec xr(x.begin(), x.end());
    bool in = true;
    for (const auto& f : p.facets) {
      Rat v = evaluate(f, xr);
      if (v < 0 || (!closed && v == 0)) {
        in = false;
        break;
      }
    }
    if (in) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return out;
}

inline std::vector<IntVec> interior_lattice_points(const Polytope& p) { return lattice_points(p, false); }

inline bool is_lattice_polytope(const Polytope& p) {
  for (auto j : p.vertices)
    for (std::size_t i = 0; i < p.dim; ++i)
      if (p.points(i, j).get_den() != 1) return false;
  return true;
}

inline bool is_reflexive(const Polytope& p) {
  return is_lattice_polytope(p) && origin_in_interior(p) && is_integral(polar_vertices(p));
}

// Least k with k * conv(V)^polar a lattice polytope.
inline Int fmatrix_index(const IntMatrix& v) {
  Polytope p = facet_enumeration(v);
  if (!origin_in_interior(p)) throw Error(ErrorCode::NotFMatrix, "origin is not interior to conv(V)");
  return denominator_lcm(polar_vertices(p));
}

// One column per maximal cone: the m with <m, v> = -1 for every generator v of the cone.
inline RatMatrix polar_vertex_matrix(const FanData& fan) {
  std::size_t n = fan.dim();
  RatMatrix out(n, fan.cones.size());
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const IndexSet& cone = fan.cones[c];
    RatMatrix h(cone.size(), n);
    for (std::size_t k = 0; k < cone.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) h(k, i) = fan.rays(i, cone[k]);
    auto x = solve(h, RatVec(cone.size(), Rat(-1)));
    if (!x || rank(h) < n)
      throw Error(ErrorCode::OutOfDomain, "anticanonical class is not Q-Cartier on a maximal cone");
    out.set_col(c, *x);
  }
  return out;
}

// Normalized volume of the convex hull of the polar vertex matrix.
inline Rat degree(const FanData& fan) { return normalized_volume(polar_vertex_matrix(fan)); }

}  // namespace toriq
