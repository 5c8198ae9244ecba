#pragma once

// Fans over fan matrices, GKZ cones (effective, moving, nef) of weight matrices,
// and the fan cut out by a point of the moving cone.

#include <map>
#include <string>
#include <vector>

#include "toriq/cone.hpp"
#include "toriq/fandata.hpp"
#include "toriq/galecore.hpp"
#include "toriq/polytope.hpp"

namespace toriq {

inline std::vector<IntVec> columns_of(const IntMatrix& a, const IndexSet& idx) {
  std::vector<IntVec> out;
  for (auto j : idx) out.push_back(a.col(j));
  return out;
}

// Cones over the facets of conv(V).
inline FanData face_fan(const IntMatrix& v) {
  Polytope p = facet_enumeration(v);
  if (!origin_in_interior(p)) throw Error(ErrorCode::OriginNotInterior, "origin is not interior to conv(V)");
  FanData fan;
  fan.rays = v;
  std::vector<bool> used(v.cols(), false);
  for (const auto& f : p.facets) {
    IndexSet cone;
    for (std::size_t j = 0; j < v.cols(); ++j)
      if (evaluate(f, to_ratvec(v.col(j))) == 0) {
        cone.push_back(j);
        used[j] = true;
      }
    fan.cones.push_back(cone);
  }
  for (std::size_t j = 0; j < v.cols(); ++j)
    if (!used[j]) throw Error(ErrorCode::InvalidFan, "a column lies in the interior of conv(V)");
  sort_cones(fan.cones);
  return fan;
}

struct FanCheck {
  bool valid = true;     // cones are full-dimensional, pointed, and meet only along boundaries
  bool complete = false; // every facet of a maximal cone is shared by exactly two maximal cones
  bool simplicial = false;
  std::string problem;
};

inline FanCheck check_fan(const FanData& fan) {
  FanCheck out;
  std::size_t n = fan.dim();
  auto fail = [&](const std::string& why) {
    out.valid = false;
    out.problem = why;
    return out;
  };
  std::vector<ConeFacets> facets;
  out.simplicial = true;
  std::map<IndexSet, int> walls;
  for (const auto& cone : fan.cones) {
    if (cone.empty()) return fail("empty cone");
    for (auto j : cone)
      if (j >= fan.size()) return fail("cone index out of range");
    if (cone.size() != n) out.simplicial = false;
    std::vector<IntVec> gens = columns_of(fan.rays, cone);
    if (rank(cols_to_matrix(gens, n)) < n) return fail("a maximal cone is not full-dimensional");
    ConeFacets cf = cone_facets(gens, n);
    if (rank(rows_to_matrix(cf.ineq, n)) < n) return fail("a maximal cone is not pointed");
    for (std::size_t j = 0; j < fan.size(); ++j) {
      bool member = std::binary_search(cone.begin(), cone.end(), j);
      IntVec v = fan.rays.col(j);
      if (!member && contains(cf, v)) return fail("a column lies in a cone it does not generate");
      if (member) {
        std::vector<IntVec> active;
        for (const auto& a : cf.ineq)
          if (dot(a, v) == 0) active.push_back(a);
        if (active.empty() || rank(rows_to_matrix(active, n)) < n - 1)
          return fail("a generator is not a ray of its cone");
      }
    }
    for (const auto& a : cf.ineq) {
      IndexSet wall;
      for (auto j : cone)
        if (dot(a, fan.rays.col(j)) == 0) wall.push_back(j);
      ++walls[wall];
    }
    facets.push_back(cf);
  }
  for (std::size_t a = 0; a < facets.size(); ++a)
    for (std::size_t b = a + 1; b < facets.size(); ++b)
      if (dimension(to_generators(intersect(facets[a], facets[b]))) == n)
        return fail("two maximal cones overlap");
  out.complete = !walls.empty();
  for (const auto& [wall, count] : walls)
    if (count != 2) out.complete = false;
  return out;
}

inline bool is_complete(const FanData& fan) {
  FanCheck c = check_fan(fan);
  return c.valid && c.complete;
}
inline bool is_simplicial(const FanData& fan) { return check_fan(fan).simplicial; }

inline void validate_fan(const FanData& fan) {
  FanCheck c = check_fan(fan);
  if (!c.valid) throw Error(ErrorCode::InvalidFan, c.problem);
  if (!c.complete) throw Error(ErrorCode::InvalidFan, "fan is not complete");
}

// ---- GKZ cones of a weight matrix

struct GkzCone {
  ConeFacets facets;
  ConeGenerators generators;

  IntMatrix rays() const { return cols_to_matrix(generators.rays, generators.dim); }
  bool contains_point(const RatVec& w) const { return contains(facets, w); }
  bool relint_point(const RatVec& w) const { return in_relint(facets, w); }
};

inline GkzCone make_gkz(const ConeFacets& f) {
  GkzCone c;
  c.generators = to_generators(f);
  c.facets = to_facets(c.generators);
  return c;
}

inline GkzCone eff_cone(const IntMatrix& q) {
  return make_gkz(cone_facets(matrix_cols(q), q.rows()));
}

inline GkzCone mov_cone(const IntMatrix& q) {
  std::size_t m = q.cols();
  ConeFacets acc;
  acc.dim = q.rows();
  for (std::size_t i = 0; i < m; ++i) {
    IndexSet rest = complement({i}, m);
    acc = intersect(acc, cone_facets(columns_of(q, rest), q.rows()));
  }
  return make_gkz(acc);
}

// Intersection over maximal cones of the cones spanned by the complementary weight columns.
inline GkzCone nef_cone(const IntMatrix& q, const std::vector<IndexSet>& cones) {
  ConeFacets acc;
  acc.dim = q.rows();
  for (const auto& c : cones)
    acc = intersect(acc, cone_facets(columns_of(q, complement(c, q.cols())), q.rows()));
  return make_gkz(acc);
}

inline IntVec anticanonical_class(const IntMatrix& q) {
  IntVec w(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) w[i] += q(i, j);
  return w;
}

// Q_I x = Q.1 has an integer solution for the complement I of every maximal cone.
inline bool is_gorenstein_weight(const IntMatrix& q, const std::vector<IndexSet>& cones) {
  IntVec w = anticanonical_class(q);
  for (const auto& c : cones)
    if (!solve_integer(q.select_cols(complement(c, q.cols())), w)) return false;
  return true;
}

// Q_I x = Q.1 has a strictly positive rational solution for every maximal cone.
inline bool is_qfano_weight(const IntMatrix& q, const std::vector<IndexSet>& cones) {
  RatVec w = to_ratvec(anticanonical_class(q));
  for (const auto& c : cones) {
    ConeFacets f = cone_facets(columns_of(q, complement(c, q.cols())), q.rows());
    if (!in_relint(f, w)) return false;
  }
  return true;
}

// Maximal cones are the complements of the linearly independent index sets I with
// w in the relative interior of cone(Q_I). Such I are exactly the minimal index
// sets whose cone has w in its relative interior.
inline FanData fan_from_point(const IntMatrix& q, const RatVec& w) {
  std::size_t r = q.rows(), m = q.cols();
  if (!mov_cone(q).contains_point(w)) throw Error(ErrorCode::OutsideMoving, "point is outside the moving cone");
  FanData fan;
  fan.rays = gale_dual(q);
  for (std::size_t s = 1; s <= r; ++s)
    for_each_combination(m, s, [&](const IndexSet& idx) {
      RatMatrix qi = to_rat(q.select_cols(idx));
      if (rank(qi) < s) return true;
      auto x = solve(qi, w);
      if (x && std::all_of(x->begin(), x->end(), [](const Rat& t) { return t > 0; }))
        fan.cones.push_back(complement(idx, m));
      return true;
    });
  sort_cones(fan.cones);
  validate_fan(fan);
  return fan;
}
inline FanData fan_from_point(const IntMatrix& q, const IntVec& w) { return fan_from_point(q, to_ratvec(w)); }

// The fan of the weight point Q.1 placed over V itself.
inline FanData qfano_representative(const IntMatrix& v) {
  IntMatrix q = gale_dual(v);
  FanData fan;
  fan.rays = v;
  fan.cones = fan_from_point(q, anticanonical_class(q)).cones;
  validate_fan(fan);
  return fan;
}

}  // namespace toriq
