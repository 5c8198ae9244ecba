#pragma once

// Rational polyhedral cones in both representations.
//   generators: x = sum of nonnegative multiples of rays + any element of the lineality space
//   facets:     ineq . x >= 0 and eq . x = 0
// Conversion enumerates sets of active inequalities; sizes here stay small.

#include <functional>
#include <set>
#include <vector>

#include "toriq/exactmat.hpp"

namespace toriq {

struct ConeGenerators {
  std::size_t dim = 0;
  std::vector<IntVec> rays;       // primitive, pairwise distinct
  std::vector<IntVec> lineality;  // lattice basis of the lineality space
};

struct ConeFacets {
  std::size_t dim = 0;
  std::vector<IntVec> ineq;  // facet normals, primitive
  std::vector<IntVec> eq;    // basis of the orthogonal complement of the linear span
};

inline IntMatrix rows_to_matrix(const std::vector<IntVec>& rows, std::size_t dim) {
  IntMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}
inline IntMatrix cols_to_matrix(const std::vector<IntVec>& cols, std::size_t dim) {
  IntMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}
inline std::vector<IntVec> matrix_cols(const IntMatrix& m) {
  std::vector<IntVec> v(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.col(j);
  return v;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order; stops when fn returns false.
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (!fn(c)) return;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline std::vector<IntVec> clean_rows(const std::vector<IntVec>& rows) {
  std::set<IntVec> seen;
  std::vector<IntVec> out;
  for (const auto& r : rows) {
    if (is_zero(r)) continue;
    IntVec p = primitive(r);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

inline ConeGenerators h_to_v(const std::vector<IntVec>& ineq_in, const std::vector<IntVec>& eq,
                             std::size_t d) {
  ConeGenerators out;
  out.dim = d;
  std::vector<IntVec> ineq = clean_rows(ineq_in);

  std::vector<IntVec> all = ineq;
  all.insert(all.end(), eq.begin(), eq.end());
  IntMatrix lin = all.empty() ? IntMatrix::identity(d) : kernel_basis(rows_to_matrix(all, d));
  if (lin.cols()) {
    IntMatrix basis = row_lattice_basis(lin.transpose());
    for (std::size_t i = 0; i < basis.rows(); ++i) out.lineality.push_back(basis.row(i));
  }

  // Equations of the pointed part: original equations plus orthogonality to the lineality space.
  std::vector<IntVec> eqp = eq;
  eqp.insert(eqp.end(), out.lineality.begin(), out.lineality.end());
  std::vector<IntVec> eq_basis;
  if (!eqp.empty()) {
    IntMatrix b = row_lattice_basis(rows_to_matrix(eqp, d));
    for (std::size_t i = 0; i < b.rows(); ++i) eq_basis.push_back(b.row(i));
  }
  std::size_t e = eq_basis.size();
  if (e + 1 > d) return out;
  std::size_t s = d - 1 - e;

  std::set<IntVec> found;
  for_each_combination(ineq.size(), s, [&](const std::vector<std::size_t>& sub) {
    std::vector<IntVec> rows = eq_basis;
    for (auto i : sub) rows.push_back(ineq[i]);
    IntMatrix k = kernel_basis(rows_to_matrix(rows, d));
    if (k.cols() != 1) return true;
    IntVec x = primitive(k.col(0));
    bool pos = true, neg = true;
    for (const auto& a : ineq) {
      Int v = dot(a, x);
      if (v < 0) pos = false;
      if (v > 0) neg = false;
    }
    if (pos) {
      found.insert(x);
    } else if (neg) {
      for (auto& y : x) y = -y;
      found.insert(x);
    }
    return true;
  });
  out.rays.assign(found.begin(), found.end());
  return out;
}

inline ConeFacets to_facets(const ConeGenerators& g) {
  ConeGenerators dual = h_to_v(g.rays, g.lineality, g.dim);
  ConeFacets f;
  f.dim = g.dim;
  f.ineq = dual.rays;
  f.eq = dual.lineality;
  return f;
}

inline ConeFacets cone_facets(const std::vector<IntVec>& gens, std::size_t d) {
  ConeGenerators g;
  g.dim = d;
  g.rays = gens;
  return to_facets(g);
}

inline ConeGenerators to_generators(const ConeFacets& f) { return h_to_v(f.ineq, f.eq, f.dim); }

inline ConeFacets intersect(const ConeFacets& a, const ConeFacets& b) {
  ConeFacets c;
  c.dim = a.dim;
  c.ineq = a.ineq;
  c.ineq.insert(c.ineq.end(), b.ineq.begin(), b.ineq.end());
  c.eq = a.eq;
  c.eq.insert(c.eq.end(), b.eq.begin(), b.eq.end());
  return c;
}

// Irredundant description of the same cone.
inline ConeFacets normalize(const ConeFacets& f) { return to_facets(to_generators(f)); }

inline std::size_t dimension(const ConeGenerators& g) {
  std::vector<IntVec> all = g.rays;
  all.insert(all.end(), g.lineality.begin(), g.lineality.end());
  if (all.empty()) return 0;
  return rank(cols_to_matrix(all, g.dim));
}

inline bool is_pointed(const ConeGenerators& g) { return g.lineality.empty(); }

template <class V>
bool contains(const ConeFacets& f, const V& x) {
  for (const auto& e : f.eq)
    if (dot(e, x) != 0) return false;
  for (const auto& a : f.ineq)
    if (dot(a, x) < 0) return false;
  return true;
}

// Membership in the relative interior; f must be irredundant.
template <class V>
bool in_relint(const ConeFacets& f, const V& x) {
  for (const auto& e : f.eq)
    if (dot(e, x) != 0) return false;
  for (const auto& a : f.ineq)
    if (dot(a, x) <= 0) return false;
  return true;
}

inline RatVec to_ratvec(const IntVec& v) { return RatVec(v.begin(), v.end()); }

}  // namespace toriq
