#pragma once

// Shared test helpers: fixtures, seeded random matrices, and oracles that avoid
// the library code paths they check.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toriq/toriq.hpp"

namespace testing_support {

using namespace toriq;

inline std::string fixture(const std::string& name) { return std::string(TORIQ_FIXTURES) + "/" + name; }

inline CoveringData analyze_fixture(const std::string& name) {
  return analyze(resolve_fan(load_document(fixture(name))));
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = dist(rng);
  return a;
}

// Random n x m fan matrix: full rank, distinct primitive columns, origin interior to conv.
inline IntMatrix random_fan_matrix(std::mt19937& rng, std::size_t n, std::size_t m, int bound = 3) {
  for (;;) {
    IntMatrix v = random_matrix(rng, n, m, -bound, bound);
    bool ok = true;
    std::set<std::vector<Int>> seen;
    for (std::size_t j = 0; j < m && ok; ++j) {
      IntVec c = v.col(j);
      if (is_zero(c) || content(c) != 1 || !seen.insert(c).second) ok = false;
    }
    if (!ok || rank(v) < n) continue;
    try {
      Polytope p = facet_enumeration(v);
      if (!origin_in_interior(p) || p.vertices.size() != m) continue;
    } catch (const Error&) {
      continue;
    }
    return v;
  }
}

// Determinant by cofactor expansion, independent of the elimination code.
inline Int cofactor_det(const IntMatrix& a) {
  std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Int s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Int minor = cofactor_det(a.select_rows(rows).select_cols(cols));
    s += (j % 2 ? -1 : 1) * a(0, j) * minor;
  }
  return s;
}

// gcd of all k x k minors.
inline Int minor_gcd(const IntMatrix& a, std::size_t k) {
  Int g = 0;
  std::vector<bool> rsel(a.rows(), false), csel(a.cols(), false);
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (rsel[i]) rows.push_back(i);
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (csel[j]) cols.push_back(j);
      g = gcd(g, cofactor_det(a.select_rows(rows).select_cols(cols)));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

// Invariant factors from minor gcds: d_k = D_k / D_{k-1}.
inline IntVec invariant_factors_by_minors(const IntMatrix& a) {
  IntVec out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Int dk = minor_gcd(a, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// Facets of conv(points) in dimension 2 or 3 by brute force over point tuples.
struct Halfspace {
  IntVec a;
  Int b;  // a.x <= b
};

inline std::vector<Halfspace> brute_facets(const IntMatrix& pts) {
  std::size_t n = pts.rows(), m = pts.cols();
  std::vector<Halfspace> out;
  std::set<std::vector<Int>> seen;
  auto consider = [&](IntVec a) {
    if (is_zero(a)) return;
    a = primitive(a);
    for (int sign : {1, -1}) {
      IntVec s = a;
      for (auto& x : s) x *= sign;
      Int b = dot(s, pts.col(0));
      std::size_t on = 0;
      for (std::size_t j = 0; j < m; ++j) {
        Int v = dot(s, pts.col(j));
        if (v > b) b = v;
      }
      std::vector<IntVec> tp;
      for (std::size_t j = 0; j < m; ++j)
        if (dot(s, pts.col(j)) == b) tp.push_back(pts.col(j)), ++on;
      if (on < n) continue;
      // affine rank of the touching set must be n - 1
      IntMatrix d(n, tp.size() - 1);
      for (std::size_t k = 1; k < tp.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) d(i, k - 1) = tp[k][i] - tp[0][i];
      if (rank(d) != n - 1) continue;
      std::vector<Int> key = s;
      key.push_back(b);
      if (seen.insert(key).second) out.push_back({s, b});
    }
  };
  if (n == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        consider({pts(1, i) - pts(1, j), pts(0, j) - pts(0, i)});
  } else if (n == 3) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
          IntVec u(3), w(3);
          for (std::size_t t = 0; t < 3; ++t) {
            u[t] = pts(t, j) - pts(t, i);
            w[t] = pts(t, k) - pts(t, i);
          }
          consider({u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]});
        }
  }
  return out;
}

// Lattice points of t * conv(points), counted against the brute-force facets.
inline Int dilate_count(const IntMatrix& pts, const std::vector<Halfspace>& hs, long t) {
  std::size_t n = pts.rows();
  IntVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = pts(i, 0) * t;
    for (std::size_t j = 0; j < pts.cols(); ++j) {
      lo[i] = std::min(lo[i], Int(pts(i, j) * t));
      hi[i] = std::max(hi[i], Int(pts(i, j) * t));
    }
  }
  Int count = 0;
  IntVec x = lo;
  for (;;) {
    bool in = true;
    for (const auto& h : hs)
      if (dot(h.a, x) > h.b * t) {
        in = false;
        break;
      }
    if (in) ++count;
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

// n! Vol by Ehrhart: finite differences of the lattice point counts of dilates.
inline Int ehrhart_normalized_volume(const IntMatrix& pts) {
  std::vector<Halfspace> hs = brute_facets(pts);
  std::size_t n = pts.rows();
  if (n == 2) return dilate_count(pts, hs, 2) - 2 * dilate_count(pts, hs, 1) + 1;
  if (n == 3)
    return dilate_count(pts, hs, 3) - 3 * dilate_count(pts, hs, 2) + 3 * dilate_count(pts, hs, 1) - 1;
  throw Error(ErrorCode::OutOfDomain, "oracle covers dimensions 2 and 3");
}

// Unit-cube decomposition: vol(P) = sum over unit cubes c of vol(P cap c), each
// piece clipped exactly and measured by fan triangulation from its centroid.
namespace cube_detail {

struct Half {
  RatVec a;
  Rat b;  // a.x <= b
};

inline std::optional<RatVec> cramer(const std::vector<const Half*>& hs) {
  std::size_t n = hs.size();
  auto d = [&](std::size_t col, bool replace) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (replace && j == col) ? hs[i]->b : hs[i]->a[j];
    if (n == 2) return Rat(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    return Rat(m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)));
  };
  Rat den = d(0, false);
  if (den == 0) return std::nullopt;
  RatVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = d(j, true) / den;
  return x;
}

inline Rat rdot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline RatVec cross(const RatVec& u, const RatVec& w) {
  return {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
}

inline RatVec centroid(const std::vector<RatVec>& pts) {
  RatVec g(pts[0].size(), Rat(0));
  for (const auto& p : pts)
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += p[i];
  for (auto& x : g) x /= Rat(static_cast<long>(pts.size()));
  return g;
}

// Order coplanar points cyclically around g; "up" orients the plane (2D: z axis).
inline void cyclic_sort(std::vector<RatVec>& pts, const RatVec& g, const RatVec& up) {
  auto lift = [](RatVec v) {
    if (v.size() == 2) v.push_back(0);
    return v;
  };
  RatVec ref = lift(sub(pts[0], g));
  auto half = [&](const RatVec& x) {
    Rat c = rdot(cross(ref, x), up);
    return c > 0 || (c == 0 && rdot(ref, x) > 0) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVec& p, const RatVec& q) {
    RatVec x = lift(sub(p, g)), y = lift(sub(q, g));
    int hx = half(x), hy = half(y);
    if (hx != hy) return hx < hy;
    return rdot(cross(x, y), up) > 0;
  });
}

inline Rat clipped_volume(const std::vector<Half>& hs, std::size_t n) {
  std::vector<RatVec> verts;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<const Half*> sel;
      for (auto i : pick) sel.push_back(&hs[i]);
      auto x = cramer(sel);
      if (!x) return;
      for (const auto& h : hs)
        if (rdot(h.a, *x) > h.b) return;
      if (std::find(verts.begin(), verts.end(), *x) == verts.end()) verts.push_back(*x);
      return;
    }
    for (std::size_t i = start; i < hs.size(); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (verts.size() <= n) return 0;
  RatVec g = centroid(verts);
  if (n == 2) {
    cyclic_sort(verts, g, {0, 0, 1});
    Rat area = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const RatVec& p = verts[i];
      const RatVec& q = verts[(i + 1) % verts.size()];
      area += p[0] * q[1] - p[1] * q[0];
    }
    return area / 2;
  }
  Rat vol = 0;
  std::set<std::vector<RatVec>> done;  // a facet plane may coincide with a cube face
  for (const auto& h : hs) {
    std::vector<RatVec> face;
    for (const auto& v : verts)
      if (rdot(h.a, v) == h.b) face.push_back(v);
    if (face.size() < 3 || !done.insert(face).second) continue;
    RatVec fg = centroid(face);
    cyclic_sort(face, fg, h.a);
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      RatVec a = sub(face[0], g), b = sub(face[i], g), c = sub(face[i + 1], g);
      Rat t = rdot(a, cross(b, c));
      vol += (t < 0 ? Rat(-t) : t) / 6;
    }
  }
  return vol;
}

}  // namespace cube_detail

inline Int cube_normalized_volume(const IntMatrix& pts) {
  using namespace cube_detail;
  std::size_t n = pts.rows();
  if (n != 2 && n != 3) throw Error(ErrorCode::OutOfDomain, "oracle covers dimensions 2 and 3");
  std::vector<Halfspace> facets = brute_facets(pts);
  IntVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = pts(i, 0);
    for (std::size_t j = 0; j < pts.cols(); ++j) {
      lo[i] = std::min(lo[i], pts(i, j));
      hi[i] = std::max(hi[i], pts(i, j));
    }
  }
  Rat total = 0;
  IntVec c = lo;
  for (;;) {
    // corners of the cube [c, c + 1]
    std::size_t inside = 0, corners = std::size_t(1) << n;
    bool empty = false;
    std::vector<const Halfspace*> cutting;
    for (const auto& f : facets) {
      std::size_t bad = 0;
      for (std::size_t mask = 0; mask < corners; ++mask) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += f.a[i] * (c[i] + ((mask >> i) & 1));
        if (s > f.b) ++bad;
      }
      if (bad == corners) empty = true;
      if (bad == 0) ++inside;
      else cutting.push_back(&f);
    }
    if (!empty) {
      if (inside == facets.size()) {
        total += 1;
      } else {
        std::vector<Half> hs;
        for (const auto* f : cutting) hs.push_back({to_ratvec(f->a), Rat(f->b)});
        for (std::size_t i = 0; i < n; ++i) {
          RatVec e(n, Rat(0));
          e[i] = 1;
          hs.push_back({e, Rat(c[i] + 1)});
          e[i] = -1;
          hs.push_back({e, Rat(-c[i])});
        }
        total += clipped_volume(hs, n);
      }
    }
    std::size_t i = 0;
    while (i < n && c[i] + 1 >= hi[i]) c[i] = lo[i], ++i;
    if (i == n) break;
    ++c[i];
  }
  Rat nv = total * Rat(factorial(n));
  if (nv.get_den() != 1) throw Error(ErrorCode::InvalidInput, "cube oracle: non-integral normalized volume");
  return nv.get_num();
}

// Random reflexive polytope with vertices in {-1, 0, 1}^n, checked by brute-force facets.
inline IntMatrix random_reflexive(std::mt19937& rng, std::size_t n, std::size_t max_m) {
  for (;;) {
    std::size_t m = n + 1 + rng() % (max_m - n);
    IntMatrix v = random_fan_matrix(rng, n, m, 1);
    bool reflexive = true;
    for (const auto& h : brute_facets(v))
      if (h.b != 1) reflexive = false;
    if (reflexive) return v;
  }
}

inline bool same_sets(std::vector<IndexSet> a, std::vector<IndexSet> b) {
  for (auto& s : a) std::sort(s.begin(), s.end());
  for (auto& s : b) std::sort(s.begin(), s.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// 1-based generator sets, as printed in examples.
inline std::vector<IndexSet> one_based(std::vector<std::vector<int>> sets) {
  std::vector<IndexSet> out;
  for (const auto& s : sets) {
    IndexSet t;
    for (int i : s) t.push_back(static_cast<std::size_t>(i - 1));
    out.push_back(t);
  }
  return out;
}

}  // namespace testing_support
