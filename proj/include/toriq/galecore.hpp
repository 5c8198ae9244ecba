#pragma once

// Gale duality between fan matrices and weight matrices, the F/W predicates,
// and GL_n(Z) x permutation equivalence with witnesses.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toriq/cone.hpp"
#include "toriq/exactmat.hpp"

namespace toriq {

namespace detail {

// True iff the rows of c extend to a basis of Z^cols.
inline bool is_primitive_system(const IntMatrix& c) {
  SnfResult s = snf(c);
  if (s.rank < c.rows()) return false;
  for (const auto& d : s.diagonal())
    if (d != 1) return false;
  return true;
}

inline Int row_sum(const IntVec& v) {
  Int s = 0;
  for (const auto& x : v) s += x;
  return s;
}

// Lattice basis made of nonnegative vectors: small-coefficient search first,
// then an explicit construction from an interior point of the dual cone.
inline std::optional<IntMatrix> nonnegative_basis(const IntMatrix& h) {
  std::size_t r = h.rows(), m = h.cols();
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < m; ++j) cols.push_back(h.col(j));
  ConeGenerators dual = h_to_v(cols, {}, r);
  if (dimension(dual) < r) return std::nullopt;

  auto image = [&](const IntVec& c) {
    IntVec x(m);
    for (std::size_t j = 0; j < m; ++j) x[j] = dot(c, cols[j]);
    return x;
  };

  for (int bound = 1; bound <= 3; ++bound) {
    double count = 1;
    for (std::size_t i = 0; i < r; ++i) count *= 2 * bound + 1;
    if (count > 60000) break;
    struct Cand {
      IntVec c, x;
      Int sum;
    };
    std::vector<Cand> cands;
    IntVec c(r, Int(-bound));
    for (;;) {
      if (!is_zero(c) && content(c) == 1) {
        IntVec x = image(c);
        if (std::all_of(x.begin(), x.end(), [](const Int& v) { return v >= 0; }))
          cands.push_back({c, x, row_sum(x)});
      }
      std::size_t i = 0;
      while (i < r && c[i] == bound) c[i++] = -bound;
      if (i == r) break;
      ++c[i];
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.sum != b.sum) return a.sum < b.sum;
      return a.x > b.x;
    });
    std::vector<std::size_t> pick;
    long budget = 20000;
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
      if (pick.size() == r) return true;
      for (std::size_t k = from; k < cands.size(); ++k) {
        if (--budget < 0) return false;
        pick.push_back(k);
        IntMatrix sys(pick.size(), r);
        for (std::size_t t = 0; t < pick.size(); ++t) sys.set_row(t, cands[pick[t]].c);
        if (is_primitive_system(sys) && dfs(k + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (dfs(0)) {
      IntMatrix out(r, m);
      for (std::size_t t = 0; t < r; ++t) out.set_row(t, cands[pick[t]].x);
      return out;
    }
  }

  IntVec p(r);
  for (const auto& ray : dual.rays)
    for (std::size_t i = 0; i < r; ++i) p[i] += ray[i];
  p = primitive(p);
  IntMatrix pc(r, 1);
  pc.set_col(0, p);
  IntMatrix basis = to_int(inverse(to_rat(hnf(pc).U)));  // first column is p
  IntMatrix out(r, m);
  IntVec px = image(p);
  for (std::size_t t = 0; t < r; ++t) {
    IntVec b = basis.col(t);
    if (t > 0) {
      IntVec bx = image(b);
      Int shift = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (px[j] == 0) continue;
        Int need = -floor_div(bx[j], px[j]);  // ceil(-bx/px)
        if (need > shift) shift = need;
      }
      for (std::size_t i = 0; i < r; ++i) b[i] += shift * p[i];
    }
    out.set_row(t, image(b));
  }
  return out;
}

}  // namespace detail

// Basis of the saturated integer kernel, canonical for the lattice; nonnegative when possible.
inline IntMatrix gale_dual(const IntMatrix& a) {
  if (rank(a) < a.rows()) throw Error(ErrorCode::RankDeficient, "gale_dual: rows are dependent");
  IntMatrix k = kernel_basis(a);
  if (k.cols() == 0) return IntMatrix(0, a.cols());
  IntMatrix h = row_lattice_basis(k.transpose());
  if (auto pos = detail::nonnegative_basis(h)) {
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < pos->rows(); ++i) rows.push_back(pos->row(i));
    std::sort(rows.begin(), rows.end(), [](const IntVec& x, const IntVec& y) {
      Int sx = detail::row_sum(x), sy = detail::row_sum(y);
      if (sx != sy) return sx > sy;
      return x > y;
    });
    return IntMatrix::from_rows(rows);
  }
  return h;
}

inline bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  return a.cols() == b.cols() && row_lattice_basis(a) == row_lattice_basis(b);
}

struct MatrixClass {
  bool is_F = false, is_CF = false, is_W = false;
  std::optional<bool> is_reduced;
  std::vector<std::string> violated;  // tags like "F.b" or "W.e"
};

inline bool has_zero_column(const IntMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (is_zero(a.col(j))) return true;
  return false;
}

inline bool columns_primitive(const IntMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (content(a.col(j)) != 1) return false;
  return true;
}

// Cone over the columns is the whole space.
inline bool columns_span_positively(const IntMatrix& a) {
  ConeGenerators dual = h_to_v(matrix_cols(a), {}, a.rows());
  return dual.rays.empty() && dual.lineality.empty();
}

inline MatrixClass classify_matrix(const IntMatrix& a) {
  MatrixClass out;
  std::size_t n = a.rows(), m = a.cols();
  std::size_t rk = rank(a);

  std::vector<std::string> f, w;
  if (rk < n) f.push_back("F.a");
  if (!columns_span_positively(a)) f.push_back("F.b");
  if (has_zero_column(a)) f.push_back("F.c");
  {
    std::set<IntVec> dirs;
    for (std::size_t j = 0; j < m; ++j) {
      IntVec c = a.col(j);
      if (is_zero(c)) continue;
      if (!dirs.insert(primitive(c)).second) {
        f.push_back("F.d");
        break;
      }
    }
  }
  out.is_F = f.empty();
  bool cf_lattice = rk == n && column_lattice_index(a) == 1;
  out.is_CF = out.is_F && cf_lattice;
  if (!cf_lattice) f.push_back("F.e");

  if (rk < n) w.push_back("W.a");
  if (rk == n) {
    IntVec d = invariant_factors(a);
    if (std::any_of(d.begin(), d.end(), [](const Int& x) { return x != 1; })) w.push_back("W.b");
    ConeGenerators dual = h_to_v(matrix_cols(a), {}, n);
    if (dimension(dual) < n) w.push_back("W.c");
  }
  if (has_zero_column(a)) w.push_back("W.d");
  IntMatrix at = a.transpose();
  for (std::size_t j = 0; j < m; ++j) {
    IntVec e(m);
    e[j] = 1;
    if (solve_integer(at, e)) {
      w.push_back("W.e");
      break;
    }
  }
  bool two_support = false;
  for (std::size_t i = 0; i < m && !two_support; ++i)
    for (std::size_t j = i + 1; j < m && !two_support; ++j) {
      std::vector<std::size_t> others;
      for (std::size_t t = 0; t < m; ++t)
        if (t != i && t != j) others.push_back(t);
      IntMatrix k = kernel_basis(a.select_cols(others).transpose());
      std::vector<IntVec> pairs;
      for (std::size_t c = 0; c < k.cols(); ++c) {
        IntVec coeff = k.col(c);
        pairs.push_back({dot(coeff, a.col(i)), dot(coeff, a.col(j))});
      }
      if (pairs.empty()) continue;
      std::size_t rr = rank(rows_to_matrix(pairs, 2));
      if (rr == 2) two_support = true;
      if (rr == 1)
        for (const auto& p : pairs)
          if (!is_zero(p)) {
            two_support = p[0] * p[1] < 0;
            break;
          }
    }
  if (two_support) w.push_back("W.f");
  out.is_W = w.empty();

  if (out.is_F) {
    out.is_reduced = columns_primitive(a);
    out.violated = out.is_CF ? std::vector<std::string>{} : std::vector<std::string>{"F.e"};
    if (!*out.is_reduced) out.violated.push_back("reduced");
  } else if (out.is_W) {
    out.is_reduced = columns_primitive(gale_dual(a));
    if (!*out.is_reduced) out.violated.push_back("reduced");
  } else {
    out.violated = f;
    out.violated.insert(out.violated.end(), w.begin(), w.end());
  }
  return out;
}

struct GlWitness {
  IntMatrix P;                    // unimodular
  IntMatrix S;                    // permutation matrix, b = P * a * S
  std::vector<std::size_t> perm;  // b column j is (P a) column perm[j]
};

// Searches P in GL_n(Z) and a column permutation S with b = P * a * S.
// An n-tuple of independent columns of a must land on some n-tuple of columns of b,
// which fixes P; every such assignment is tried.
inline std::optional<GlWitness> gl_equivalent(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  std::size_t n = a.rows(), m = a.cols();
  std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return std::nullopt;
  if (ra < n) throw Error(ErrorCode::RankDeficient, "gl_equivalent needs full row rank");

  std::vector<std::size_t> basis;
  {
    std::vector<IntVec> chosen;
    for (std::size_t j = 0; j < m && basis.size() < n; ++j) {
      chosen.push_back(a.col(j));
      if (rank(cols_to_matrix(chosen, n)) == chosen.size())
        basis.push_back(j);
      else
        chosen.pop_back();
    }
  }
  RatMatrix inv = inverse(to_rat(a.select_cols(basis)));
  std::vector<Int> ga(m), gb(m);
  for (std::size_t j = 0; j < m; ++j) {
    ga[j] = content(a.col(j));
    gb[j] = content(b.col(j));
  }
  {
    std::vector<Int> sa = ga, sb = gb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::optional<GlWitness> found;
  std::vector<std::size_t> tuple;
  std::vector<bool> used(m, false);
  std::function<void()> dfs = [&]() {
    if (found) return;
    if (tuple.size() == n) {
      RatMatrix p = to_rat(b.select_cols(tuple)) * inv;
      if (!is_integral(p)) return;
      IntMatrix pi = to_int(p);
      Int d = det(pi);
      if (d != 1 && d != -1) return;
      IntMatrix pa = pi * a;
      std::vector<bool> taken(m, false);
      std::vector<std::size_t> perm(m);
      for (std::size_t j = 0; j < m; ++j) {
        IntVec target = b.col(j);
        bool ok = false;
        for (std::size_t i = 0; i < m; ++i)
          if (!taken[i] && pa.col(i) == target) {
            taken[i] = true;
            perm[j] = i;
            ok = true;
            break;
          }
        if (!ok) return;
      }
      GlWitness w;
      w.P = pi;
      w.perm = perm;
      w.S = IntMatrix(m, m);
      for (std::size_t j = 0; j < m; ++j) w.S(perm[j], j) = 1;
      found = w;
      return;
    }
    std::size_t pos = tuple.size();
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || gb[j] != ga[basis[pos]]) continue;
      used[j] = true;
      tuple.push_back(j);
      dfs();
      tuple.pop_back();
      used[j] = false;
      if (found) return;
    }
  };
  dfs();
  return found;
}

}  // namespace toriq
