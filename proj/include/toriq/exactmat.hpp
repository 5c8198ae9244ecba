#pragma once

// Exact integer and rational matrices, Hermite and Smith normal forms,
// saturated kernels, cokernels and Gale-style quotients.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toriq/error.hpp"

namespace toriq {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
      if (row.size() != c_) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    Matrix m(rows.size(), rows.empty() ? cols : rows[0].size());
    for (std::size_t i = 0; i < m.r_; ++i) {
      if (rows[i].size() != m.c_) throw Error(ErrorCode::InvalidInput, "ragged matrix");
      for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_cols(const std::vector<std::vector<T>>& cols, std::size_t rows = 0) {
    Matrix m(cols.empty() ? rows : cols[0].size(), cols.size());
    for (std::size_t j = 0; j < m.c_; ++j) {
      if (cols[j].size() != m.r_) throw Error(ErrorCode::InvalidInput, "ragged matrix");
      for (std::size_t i = 0; i < m.r_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix m(r_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t i = 0; i < r_; ++i) m(i, k) = (*this)(i, idx[k]);
    return m;
  }
  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), c_);
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < c_; ++j) m(k, j) = (*this)(idx[k], j);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[t] -= q * row[s]
  void sub_row(std::size_t t, std::size_t s, const T& q) {
    for (std::size_t j = 0; j < c_; ++j) (*this)(t, j) -= q * (*this)(s, j);
  }
  void sub_col(std::size_t t, std::size_t s, const T& q) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, t) -= q * (*this)(i, s);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
    Matrix p(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.c_; ++j) p(i, j) += x * o(k, j);
      }
    return p;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
    return s;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
    return s;
  }
  Matrix scaled(const T& k) const {
    Matrix s = *this;
    for (auto& x : s.a_) x *= k;
    return s;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline Matrix<Int> hstack(const Matrix<Int>& a, const Matrix<Int>& b) {
  std::size_t r = a.cols() ? a.rows() : b.rows();
  Matrix<Int> m(r, a.cols() + b.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}
inline Matrix<Int> vstack(const Matrix<Int>& a, const Matrix<Int>& b) {
  std::size_t c = a.rows() ? a.cols() : b.cols();
  Matrix<Int> m(a.rows() + b.rows(), c);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

// ---- scalars and vectors

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline Int lcm(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}
inline Int power(const Int& b, unsigned long e) {
  Int p;
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), e);
  return p;
}
inline Int binomial(const Int& n, unsigned long k) {
  if (n < 0) return 0;
  Int c;
  mpz_bin_ui(c.get_mpz_t(), n.get_mpz_t(), k);
  return c;
}

inline Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}
inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}
template <class T>
inline T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

// Smallest positive integer multiple of a rational vector, made primitive.
inline IntVec clear_denominators(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat y = v[i] * l;
    out[i] = y.get_num();
  }
  return primitive(out);
}

inline RatMatrix to_rat(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}
inline bool is_integral(const RatMatrix& a) {
  for (const auto& x : a.data())
    if (x.get_den() != 1) return false;
  return true;
}
inline IntMatrix to_int(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1)
        throw Error(ErrorCode::NonIntegerQuotient, "matrix has a non-integer entry");
      r(i, j) = a(i, j).get_num();
    }
  return r;
}
inline Int denominator_lcm(const RatMatrix& a) {
  Int l = 1;
  for (const auto& x : a.data()) l = lcm(l, x.get_den());
  return l;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---- rational elimination

struct Rref {
  RatMatrix R;
  std::vector<std::size_t> pivots;
};

inline Rref rref(RatMatrix a) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    Rat inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && a(i, c) != 0) a.sub_row(i, r, Rat(a(i, c)));
    out.pivots.push_back(c);
    ++r;
  }
  out.R = std::move(a);
  return out;
}

inline std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }
inline std::size_t rank(const IntMatrix& a) { return rank(to_rat(a)); }

// Basis of the rational nullspace {x : a x = 0}, one column per vector.
inline RatMatrix nullspace(const RatMatrix& a) {
  Rref f = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : f.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  RatMatrix n(a.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    n(free[k], k) = 1;
    for (std::size_t i = 0; i < f.pivots.size(); ++i) n(f.pivots[i], k) = -f.R(i, free[k]);
  }
  return n;
}

// Some solution of a x = b, if one exists.
inline std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref f = rref(aug);
  if (!f.pivots.empty() && f.pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t i = 0; i < f.pivots.size(); ++i) x[f.pivots[i]] = f.R(i, a.cols());
  return x;
}

inline RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref f = rref(aug);
  if (f.pivots.size() < n || f.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::RankDeficient, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = f.R(i, n + j);
  return inv;
}

// ---- determinants

// Fraction-free Bareiss elimination.
inline Int det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline Rat det(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  RatMatrix m = a;
  std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i)
      if (m(i, c) != 0) m.sub_row(i, c, Rat(m(i, c) / m(c, c)));
  }
  return d;
}

// ---- Hermite normal form

struct HnfResult {
  IntMatrix H;  // H = U * A
  IntMatrix U;  // unimodular
  std::size_t rank = 0;
};

// Row-style HNF: echelon form, positive pivots, entries above a pivot in [0, pivot).
inline HnfResult hnf(const IntMatrix& a) {
  std::size_t m = a.rows(), n = a.cols();
  IntMatrix H = a, U = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (p == m || abs_int(H(i, c)) < abs_int(H(p, c)))) p = i;
      if (p == m) break;
      H.swap_rows(p, r);
      U.swap_rows(p, r);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Int q = floor_div(H(i, c), H(r, c));
        H.sub_row(i, r, q);
        U.sub_row(i, r, q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(H(i, c), H(r, c));
      if (q != 0) {
        H.sub_row(i, r, q);
        U.sub_row(i, r, q);
      }
    }
    ++r;
  }
  return {std::move(H), std::move(U), r};
}

// Nonzero rows of the HNF: the canonical basis of the row lattice.
inline IntMatrix row_lattice_basis(const IntMatrix& a) {
  HnfResult h = hnf(a);
  std::vector<std::size_t> idx(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) idx[i] = i;
  return h.H.select_rows(idx);
}

// Basis of the column lattice, one column per basis vector.
inline IntMatrix column_lattice_basis(const IntMatrix& a) {
  return row_lattice_basis(a.transpose()).transpose();
}

// ---- Smith normal form

struct SnfResult {
  IntMatrix P;  // P * A * U = D
  IntMatrix D;
  IntMatrix U;
  std::size_t rank = 0;
  IntVec diagonal() const {
    IntVec d(rank);
    for (std::size_t i = 0; i < rank; ++i) d[i] = D(i, i);
    return d;
  }
};

inline SnfResult snf(const IntMatrix& a) {
  std::size_t m = a.rows(), n = a.cols();
  IntMatrix D = a, P = IntMatrix::identity(m), U = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool any = false;
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi == m || abs_int(D(i, j)) < abs_int(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      any = true;
      D.swap_rows(pi, t);
      P.swap_rows(pi, t);
      D.swap_cols(pj, t);
      U.swap_cols(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = floor_div(D(i, t), D(t, t));
        D.sub_row(i, t, q);
        P.sub_row(i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = floor_div(D(t, j), D(t, t));
        D.sub_col(j, t, q);
        U.sub_col(j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (mod_floor(D(i, j), D(t, t)) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      // pull the offending row into row t and continue the reduction
      D.sub_row(t, bad, Int(-1));
      P.sub_row(t, bad, Int(-1));
    }
    if (!any) break;
    if (D(t, t) < 0) {
      D.negate_row(t);
      P.negate_row(t);
    }
  }
  return {std::move(P), std::move(D), std::move(U), t};
}

inline IntVec invariant_factors(const IntMatrix& a) { return snf(a).diagonal(); }

// ---- lattices

// Saturated integer kernel {x in Z^m : a x = 0}; basis vectors are columns.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  std::size_t m = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(m);
  HnfResult h = hnf(a.transpose());
  IntMatrix k(m, m - h.rank);
  for (std::size_t i = h.rank; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) k(j, i - h.rank) = h.U(i, j);
  return k;
}

// Integer solution of a x = b, if one exists.
inline std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  SnfResult s = snf(a);
  IntVec c = s.P.apply(b);
  IntVec y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (mod_floor(c[i], s.D(i, i)) != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.U.apply(y);
}

struct FiniteAbelianGroup {
  IntVec factors;  // invariant factors > 1, each dividing the next
  std::size_t free_rank = 0;

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return factors.empty() && free_rank == 0; }
  Int order() const {
    if (free_rank) throw Error(ErrorCode::OutOfDomain, "group is infinite");
    Int o = 1;
    for (const auto& f : factors) o *= f;
    return o;
  }
  bool operator==(const FiniteAbelianGroup& o) const {
    return factors == o.factors && free_rank == o.free_rank;
  }
  std::string str() const {
    if (is_trivial()) return "0";
    std::string s;
    for (const auto& f : factors) s += (s.empty() ? "" : " + ") + ("Z/" + f.get_str());
    for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
    return s;
  }
};

inline FiniteAbelianGroup group_from_diagonal(const IntVec& diag, std::size_t free_rank) {
  FiniteAbelianGroup g;
  for (const auto& d : diag)
    if (d > 1) g.factors.push_back(d);
  g.free_rank = free_rank;
  return g;
}

// Z^rows / (column span of a).
inline FiniteAbelianGroup cokernel(const IntMatrix& a) {
  SnfResult s = snf(a);
  return group_from_diagonal(s.diagonal(), a.rows() - s.rank);
}

// Index of the column lattice of a full-row-rank matrix in Z^rows.
inline Int column_lattice_index(const IntMatrix& a) {
  SnfResult s = snf(a);
  if (s.rank < a.rows()) throw Error(ErrorCode::RankDeficient, "matrix does not have full row rank");
  Int p = 1;
  for (const auto& d : s.diagonal()) p *= d;
  return p;
}

// Basis (columns) of {y in Z^k : c_i . y = 0 mod d_i for every row i of c}.
inline IntMatrix congruence_lattice(const IntMatrix& c, const IntVec& d) {
  std::size_t s = c.rows(), k = c.cols();
  if (s == 0) return IntMatrix::identity(k);
  IntMatrix big(s, k + s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < k; ++j) big(i, j) = c(i, j);
    big(i, k + i) = -d[i];
  }
  IntMatrix ker = kernel_basis(big);
  IntMatrix proj(k, ker.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
  return column_lattice_basis(proj);
}

// The unique integer B with v = B * w.
inline IntMatrix quotient_matrix(const RatMatrix& v, const IntMatrix& w) {
  if (v.cols() != w.cols()) throw Error(ErrorCode::InvalidInput, "quotient: column count mismatch");
  RatMatrix wr = to_rat(w);
  if (rank(wr) < w.rows()) throw Error(ErrorCode::RankDeficient, "quotient: divisor has deficient rank");
  RatMatrix wt = wr.transpose();
  RatMatrix b = v * wt * inverse(wr * wt);
  if (b * wr != v) throw Error(ErrorCode::InvalidInput, "quotient: rows are outside the row space");
  if (b.rows() == b.cols() && det(b) == 0)
    throw Error(ErrorCode::RankDeficient, "quotient: singular quotient matrix");
  if (!is_integral(b)) throw Error(ErrorCode::NonIntegerQuotient, "quotient has non-integer entries");
  return to_int(b);
}
inline IntMatrix quotient_matrix(const IntMatrix& v, const IntMatrix& w) {
  return quotient_matrix(to_rat(v), w);
}

// (A A^T)^{-1} A
inline RatMatrix transverse(const RatMatrix& a) {
  RatMatrix g = a * a.transpose();
  if (det(g) == 0) throw Error(ErrorCode::SingularGram, "Gram matrix is singular");
  return inverse(g) * a;
}
inline RatMatrix transverse(const IntMatrix& a) { return transverse(to_rat(a)); }

inline IntMatrix column_block(const IntMatrix& a, std::size_t from, std::size_t count) {
  std::vector<std::size_t> idx(count);
  for (std::size_t k = 0; k < count; ++k) idx[k] = from + k;
  return a.select_cols(idx);
}

}  // namespace toriq
