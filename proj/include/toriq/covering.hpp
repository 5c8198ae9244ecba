#pragma once

// Universal 1-coverings, polar weights, the weight group G_Q, the factor h,
// anticanonical degrees and the identities tying them together.

#include <string>
#include <vector>

#include "toriq/fancone.hpp"
#include "toriq/galecore.hpp"
#include "toriq/polytope.hpp"

namespace toriq {

struct IdentityCheck {
  std::string name;
  std::string lhs, rhs;
  bool holds = false;

  bool operator==(const IdentityCheck&) const = default;
};

struct UniversalCover {
  IntMatrix W;  // G(G(V))
  IntMatrix B;  // V = B W
  FiniteAbelianGroup G;
  Int mult;
  FanData fan;  // same cones over W
};

inline UniversalCover universal_cover(const FanData& fan) {
  UniversalCover u;
  u.W = gale_dual(gale_dual(fan.rays));
  u.B = quotient_matrix(fan.rays, u.W);
  u.G = cokernel(u.B.transpose());
  u.mult = abs_int(det(u.B));
  u.fan = FanData{u.W, fan.cones};
  return u;
}

// Index of the column lattice of V in Z^n.
inline Int multiplicity(const IntMatrix& v) { return column_lattice_index(v); }

// n!Vol(conv G(Q)); the minor sum over a boundary triangulation must agree.
inline Int weight_modulus(const IntMatrix& q) {
  IntMatrix w = gale_dual(q);
  Polytope p = facet_enumeration(w);
  Rat vol = normalized_volume(p);
  Rat minors = 0;
  for (const auto& s : boundary_triangulation(p)) minors += abs_int(det(q.select_cols(complement(s, q.cols()))));
  if (vol != minors || vol.get_den() != 1)
    throw Error(ErrorCode::InvalidInput, "weight modulus: volume and minor sum disagree");
  return vol.get_num();
}

inline RatMatrix scale(const RatMatrix& a, const Rat& k) { return a.scaled(k); }

// Vertices of conv(V)^polar, listed in the order of the maximal cones when the
// fan is Q-Fano, otherwise in facet order.
inline RatMatrix ordered_polar_vertices(const FanData& fan) {
  RatMatrix poly = polar_vertices(fan.rays);
  if (fan.cones.empty()) return poly;
  RatMatrix byfan;
  try {
    byfan = polar_vertex_matrix(fan);
  } catch (const Error&) {
    return poly;
  }
  std::vector<RatVec> seen;
  for (std::size_t j = 0; j < byfan.cols(); ++j) {
    RatVec c = byfan.col(j);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
  }
  if (seen.size() != poly.cols()) return poly;
  for (std::size_t j = 0; j < poly.cols(); ++j)
    if (std::find(seen.begin(), seen.end(), poly.col(j)) == seen.end()) return poly;
  return RatMatrix::from_cols(seen);
}

inline bool same_column_set(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<RatVec> x, y;
  for (std::size_t j = 0; j < a.cols(); ++j) x.push_back(a.col(j));
  for (std::size_t j = 0; j < b.cols(); ++j) y.push_back(b.col(j));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// Data attached to the polar side of a weight matrix Q: the weight group G_Q.
struct WeightGroup {
  IntMatrix Q, W;
  Int k_hat;
  RatMatrix W_polar;
  IntMatrix Q_polar, Lambda_polar;
  IntMatrix A;  // k_hat W_polar = A^T Lambda_polar
  FiniteAbelianGroup G_Q;
  Int g_Q;
};

inline WeightGroup weight_group_from(const IntMatrix& q, const IntMatrix& w, const RatMatrix& w_polar,
                                     const IntMatrix& lambda_polar) {
  WeightGroup g;
  g.Q = q;
  g.W = w;
  g.W_polar = w_polar;
  g.k_hat = denominator_lcm(w_polar);
  g.Lambda_polar = lambda_polar;
  g.Q_polar = gale_dual(to_int(w_polar.scaled(Rat(g.k_hat))));
  IntMatrix at = quotient_matrix(w_polar.scaled(Rat(g.k_hat)), lambda_polar);
  g.A = at.transpose();
  g.G_Q = cokernel(at);
  g.g_Q = abs_int(det(g.A));
  return g;
}

inline WeightGroup weight_group(const IntMatrix& q) {
  IntMatrix w = gale_dual(q);
  RatMatrix wp = polar_vertices(w);
  Int kh = denominator_lcm(wp);
  IntMatrix lp = gale_dual(gale_dual(to_int(wp.scaled(Rat(kh)))));
  return weight_group_from(q, w, wp, lp);
}

struct CoveringData {
  std::size_t n = 0, r = 0, m = 0, r_polar = 0, m_polar = 0;
  FanData fan;
  IntMatrix Q, W, B;
  FiniteAbelianGroup G;
  Int mult;

  Int k, k_hat, h;
  RatMatrix V_polar, W_polar, Lambda;
  IntMatrix Q_polar, Lambda_polar, A, C;
  FiniteAbelianGroup G_Q, G_hat;
  Int g_Q, g_hat;

  Int modulus_Q, modulus_Q_polar;
  Rat volume_V;        // n!Vol conv(V)
  Rat degree_X;        // (-K_X)^n
  Int scaled_degree_X; // (-k K_X)^n
  Rat degree_Y;        // (-K_Y)^n
  Int scaled_degree_Y_khat, scaled_degree_Y_k;
  Rat degree_Z_polar;  // (-K_{Z polar})^n = n!Vol conv(Lambda)

  bool qfano = false;
  bool canonical = false;
  std::optional<Int> mult_polar;  // multiplicity of V_polar when it is integral
  std::vector<IdentityCheck> checks;

  bool all_checks_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
  }
};

// Nonzero lattice points x of a maximal cone with <m_sigma, x> > -1 break canonicity.
inline bool is_canonical(const FanData& fan) {
  RatMatrix mp = polar_vertex_matrix(fan);
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    IntMatrix pts(fan.dim(), fan.cones[c].size() + 1);
    for (std::size_t k = 0; k < fan.cones[c].size(); ++k) pts.set_col(k + 1, fan.rays.col(fan.cones[c][k]));
    Polytope p = facet_enumeration(pts);
    RatVec m = mp.col(c);
    for (const auto& x : lattice_points(p, true))
      if (!is_zero(x) && dot(x, m) > -1) return false;
  }
  return true;
}

inline CoveringData analyze(const FanData& fan_in) {
  CoveringData d;
  d.fan = fan_in;
  const IntMatrix& v = fan_in.rays;
  d.n = v.rows();
  d.m = v.cols();
  validate_fan(d.fan);

  UniversalCover u = universal_cover(d.fan);
  d.Q = gale_dual(v);
  d.r = d.Q.rows();
  d.W = u.W;
  d.B = u.B;
  d.G = u.G;
  d.mult = u.mult;

  d.V_polar = ordered_polar_vertices(d.fan);
  d.k = denominator_lcm(d.V_polar);
  d.m_polar = d.V_polar.cols();
  IntMatrix kv = to_int(d.V_polar.scaled(Rat(d.k)));
  d.Q_polar = gale_dual(kv);
  d.r_polar = d.Q_polar.rows();
  d.Lambda_polar = gale_dual(d.Q_polar);
  d.C = quotient_matrix(kv, d.Lambda_polar);

  d.W_polar = to_rat(d.B.transpose()) * d.V_polar;
  WeightGroup wg = weight_group_from(d.Q, d.W, d.W_polar, d.Lambda_polar);
  d.k_hat = wg.k_hat;
  d.A = wg.A;
  d.G_Q = wg.G_Q;
  d.g_Q = wg.g_Q;
  if (mod_floor(d.k, d.k_hat) != 0) throw Error(ErrorCode::NonIntegralFactor, "k_hat does not divide k");
  d.h = d.k / d.k_hat;
  IntMatrix hat = d.A.transpose().scaled(d.h);
  d.G_hat = cokernel(hat);
  d.g_hat = power(d.h, d.n) * d.g_Q;
  d.Lambda = to_rat(d.A * d.W).scaled(Rat(1) / Rat(d.k_hat));

  d.modulus_Q = weight_modulus(d.Q);
  d.modulus_Q_polar = weight_modulus(d.Q_polar);
  d.volume_V = normalized_volume(v);
  d.degree_X = normalized_volume(d.V_polar);
  Rat sx = d.degree_X * Rat(power(d.k, d.n));
  d.scaled_degree_X = sx.get_num();
  d.degree_Y = normalized_volume(d.W_polar);
  d.scaled_degree_Y_khat = Rat(d.degree_Y * Rat(power(d.k_hat, d.n))).get_num();
  d.scaled_degree_Y_k = Rat(d.degree_Y * Rat(power(d.k, d.n))).get_num();
  d.degree_Z_polar = normalized_volume(d.Lambda);

  d.qfano = is_qfano_weight(d.Q, d.fan.cones);
  try {
    d.canonical = is_canonical(d.fan);
  } catch (const Error&) {
    d.canonical = false;
  }
  if (is_integral(d.V_polar)) d.mult_polar = multiplicity(to_int(d.V_polar));

  auto check = [&](const std::string& name, const Rat& lhs, const Rat& rhs) {
    d.checks.push_back({name, lhs.get_str(), rhs.get_str(), lhs == rhs});
  };
  auto divides = [&](const std::string& name, const Int& a, const Int& b) {
    d.checks.push_back({name, a.get_str(), b.get_str(), a != 0 && mod_floor(b, a) == 0});
  };
  Rat qn(d.modulus_Q), qpn(d.modulus_Q_polar);
  check("mult = vol(V)/|Q|", Rat(d.mult), d.volume_V / qn);
  check("mult = |G|", Rat(d.mult), Rat(d.G.order()));
  check("mult = index of V", Rat(d.mult), Rat(multiplicity(v)));
  check("scaled degree of X is integral", Rat(sx.get_den()), Rat(1));
  check("(-kK_X)^n = |det C| |Q polar|", sx, Rat(abs_int(det(d.C))) * qpn);
  check("g_Q = (-k_hat K_Y)^n / |Q polar|", Rat(d.g_Q), Rat(d.scaled_degree_Y_khat) / qpn);
  check("g_Q = k_hat^n (-K_Z polar)^n / |Q|", Rat(d.g_Q),
        Rat(power(d.k_hat, d.n)) * d.degree_Z_polar / qn);
  check("h^n g_Q = (-kK_Y)^n / |Q polar|", Rat(d.g_hat), Rat(d.scaled_degree_Y_k) / qpn);
  check("h^n g_Q = |G_hat|", Rat(d.g_hat), Rat(d.G_hat.order()));
  check("mult (-kK_X)^n / |Q polar| = h^n g_Q", Rat(d.mult) * sx / qpn, Rat(d.g_hat));
  check("h A^T = B^T C", Rat(hat == d.B.transpose() * d.C ? 1 : 0), Rat(1));
  check("W polar vertices = B^T V polar", Rat(same_column_set(d.W_polar, polar_vertices(d.W)) ? 1 : 0), Rat(1));
  check("k_hat = index of W", Rat(d.k_hat), Rat(fmatrix_index(d.W)));
  divides("mult | h^n g_Q", d.mult, d.g_hat);
  divides("|Q polar| | (-kK_X)^n", d.modulus_Q_polar, d.scaled_degree_X);
  divides("(-kK_X)^n | (-kK_Y)^n", d.scaled_degree_X, d.scaled_degree_Y_k);
  return d;
}

struct FanoSplitting {
  FiniteAbelianGroup G, G_polar, G_Q, sum;
  bool factorization = false;  // A = C^T B
  bool orders = false;         // |G| |G_polar| = g_Q
  bool splits = false;         // G + G_polar has the invariant factors of G_Q
};

inline FanoSplitting fano_splitting(const CoveringData& d) {
  if (d.k != 1) throw Error(ErrorCode::NotReflexive, "fano_splitting needs a reflexive polytope");
  FanoSplitting s;
  s.G = d.G;
  s.G_polar = cokernel(d.C.transpose());
  s.G_Q = d.G_Q;
  s.factorization = d.A == d.C.transpose() * d.B;
  s.orders = d.G.order() * s.G_polar.order() == d.g_Q;
  std::size_t n = d.n;
  IntMatrix blk(2 * n, 2 * n);
  IntMatrix bt = d.B.transpose(), ct = d.C.transpose();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      blk(i, j) = bt(i, j);
      blk(n + i, n + j) = ct(i, j);
    }
  s.sum = cokernel(blk);
  s.splits = s.sum == d.G_Q;
  return s;
}

// Fan matrix whose rows span {x : Q x = 0, torsion rows . x = 0 mod factors}.
inline IntMatrix fan_matrix_from_grading(const IntMatrix& q, const IntVec& factors, const IntMatrix& torsion) {
  IntMatrix k = kernel_basis(q);  // m x n
  IntMatrix c = torsion * k;
  IntMatrix y = congruence_lattice(c, factors);
  return (k * y).transpose();
}

struct MdsMultiplicity {
  Int mult, h, g_Q, bound;
  bool divides = false;
};

inline MdsMultiplicity mds_multiplicity(const CoveringData& d) {
  MdsMultiplicity out;
  out.mult = d.mult;
  out.h = d.h;
  out.g_Q = d.g_Q;
  out.bound = d.g_hat;
  out.divides = mod_floor(out.bound, out.mult) == 0;
  return out;
}

// Quotient of the universal cover by G cap G_Q: its character lattice is B^T M + A^T M.
struct UnitaryCover {
  IntMatrix V1;
  Int mult;
  Int index;  // fmatrix_index(V1)
};

inline UnitaryCover unitary_cover(const CoveringData& d) {
  IntMatrix lat = column_lattice_basis(hstack(d.B.transpose(), d.A.transpose()));
  UnitaryCover u;
  u.V1 = lat.transpose() * d.W;
  u.mult = abs_int(det(lat));
  u.index = fmatrix_index(u.V1);
  return u;
}

}  // namespace toriq
