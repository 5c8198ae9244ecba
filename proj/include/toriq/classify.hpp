#pragma once

// Torsion parts of class groups, subgroup enumeration, quotients of a
// universal cover by subgroups, and the resulting families of varieties.

#include <map>
#include <optional>
#include <vector>

#include "toriq/covering.hpp"
#include "toriq/galecore.hpp"
#include "toriq/parallel.hpp"

namespace toriq {

// Class map Z^m -> coker(V^T): free rows and torsion rows with residues.
struct TorsionMatrix {
  IntVec factors;     // invariant factors > 1 of the torsion part
  IntMatrix gamma;    // factors.size() x m, row t taken modulo factors[t]
  IntMatrix free_part;  // rows span a Gale dual of V

  FiniteAbelianGroup ambient() const { return group_from_diagonal(factors, 0); }
};

inline TorsionMatrix torsion_matrix(const IntMatrix& v) {
  std::size_t n = v.rows(), m = v.cols();
  SnfResult s = snf(v.transpose());
  if (s.rank < n) throw Error(ErrorCode::RankDeficient, "torsion_matrix needs full row rank");
  TorsionMatrix t;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < n; ++i)
    if (s.D(i, i) > 1) {
      rows.push_back(i);
      t.factors.push_back(s.D(i, i));
    }
  t.gamma = IntMatrix(rows.size(), m);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < m; ++j) t.gamma(k, j) = mod_floor(s.P(rows[k], j), t.factors[k]);
  std::vector<std::size_t> fr;
  for (std::size_t i = n; i < m; ++i) fr.push_back(i);
  t.free_part = s.P.select_rows(fr);
  return t;
}

// A subgroup of Z/d_1 + ... + Z/d_s, stored as its preimage lattice in Z^s.
struct SubgroupHandle {
  IntVec factors;
  IntMatrix lattice;  // HNF basis (rows) of the preimage, contains diag(d)
  std::vector<IntVec> generators;
  Int order;

  bool operator==(const SubgroupHandle& o) const { return factors == o.factors && lattice == o.lattice; }
};

namespace detail {
inline SubgroupHandle make_subgroup(const IntVec& d, const IntMatrix& gens_with_diag) {
  SubgroupHandle h;
  h.factors = d;
  std::size_t s = d.size();
  h.lattice = row_lattice_basis(gens_with_diag);
  Int all = 1;
  for (const auto& x : d) all *= x;
  h.order = all / (s ? det(h.lattice) : Int(1));
  for (std::size_t i = 0; i < h.lattice.rows(); ++i) {
    IntVec g = h.lattice.row(i);
    for (std::size_t t = 0; t < s; ++t) g[t] = mod_floor(g[t], d[t]);
    if (!is_zero(g)) h.generators.push_back(g);
  }
  return h;
}
}  // namespace detail

// Every subgroup is a join of cyclic ones: enumerate cyclic subgroups, then close under joins.
inline std::vector<SubgroupHandle> subgroups(const IntVec& d, std::size_t limit = 100000) {
  std::size_t s = d.size();
  Int order = 1;
  for (const auto& x : d) order *= x;
  if (order > Int(static_cast<unsigned long>(limit)))
    throw Error(ErrorCode::TooLarge, "group is too large to enumerate subgroups");
  IntMatrix diag(s, s);
  for (std::size_t i = 0; i < s; ++i) diag(i, i) = d[i];

  std::map<std::vector<Int>, SubgroupHandle> seen;
  std::vector<IntMatrix> cyclic;
  IntVec x(s);
  for (;;) {
    IntMatrix g(1, s);
    g.set_row(0, x);
    SubgroupHandle h = detail::make_subgroup(d, vstack(diag, g));
    if (seen.emplace(h.lattice.data(), h).second) cyclic.push_back(h.lattice);
    std::size_t i = 0;
    while (i < s && x[i] == d[i] - 1) x[i++] = 0;
    if (i == s) break;
    ++x[i];
  }
  std::vector<IntMatrix> queue = cyclic;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& c : cyclic) {
      SubgroupHandle h = detail::make_subgroup(d, vstack(queue[q], c));
      if (seen.emplace(h.lattice.data(), h).second) queue.push_back(h.lattice);
    }
  std::vector<SubgroupHandle> out;
  for (auto& [key, h] : seen) out.push_back(h);
  std::stable_sort(out.begin(), out.end(),
                   [](const SubgroupHandle& a, const SubgroupHandle& b) { return a.order < b.order; });
  return out;
}

// Characters m with <h, gamma W^T m> integral for every h in H span the
// sublattice M_H; the quotient fan matrix is basis(M_H)^T W.
inline IntMatrix quotient_by_subgroup(const IntMatrix& w, const TorsionMatrix& t, const SubgroupHandle& h) {
  if (h.factors != t.factors) throw Error(ErrorCode::InconsistentAction, "subgroup lives in another group");
  std::size_t n = w.rows();
  Int big = 1;
  for (const auto& f : t.factors) big = lcm(big, f);
  IntMatrix gw = t.gamma * w.transpose();  // s x n
  IntMatrix c(h.generators.size(), n);
  for (std::size_t g = 0; g < h.generators.size(); ++g)
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      Int coeff = h.generators[g][k] * (big / t.factors[k]);
      for (std::size_t j = 0; j < n; ++j) c(g, j) += coeff * gw(k, j);
    }
  IntMatrix basis = congruence_lattice(c, IntVec(h.generators.size(), big));
  if (abs_int(det(basis)) != h.order)
    throw Error(ErrorCode::InconsistentAction, "character pairing is not faithful on the subgroup");
  return basis.transpose() * w;
}

struct FamilyMember {
  SubgroupHandle subgroup;
  IntMatrix V;
  Int mult;
  bool reduced = false;
  std::optional<std::size_t> nonprimitive_column;  // witness when not reduced
  std::optional<std::size_t> cls;                  // GL class among reduced members
};

struct Family {
  Int h;
  IntMatrix Q, W, A;
  TorsionMatrix torsion;
  std::vector<FamilyMember> members;
  std::vector<std::size_t> representatives;  // member index per GL class

  std::size_t class_count() const { return representatives.size(); }
};

inline Family enumerate_family(const IntMatrix& q, const Int& h) {
  if (h < 1) throw Error(ErrorCode::OutOfDomain, "factor must be positive");
  WeightGroup wg = weight_group(q);
  Family f;
  f.h = h;
  f.Q = q;
  f.W = wg.W;
  f.A = wg.A;
  f.torsion = torsion_matrix(wg.A.scaled(h) * wg.W);
  std::vector<SubgroupHandle> subs = subgroups(f.torsion.factors);
  f.members = parallel_map<FamilyMember>(subs.size(), [&](std::size_t i) {
    FamilyMember mb;
    mb.subgroup = subs[i];
    mb.V = quotient_by_subgroup(f.W, f.torsion, subs[i]);
    mb.mult = subs[i].order;
    mb.reduced = true;
    for (std::size_t j = 0; j < mb.V.cols(); ++j)
      if (content(mb.V.col(j)) != 1) {
        mb.reduced = false;
        mb.nonprimitive_column = j;
        break;
      }
    return mb;
  });
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    FamilyMember& mb = f.members[i];
    if (!mb.reduced) continue;
    for (std::size_t c = 0; c < f.representatives.size() && !mb.cls; ++c) {
      const FamilyMember& rep = f.members[f.representatives[c]];
      if (rep.mult == mb.mult && gl_equivalent(rep.V, mb.V)) mb.cls = c;
    }
    if (!mb.cls) {
      mb.cls = f.representatives.size();
      f.representatives.push_back(i);
    }
  }
  return f;
}

// Quotients of the Fano variety with weights Q by all subgroups of G_Q.
inline Family enumerate_fano_family(const IntMatrix& q) {
  FanData theta = fan_from_point(q, anticanonical_class(q));
  if (!is_gorenstein_weight(q, theta.cones) || !is_qfano_weight(q, theta.cones))
    throw Error(ErrorCode::NotFanoWeight, "weight matrix is not a Fano weight matrix");
  return enumerate_family(q, 1);
}

// Subgroups of the h-extension of G_Q whose quotient fan matrix is reduced.
inline Family enumerate_qgorenstein_family(const IntMatrix& q, const Int& h) { return enumerate_family(q, h); }

}  // namespace toriq
