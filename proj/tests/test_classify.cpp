#include <gtest/gtest.h>

#include "support.hpp"

using namespace toriq;
using namespace testing_support;

namespace {

using Elem = std::vector<long>;

// Subgroups of Z/d_1 + ... + Z/d_s as element sets, generated by all s-tuples.
std::set<std::set<Elem>> brute_subgroups(const std::vector<long>& d) {
  std::vector<Elem> all{Elem(d.size(), 0)};
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<Elem> next;
    for (const auto& e : all)
      for (long x = 0; x < d[i]; ++x) {
        Elem f = e;
        f[i] = x;
        next.push_back(f);
      }
    all = next;
  }
  auto add = [&](const Elem& a, const Elem& b) {
    Elem c(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) c[i] = (a[i] + b[i]) % d[i];
    return c;
  };
  std::set<std::set<Elem>> out;
  std::vector<std::size_t> pick(d.size(), 0);
  for (;;) {
    std::set<Elem> h{Elem(d.size(), 0)};
    std::vector<Elem> frontier{Elem(d.size(), 0)};
    while (!frontier.empty()) {
      Elem e = frontier.back();
      frontier.pop_back();
      for (auto p : pick) {
        Elem f = add(e, all[p]);
        if (h.insert(f).second) frontier.push_back(f);
      }
    }
    out.insert(h);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == all.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

}  // namespace

TEST(Classify, SubgroupCountsMatchBruteForce) {
  for (std::vector<long> d : {std::vector<long>{6}, {2, 2}, {2, 4}, {4, 4}, {2, 2, 2}, {3, 6}, {2, 12}}) {
    IntVec di(d.begin(), d.end());
    auto subs = subgroups(di);
    auto brute = brute_subgroups(d);
    EXPECT_EQ(subs.size(), brute.size());
    std::map<Int, int> by_order_lib, by_order_brute;
    for (const auto& s : subs) ++by_order_lib[s.order];
    for (const auto& s : brute) ++by_order_brute[Int(static_cast<long>(s.size()))];
    EXPECT_EQ(by_order_lib, by_order_brute);
  }
}

TEST(Classify, SubgroupCountIsMultiplicative) {
  // Z/15 + Z/30 = (Z/3)^2 + (Z/5)^2 + Z/2: 6 * 8 * 2 subgroups
  EXPECT_EQ(subgroups(IntVec{15, 30}).size(), 96u);
}

TEST(Classify, BlowUpFamily) {
  Family f = enumerate_fano_family(load_document(fixture("blupP3_weights.json")).matrix);
  EXPECT_EQ(f.members.size(), 5u);
  EXPECT_EQ(f.class_count(), 4u);
  std::vector<Int> mults;
  for (const auto& m : f.members) {
    EXPECT_TRUE(m.reduced);
    EXPECT_EQ(multiplicity(m.V), m.mult);
    mults.push_back(m.mult);
  }
  EXPECT_EQ(mults, (std::vector<Int>{1, 2, 2, 2, 4}));
}

TEST(Classify, MembersAreQuotientsOfTheCover) {
  IntMatrix q = load_document(fixture("qfanocanonica_weights.json")).matrix;
  Family f = enumerate_family(q, 2);
  EXPECT_EQ(f.members.size(), 32u);
  for (const auto& m : f.members) {
    EXPECT_TRUE((m.V * q.transpose()) == IntMatrix(m.V.rows(), q.rows()));
    EXPECT_NO_THROW(quotient_matrix(m.V, f.W));
    EXPECT_EQ(multiplicity(m.V), m.mult);
    if (!m.reduced) {
      ASSERT_TRUE(m.nonprimitive_column.has_value());
      EXPECT_GT(content(m.V.col(*m.nonprimitive_column)), 1);
    }
  }
  // class representatives are pairwise inequivalent
  for (std::size_t a = 0; a < f.representatives.size(); ++a)
    for (std::size_t b = a + 1; b < f.representatives.size(); ++b)
      EXPECT_FALSE(gl_equivalent(f.members[f.representatives[a]].V, f.members[f.representatives[b]].V).has_value());
}

TEST(Classify, BauerleFamilies) {
  IntMatrix q{{1, 3, 4}};
  Family f1 = enumerate_family(q, 1);
  EXPECT_EQ(f1.torsion.ambient().factors, (IntVec{6}));
  int reduced = 0;
  for (const auto& m : f1.members) {
    if (m.reduced) ++reduced;
    if (m.mult == 3 || m.mult == 6) EXPECT_FALSE(m.reduced);
  }
  EXPECT_EQ(reduced, 2);
  Family f2 = enumerate_family(q, 2);
  EXPECT_EQ(f2.torsion.ambient().factors, (IntVec{2, 12}));
  EXPECT_EQ(f2.members.size(), 16u);
  EXPECT_EQ(f2.class_count(), 4u);
}

TEST(Classify, NotFanoWeight) {
  // weights whose anticanonical fan is not Gorenstein
  EXPECT_THROW(enumerate_fano_family(IntMatrix{{1, 3, 4}}), Error);
}

TEST(Classify, TorsionMatrixSplitsClassGroup) {
  IntMatrix v = load_document(fixture("blupP3_Z.json")).matrix;
  TorsionMatrix t = torsion_matrix(v);
  FiniteAbelianGroup cl = cokernel(v.transpose());
  EXPECT_EQ(t.factors, cl.factors);
  EXPECT_TRUE(same_row_lattice(t.free_part, gale_dual(v)));
}
