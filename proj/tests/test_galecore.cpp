#include <gtest/gtest.h>

#include "support.hpp"

using namespace toriq;
using namespace testing_support;

TEST(Gale, BlowUpWeights) {
  IntMatrix v = load_document(fixture("blupP3_X.json")).matrix;
  IntMatrix q = gale_dual(v);
  EXPECT_EQ(q.rows(), 3u);
  EXPECT_TRUE((v * q.transpose()) == IntMatrix(3, 3));
  IntMatrix expect = load_document(fixture("blupP3_weights.json")).matrix;
  EXPECT_TRUE(same_row_lattice(q, expect));
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) EXPECT_GE(q(i, j), 0);
}

TEST(Gale, DoubleDualIsSaturation) {
  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 2, m = n + 2 + (t / 2) % 3;
    IntMatrix v = random_fan_matrix(rng, n, m);
    IntMatrix q = gale_dual(v);
    ASSERT_EQ(q.rows(), m - n);
    EXPECT_TRUE((v * q.transpose()) == IntMatrix(n, m - n));
    EXPECT_EQ(column_lattice_index(q), 1);
    IntMatrix w = gale_dual(q);
    // W rows span the saturation of the V row lattice, so V = B W with |det B| = mult
    IntMatrix b = quotient_matrix(v, w);
    EXPECT_EQ(abs_int(det(b)), column_lattice_index(v));
    EXPECT_TRUE(same_row_lattice(gale_dual(gale_dual(w)), w));
    EXPECT_TRUE(gl_equivalent(gale_dual(gale_dual(w)), w).has_value());
  }
}

TEST(Gale, Classification) {
  MatrixClass c = classify_matrix(load_document(fixture("blupP3_X.json")).matrix);
  EXPECT_TRUE(c.is_F);
  EXPECT_TRUE(c.is_CF);
  MatrixClass z = classify_matrix(load_document(fixture("blupP3_Z.json")).matrix);
  EXPECT_TRUE(z.is_F);
  EXPECT_FALSE(z.is_CF);
  MatrixClass q = classify_matrix(load_document(fixture("blupP3_weights.json")).matrix);
  EXPECT_TRUE(q.is_W);
  MatrixClass bad = classify_matrix(IntMatrix{{1, 0, 1}, {0, 1, 1}});
  EXPECT_FALSE(bad.is_F);
  EXPECT_FALSE(bad.violated.empty());
}

TEST(Gale, EquivalenceWitness) {
  IntMatrix v1 = load_document(fixture("blupP3_X1.json")).matrix;
  IntMatrix v1p = load_document(fixture("blupP3_X1prime.json")).matrix;
  auto w = gl_equivalent(v1, v1p);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(abs_int(det(w->P)), 1);
  EXPECT_EQ(w->P * v1 * w->S, v1p);
  IntMatrix v2 = load_document(fixture("blupP3_X2.json")).matrix;
  EXPECT_FALSE(gl_equivalent(v1, v2).has_value());
}

TEST(Gale, EquivalenceRecoversRandomTransforms) {
  std::mt19937 rng(32);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 2, m = n + 2 + t % 3;
    IntMatrix v = random_fan_matrix(rng, n, m);
    IntMatrix p = IntMatrix::identity(n);
    for (int s = 0; s < 4; ++s) {
      std::size_t i = rng() % n, j = (i + 1) % n;
      int f = static_cast<int>(rng() % 5) - 2;
      for (std::size_t k = 0; k < n; ++k) p(i, k) += f * p(j, k);
    }
    std::vector<std::size_t> perm(m);
    for (std::size_t j = 0; j < m; ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix b = (p * v).select_cols(perm);
    auto w = gl_equivalent(v, b);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->P * v * w->S, b);
    // doubling one column breaks equivalence
    IntMatrix c = b;
    for (std::size_t i = 0; i < n; ++i) c(i, 0) *= 2;
    EXPECT_FALSE(gl_equivalent(v, c).has_value());
  }
}
