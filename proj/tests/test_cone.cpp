#include <gtest/gtest.h>

#include "support.hpp"

using namespace toriq;
using namespace testing_support;

namespace {

std::set<IntVec> as_set(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Cone, PositiveOrthantFacets) {
  ConeFacets f = cone_facets({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(as_set(f.ineq), (std::set<IntVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(f.eq.empty());
}

TEST(Cone, SquarePyramid) {
  ConeFacets f = cone_facets({{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}}, 3);
  EXPECT_EQ(f.ineq.size(), 4u);
  ConeGenerators g = to_generators(f);
  EXPECT_EQ(as_set(g.rays), (std::set<IntVec>{{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}}));
  EXPECT_TRUE(is_pointed(g));
}

TEST(Cone, RedundantGeneratorsDropped) {
  ConeFacets f = cone_facets({{1, 0}, {0, 1}, {1, 1}, {2, 4}}, 2);
  ConeGenerators g = to_generators(f);
  EXPECT_EQ(as_set(g.rays), (std::set<IntVec>{{1, 0}, {0, 1}}));
}

TEST(Cone, LowerDimensionalCone) {
  ConeFacets f = cone_facets({{1, 0, 0}, {0, 1, 0}}, 3);
  EXPECT_EQ(f.eq.size(), 1u);
  EXPECT_EQ(dimension(to_generators(f)), 2u);
  EXPECT_TRUE(contains(f, IntVec{1, 1, 0}));
  EXPECT_FALSE(contains(f, IntVec{1, 1, 1}));
  EXPECT_FALSE(in_relint(f, IntVec{1, 0, 0}));
  EXPECT_TRUE(in_relint(f, IntVec{1, 2, 0}));
}

TEST(Cone, HalfspaceHasLineality) {
  ConeGenerators g = h_to_v({{0, 0, 1}}, {}, 3);
  EXPECT_EQ(g.lineality.size(), 2u);
  EXPECT_FALSE(is_pointed(g));
}

TEST(Cone, RoundTripRandom) {
  std::mt19937 rng(21);
  for (int t = 0; t < 150; ++t) {
    std::size_t d = 2 + t % 3;
    std::vector<IntVec> gens;
    for (int k = 0; k < 5; ++k) gens.push_back(random_matrix(rng, d, 1, -3, 3).col(0));
    ConeFacets f = cone_facets(gens, d);
    for (const auto& g : gens) EXPECT_TRUE(contains(f, g));
    ConeGenerators back = to_generators(f);
    ConeFacets f2 = to_facets(back);
    // same cone: generators of each contained in the other
    for (const auto& r : back.rays) EXPECT_TRUE(contains(f, r));
    for (const auto& g : gens) EXPECT_TRUE(contains(f2, g));
    // every facet normal is tight on at least dim - 1 - |eq| independent generators
    for (const auto& a : f.ineq) {
      std::vector<IntVec> tight;
      for (const auto& g : gens)
        if (dot(a, g) == 0) tight.push_back(g);
      std::vector<IntVec> rows = tight;
      for (const auto& e : f.eq) rows.push_back(e);
      if (!rows.empty()) EXPECT_EQ(rank(rows_to_matrix(rows, d)), d - 1);
    }
  }
}

TEST(Cone, Intersection) {
  ConeFacets a = cone_facets({{1, 0}, {1, 2}}, 2);
  ConeFacets b = cone_facets({{1, 1}, {0, 1}}, 2);
  ConeGenerators c = to_generators(normalize(intersect(a, b)));
  EXPECT_EQ(as_set(c.rays), (std::set<IntVec>{{1, 1}, {1, 2}}));
}
