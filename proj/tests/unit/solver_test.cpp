#include <gtest/gtest.h>

#include "bullfree/errors.hpp"
#include "bullfree/patterns.hpp"
#include "bullfree/solver.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace bullfree {
namespace {

TEST(Solve, CycleFive) {
  const Trigraph c5 = fixtures::cycle(5);
  const auto yes = solve_wis(c5, 2);
  EXPECT_TRUE(yes.yes);
  EXPECT_EQ(yes.certificate.total_weight, 2);
  EXPECT_TRUE(is_valid_independent_set(c5, yes.certificate));
  const auto no = solve_wis(c5, 3);
  EXPECT_FALSE(no.yes);
  EXPECT_EQ(no.alpha, 2);
}

TEST(Solve, ZeroTargetIsTrivial) {
  const auto r = solve_wis(fixtures::cycle(7), 0);
  EXPECT_TRUE(r.yes);
  EXPECT_TRUE(r.certificate.vertices.empty());
  EXPECT_FALSE(r.alpha);
}

TEST(Solve, HomogeneousSetInstanceContracts) {
  const Trigraph t = fixtures::homogeneous_set_instance();
  ASSERT_FALSE(find_bull(t));
  const auto r = solve_wis(t, 1);
  EXPECT_EQ(r.alpha, alpha_exact(t).total_weight);
  EXPECT_EQ(r.alpha, oracle::alpha_by_subsets(t));
  EXPECT_GE(r.contractions, 1);
}

TEST(Solve, WeightedContraction) {
  // Two twins {0,1} seen by 2; the contracted vertex carries weight 5 + 4.
  Trigraph t = Trigraph::from_edges(4, {{0, 2}, {1, 2}, {2, 3}});
  t.set_weight(0, 5);
  t.set_weight(1, 4);
  t.set_weight(2, 10);
  t.set_weight(3, 2);
  const auto r = solve_wis(t, 1);
  EXPECT_EQ(r.alpha, 11);
  EXPECT_EQ(r.certificate.vertices, (VertexList{0, 1, 3}));
  EXPECT_EQ(r.certificate.total_weight, 11);
}

TEST(Solve, RejectsBullsAndNonMonogamous) {
  EXPECT_THROW(solve_wis(fixtures::bull(), 1), UsageError);
  Trigraph chain(3);
  chain.set(0, 1, Adjacency::switchable);
  chain.set(1, 2, Adjacency::switchable);
  EXPECT_THROW(solve_wis(chain, 1), UsageError);
}

TEST(Solve, AgreesWithAlphaOnRandomBullFree) {
  oracle::Rng rng(123);
  int contracted = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 12);
    Trigraph t = oracle::random_bull_free(n, rng);
    for (Vertex v = 0; v < n; ++v) t.set_weight(v, static_cast<Weight>(rng() % 5));
    ASSERT_FALSE(find_bull(t));
    ASSERT_TRUE(t.is_monogamous());
    const Weight alpha = alpha_exact(t).total_weight;
    const auto r = solve_wis(t, alpha);
    EXPECT_TRUE(r.yes);
    EXPECT_EQ(r.alpha, alpha) << "trial " << trial;
    EXPECT_TRUE(is_valid_independent_set(t, r.certificate));
    EXPECT_FALSE(solve_wis(t, alpha + 1).yes);
    contracted += r.contractions > 0;
  }
  EXPECT_GT(contracted, 20);
}

}  // namespace
}  // namespace bullfree
