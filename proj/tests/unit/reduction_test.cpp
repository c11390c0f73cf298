#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <sstream>

#include "bullfree/cnf.hpp"
#include "bullfree/errors.hpp"
#include "bullfree/independent_set.hpp"
#include "bullfree/patterns.hpp"
#include "bullfree/reduction.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace bullfree {
namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_cnf(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Cnf, Examples) {
  const auto f = parse_cnf("p cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(f.num_vars, 3);
  EXPECT_EQ(f.num_clauses(), 1);
  EXPECT_EQ(f.sparsity(), 1);
  const auto g = parse_cnf("p cnf 1 1\n1 1 1 0\n");
  EXPECT_EQ(g.occurrences(1), 3);
  EXPECT_EQ(g.sparsity(), 3);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 2 0\n"), 2);
}

TEST(Cnf, CommentsSplitClausesAndPercent) {
  const auto f = parse_cnf(
      "c comment\n"
      "p cnf 4 2\n"
      "1 -2\n"
      "3 0 -4 -1 2 0\n"
      "%\n"
      "0\n");
  ASSERT_EQ(f.num_clauses(), 2);
  EXPECT_EQ(f.clauses[0], (Clause{1, -2, 3}));
  EXPECT_EQ(f.clauses[1], (Clause{-4, -1, 2}));
}

TEST(Cnf, Errors) {
  EXPECT_EQ(parse_error_line("p cnf 3 1\n1 2 3 4 0\n"), 2);  // width 4
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 2 3 0\n"), 2);    // variable 3 undeclared
  EXPECT_EQ(parse_error_line("1 2 3 0\n"), 1);               // no header
  EXPECT_EQ(parse_error_line("p cnf 3 2\n1 2 3 0\n"), 3);    // count mismatch
  EXPECT_EQ(parse_error_line("p cnf 3 1\n1 x 3 0\n"), 2);
  EXPECT_EQ(parse_error_line("p cnf 3 1\n1 2 3\n"), 2);      // unterminated
  EXPECT_EQ(parse_error_line("p dnf 3 1\n"), 1);
}

TEST(Cnf, WriteThenParse) {
  oracle::Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = oracle::random_cnf(6, 8, rng);
    std::ostringstream out;
    write_cnf(out, f);
    EXPECT_EQ(parse_cnf(out.str()), f);
  }
}

TEST(ConflictGraph, Examples) {
  const auto one = build_conflict_graph(fixtures::single_clause());
  EXPECT_EQ(one.graph, fixtures::complete(3));
  EXPECT_EQ(one.edges.size(), 3u);
  const auto two = build_conflict_graph(fixtures::contradiction());
  EXPECT_EQ(two.graph.size(), 6);
  EXPECT_EQ(two.edges.size(), 15u);
  EXPECT_EQ(two.labels[4], (LiteralVertex{1, 1, -1}));
}

TEST(ConflictGraph, DegreeBound) {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_cnf(6, 8, rng);
    const auto g = build_conflict_graph(f);
    const int c = f.sparsity();
    for (Vertex v = 0; v < g.graph.size(); ++v) {
      EXPECT_LE(static_cast<int>(g.graph.neighbors(v).size()), c + 2);
    }
    EXPECT_LE(2 * g.edges.size(), static_cast<std::size_t>(3 * f.num_clauses() * (c + 2)));
  }
}

TEST(ConflictGraph, SatisfiableIffAlphaReachesM) {
  oracle::Rng rng(12);
  int sat = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_cnf(6, 7, rng);
    const auto g = build_conflict_graph(f);
    const bool satisfiable = !oracle::sat_by_enumeration(f).empty();
    EXPECT_EQ(satisfiable, alpha_exact(g.graph).total_weight >= f.num_clauses()) << trial;
    sat += satisfiable;
  }
  EXPECT_GT(sat, 20);
  EXPECT_LT(sat, 200);
}

TEST(ComputeQ, Examples) {
  EXPECT_EQ(compute_q(3), 2);
  EXPECT_EQ(compute_q(4), 2);
  EXPECT_EQ(compute_q(5), 4);
  EXPECT_EQ(compute_q(6), 4);
  EXPECT_THROW(compute_q(2), UsageError);
  for (int p = 3; p < 40; ++p) {
    const int q = compute_q(p);
    EXPECT_EQ(q % 2, 0);
    EXPECT_GE(3 * (q + 1), 2 * p);
    EXPECT_LT(3 * (q - 1), 2 * p);
  }
}

TEST(Subdivide, Examples) {
  const auto k3 = subdivide(fixtures::complete(3), 2);
  EXPECT_EQ(k3.graph.size(), 9);
  EXPECT_EQ(girth(k3.graph), 9);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(k3.graph.neighbors(v).size(), 2u);
  const auto edge = subdivide(fixtures::path(2), 2);
  EXPECT_EQ(edge.path(0), (VertexList{0, 2, 3, 1}));
  EXPECT_EQ(edge.graph, Trigraph::from_edges(4, {{0, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(edge.edge_of(3), 0);
  EXPECT_EQ(edge.position_of(3), 2);
  EXPECT_THROW(subdivide(fixtures::complete(3), 3), UsageError);
  EXPECT_THROW(subdivide(fixtures::complete(3), 0), UsageError);
  EXPECT_EQ(subdivide(fixtures::complete(3), 1, true).graph.size(), 6);
}

TEST(Reduce, SingleClause) {
  const auto art = reduce(fixtures::single_clause(), 3);
  EXPECT_EQ(art.q, 2);
  EXPECT_EQ(art.target_k, 4);
  EXPECT_EQ(art.subdivided.graph.size(), 9);
  EXPECT_EQ(girth(art.subdivided.graph), 9);
  EXPECT_EQ(alpha_exact(art.subdivided.graph).total_weight, 4);
  EXPECT_EQ(oracle::alpha_by_subsets(art.subdivided.graph), 4);
}

TEST(Reduce, Contradiction) {
  const auto art = reduce(fixtures::contradiction(), 3);
  EXPECT_EQ(art.target_k, 17);
  EXPECT_EQ(art.subdivided.graph.size(), 36);
  EXPECT_LT(alpha_exact(art.subdivided.graph).total_weight, 17);
}

TEST(Reduce, VertexCountIdentity) {
  oracle::Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = oracle::random_cnf(5, 5, rng);
    const int p = 3 + trial % 4;
    const auto art = reduce(f, p);
    EXPECT_EQ(art.subdivided.graph.size(),
              3 * f.num_clauses() + static_cast<int>(art.conflict.edges.size()) * art.q);
  }
}

TEST(VerifyInstance, CycleNinePasses) {
  const auto report = verify_instance(reduce(fixtures::single_clause(), 3));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.lengths_checked, (std::vector<int>{4, 5}));
}

TEST(VerifyInstance, OddSubdivisionIsCaught) {
  ReductionArtifact art = reduce(fixtures::single_clause(), 4);
  art.subdivided = subdivide(art.conflict.graph, 1, true);
  art.q = 1;
  const auto report = verify_instance(art);
  EXPECT_FALSE(report.passed());
  ASSERT_EQ(report.holes.size(), 1u);
  EXPECT_EQ(report.holes[0].hole_length, 6);
}

TEST(VerifyInstance, CapacityGuard) {
  EXPECT_THROW(verify_instance(reduce(fixtures::single_clause(), 6)), CapacityError);
  EXPECT_NO_THROW(verify_instance(reduce(fixtures::single_clause(), 5)));
}

TEST(VerifyInstance, RandomFormulasPass) {
  oracle::Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto art = reduce(oracle::random_cnf(4, 4, rng), 3);
    EXPECT_TRUE(verify_instance(art).passed()) << trial;
  }
}

// An independent set with planted conflicts: both endpoints of some
// original edges, then internal vertices filled greedily along each path.
VertexList planted(const ReductionArtifact& art, oracle::Rng& rng) {
  const auto& sub = art.subdivided;
  const auto& g = sub.graph;
  std::vector<char> in(g.size(), 0);
  auto free = [&](Vertex v) {
    if (in[v]) return false;
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) return false;
    }
    return true;
  };
  for (Vertex v = 0; v < sub.original_count; ++v) {
    if (rng() % 2 == 0) in[v] = 1;  // originals are pairwise non-adjacent in G'
  }
  std::vector<Vertex> order;
  for (Vertex v = sub.original_count; v < g.size(); ++v) order.push_back(v);
  std::shuffle(order.begin(), order.end(), rng);
  for (Vertex v : order) {
    if (free(v)) in[v] = 1;
  }
  VertexList s;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (in[v]) s.push_back(v);
  }
  return s;
}

TEST(Repair, ConflictFreeUnchanged) {
  const auto art = reduce(fixtures::single_clause(), 3);
  const VertexList s{0, 4, 6, 8};  // path 0-3-4-1: 3 and 4 are internal
  ASSERT_TRUE(is_independent(art.subdivided.graph, s));
  const auto r = repair_independent_set(art, s);
  EXPECT_EQ(r.set, s);
  EXPECT_EQ(r.eta_history, (std::vector<int>{0}));
}

TEST(Repair, StrictlyDecreasesConflicts) {
  oracle::Rng rng(10);
  int planted_conflicts = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto art = reduce(oracle::random_cnf(5, 5, rng), 3 + trial % 3);
    VertexList s = planted(art, rng);
    ASSERT_TRUE(is_independent(art.subdivided.graph, s));
    const std::size_t size = s.size();
    int eta = count_conflicts(art, s);
    planted_conflicts += eta > 0;
    while (auto next = repair_step(art, s)) {
      const int after = count_conflicts(art, *next);
      EXPECT_LT(after, eta);
      EXPECT_EQ(next->size(), size);
      EXPECT_TRUE(is_independent(art.subdivided.graph, *next));
      eta = after;
      s = std::move(*next);
    }
    EXPECT_EQ(eta, 0);
  }
  EXPECT_GT(planted_conflicts, 50);
}

TEST(Repair, RejectsDependentSets) {
  const auto art = reduce(fixtures::single_clause(), 3);
  EXPECT_THROW(repair_independent_set(art, {0, 3}), UsageError);
  EXPECT_THROW(repair_independent_set(art, {0, 99}), UsageError);
}

TEST(Extract, AllMaximumSetsOfCycleNine) {
  const auto art = reduce(fixtures::single_clause(), 3);
  int with_original = 0;
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    if (std::popcount(mask) != 4) continue;
    VertexList s;
    for (Vertex v = 0; v < 9; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    if (!is_independent(art.subdivided.graph, s)) continue;
    with_original += std::any_of(s.begin(), s.end(), [](Vertex v) { return v < 3; });
    const auto a = extract_assignment(art, s);
    EXPECT_TRUE(art.formula.satisfied_by(a));
  }
  EXPECT_GT(with_original, 0);
}

TEST(Extract, Errors) {
  const auto art = reduce(fixtures::single_clause(), 3);
  EXPECT_THROW(extract_assignment(art, {0, 4}), UsageError);
}

TEST(Extract, FromAlphaCertificate) {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = oracle::random_cnf(5, 4, rng);
    if (oracle::sat_by_enumeration(f).empty()) continue;
    const auto art = reduce(f, 3);
    const auto best = alpha_exact(art.subdivided.graph);
    ASSERT_GE(best.total_weight, art.target_k);
    EXPECT_TRUE(f.satisfied_by(extract_assignment(art, best.vertices)));
  }
}

TEST(Lift, BuildsTargetSizeIndependentSet) {
  oracle::Rng rng(15);
  for (int trial = 0; trial < 80; ++trial) {
    const auto f = oracle::random_cnf(5, 5, rng);
    const auto a = oracle::sat_by_enumeration(f);
    const auto art = reduce(f, 3 + trial % 3);
    if (a.empty()) {
      std::vector<bool> all_false(f.num_vars + 1, false);
      EXPECT_THROW(lift_assignment(art, all_false), UsageError);
      continue;
    }
    const VertexList s = lift_assignment(art, a);
    EXPECT_EQ(static_cast<long long>(s.size()), art.target_k);
    EXPECT_TRUE(is_independent(art.subdivided.graph, s));
    EXPECT_EQ(count_conflicts(art, s), 0);
  }
}

}  // namespace
}  // namespace bullfree
