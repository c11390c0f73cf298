#pragma once

#include "bullfree/cnf.hpp"
#include "bullfree/kernel.hpp"
#include "bullfree/trigraph.hpp"

namespace bullfree::fixtures {

Trigraph cycle(int n);
Trigraph path(int n);
Trigraph complete(int n);
Trigraph edgeless(int n);
Trigraph complete_bipartite(int a, int b);
Trigraph petersen();

/// x1=0, x2=1, x3=2, y=3, z=4 with the bull edge set.
Trigraph bull();

/// a1=0, a2=1, b1=2, c=3, d=4, f=5: A = {0,1}, B = {2} is a small proper
/// homogeneous pair with C = {3}, D = {4}, F = {5}; a1b1 is an edge.
Trigraph small_pair_instance();
inline constexpr Vertex kA1 = 0, kA2 = 1, kB1 = 2, kC = 3, kD = 4, kF = 5;

/// X = {0,1} strongly complete to Y = {2,3,4} and strongly anticomplete to
/// Z = {5,6,7}, with no small homogeneous pair; bull-free.
Trigraph homogeneous_set_instance();
inline const VertexList kHomSetX{0, 1};

/// One clause (x1 v x2 v x3).
CnfFormula single_clause();
/// (x1 v x1 v x1) and (-x1 v -x1 v -x1).
CnfFormula contradiction();

/// A T1 instance together with its structure.
struct T1Fixture {
  Trigraph t;
  T1Structure s;
};

/// K = (v1, v2) = (0, 1), X = {a, b} = {2, 3}; a sees v1 and v2, b sees v2.
T1Fixture t1_nested_valid();
/// As above with b's edge moved to v1, breaking the nested B-traces.
T1Fixture t1_nested_broken();
/// An X-vertex with neighbours in three cliques.
T1Fixture t1_three_cliques();
/// A clique of size 3 with |N(K)| = 1 in a trigraph without homogeneous sets.
T1Fixture t1_big_clique();
/// One X vertex and a clique of size 5: n = 6 > 5|X|.
T1Fixture t1_vertex_bound();

}  // namespace bullfree::fixtures
