#include "fixtures.hpp"

namespace bullfree::fixtures {

Trigraph cycle(int n) {
  Trigraph t(n);
  for (int i = 0; i < n; ++i) t.set_edge(i, (i + 1) % n);
  return t;
}

Trigraph path(int n) {
  Trigraph t(n);
  for (int i = 0; i + 1 < n; ++i) t.set_edge(i, i + 1);
  return t;
}

Trigraph complete(int n) {
  Trigraph t(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) t.set_edge(u, v);
  }
  return t;
}

Trigraph edgeless(int n) { return Trigraph(n); }

Trigraph complete_bipartite(int a, int b) {
  Trigraph t(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) t.set_edge(u, v);
  }
  return t;
}

Trigraph petersen() {
  Trigraph t(10);
  for (int i = 0; i < 5; ++i) {
    t.set_edge(i, (i + 1) % 5);          // outer cycle
    t.set_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    t.set_edge(i, 5 + i);                // spokes
  }
  return t;
}

Trigraph bull() { return Trigraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}}); }

Trigraph small_pair_instance() {
  return Trigraph::from_edges(6, {{kA1, kC}, {kA2, kC}, {kB1, kD}, {kA1, kB1}});
}

Trigraph homogeneous_set_instance() {
  return Trigraph::from_edges(8, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 6},
                                  {3, 5}, {3, 7}, {4, 5}, {4, 7}, {5, 6}, {6, 7}});
}

CnfFormula single_clause() { return CnfFormula{3, {{1, 2, 3}}}; }

CnfFormula contradiction() { return CnfFormula{1, {{1, 1, 1}, {-1, -1, -1}}}; }

T1Fixture t1_nested_valid() {
  T1Fixture f{Trigraph::from_edges(4, {{0, 1}, {2, 0}, {2, 1}, {3, 1}}), {}};
  f.s.x = {2, 3};
  f.s.cliques = {{0, 1}};
  f.s.a_sides = {VertexList{2}};
  return f;
}

T1Fixture t1_nested_broken() {
  T1Fixture f{Trigraph::from_edges(4, {{0, 1}, {2, 0}, {2, 1}, {3, 0}}), {}};
  f.s.x = {2, 3};
  f.s.cliques = {{0, 1}};
  f.s.a_sides = {VertexList{2}};
  return f;
}

T1Fixture t1_three_cliques() {
  // x = 0 sees the single-vertex cliques 1, 2, 3; 4 and 5 are isolated X vertices.
  T1Fixture f{Trigraph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}}), {}};
  f.s.x = {0, 4, 5};
  f.s.cliques = {{1}, {2}, {3}};
  return f;
}

T1Fixture t1_big_clique() {
  // K = (0, 1, 2); x = 3 is strongly adjacent to 0 and switchable with 1;
  // X = 3-4-5-6 is a path.
  T1Fixture f{Trigraph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 4}, {4, 5}, {5, 6}}), {}};
  f.t.set(3, 1, Adjacency::switchable);
  f.s.x = {3, 4, 5, 6};
  f.s.cliques = {{0, 1, 2}};
  return f;
}

T1Fixture t1_vertex_bound() {
  T1Fixture f{complete(6), {}};
  for (int v = 1; v < 6; ++v) f.t.set(0, v, Adjacency::strong_antiedge);
  f.t.set_edge(0, 1);
  f.s.x = {0};
  f.s.cliques = {{1, 2, 3, 4, 5}};
  return f;
}

}  // namespace bullfree::fixtures
