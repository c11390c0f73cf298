#pragma once

#include <vector>

#include "bullfree/independent_set.hpp"
#include "bullfree/trigraph.hpp"

namespace bullfree {

/// ceil(k * (k^(1/(p-1)) + 2)), computed exactly as 2k + ceil((k^p)^(1/(p-1))).
/// Requires k >= 1 and p >= 2; throws CapacityError if k^p exceeds 128 bits.
long long high_girth_threshold(long long k, int p);

/// Peeling test deg < k^(1/(p-1)) + 1 in integer form: deg == 0 or (deg-1)^(p-1) < k.
bool peel_qualifies(long long degree, long long k, int p);

struct GreedyIndependentSet {
  IndependentSetResult set;
  bool below_threshold = false;  // |V(G)| < high_girth_threshold(k, p)
  bool used_fallback = false;    // peeling stalled and the BFS layer N_{p-1} was added
  VertexList peeled;             // the greedy set S, in peeling order
  std::vector<VertexList> layers;  // N_0 .. N_{p-1} of the fallback BFS (empty otherwise)
  int residual_min_degree = 0;   // minimum degree of the graph left after peeling
};

/// Independent set of size >= k in a graph of girth >= 2p with at least
/// high_girth_threshold(k, p) vertices.
///
/// Peels a lowest-id minimum-degree vertex v with peel_qualifies(deg(v)),
/// adding it to S and deleting N[v], until |S| = k or no vertex qualifies.
/// If |S| < k the BFS layers from the lowest surviving vertex are built and
/// S ∪ N_{p-1} is returned. Layer invariants are checked and a violation
/// throws InternalError.
GreedyIndependentSet greedy_high_girth_is(const Trigraph& g, long long k, int p);

}  // namespace bullfree
