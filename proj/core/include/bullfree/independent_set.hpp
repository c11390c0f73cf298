#pragma once

#include <vector>

#include "bullfree/trigraph.hpp"

namespace bullfree {

/// Pairwise antiadjacent vertices (ascending) and their total weight.
struct IndependentSetResult {
  VertexList vertices;
  Weight total_weight = 0;

  friend bool operator==(const IndependentSetResult&, const IndependentSetResult&) = default;
};

/// True when the vertices are pairwise antiadjacent and total_weight matches.
bool is_valid_independent_set(const Trigraph& t, const IndependentSetResult& s);

enum class AlphaStrategy {
  /// Reductions, component splitting and in/out branching on a
  /// maximum-degree vertex, pruned by a weighted clique-cover bound.
  branch_and_bound,
  /// Recursive enumeration of all independent sets. Small n only.
  enumeration,
};

/// Maximum-weight independent set. Switchable pairs count as antiadjacent,
/// so only strong edges conflict. Throws CapacityError above the guard
/// (kBranchAndBoundMaxN / kEnumerationMaxN, overridable by BULLFREE_MAX_N).
///
/// The enumeration strategy breaks weight ties toward the lexicographically
/// smallest vertex list; branch-and-bound is deterministic but does not
/// promise that particular optimum.
IndependentSetResult alpha_exact(const Trigraph& t,
                                 AlphaStrategy strategy = AlphaStrategy::branch_and_bound);

struct MaximalSetEnumeration {
  std::vector<VertexList> sets;  // lexicographically sorted
  bool overflow = false;         // more than `cap` sets exist; `sets` holds cap + 1 of them
};

/// All inclusion-maximal independent sets (Bron-Kerbosch with pivoting on
/// the antiadjacency graph), stopping once cap + 1 have been found.
MaximalSetEnumeration enumerate_maximal_independent_sets(const Trigraph& t, long long cap);

}  // namespace bullfree
