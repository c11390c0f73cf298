#pragma once

#include <optional>

#include "bullfree/independent_set.hpp"
#include "bullfree/trigraph.hpp"

namespace bullfree {

struct WisDecision {
  bool yes = false;
  IndependentSetResult certificate;  // weight >= k when yes, a maximum set otherwise
  std::optional<Weight> alpha;       // exact alpha(T); not computed for k <= 0
  int contractions = 0;              // homogeneous sets contracted, recursion included
};

/// Decides alpha(T) >= k on a bull-free monogamous trigraph.
///
/// Contracts a minimally-sided homogeneous set X into one vertex of weight
/// alpha(T[X]) (solved recursively) until none is left, then finishes with
/// alpha_exact. Throws UsageError when T contains a bull or is not
/// monogamous; CapacityError propagates from alpha_exact.
WisDecision solve_wis(const Trigraph& t, Weight k, int threads = 1);

}  // namespace bullfree
