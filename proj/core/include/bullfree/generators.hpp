#pragma once

#include <cstdint>

#include "bullfree/trigraph.hpp"

namespace bullfree {

/// Probabilities of each pair value; must sum to 1.
struct PairDensities {
  double strong_edge = 0.4;
  double switchable = 0.1;
  double strong_antiedge = 0.5;
};

/// Random trigraph; pair values are drawn independently (pairs visited in a
/// seeded random order). With `monogamous`, a switchable draw on a pair with
/// an already matched endpoint is redrawn as a strong edge or antiedge, so
/// the switchable pairs form a random partial matching.
Trigraph gen_random_trigraph(int n, const PairDensities& densities, bool monogamous,
                             std::uint64_t seed);

/// Random graph of girth >= target_girth: `proposals` uniform vertex pairs
/// are drawn and each is kept only when its endpoints are currently at
/// distance >= target_girth - 1. proposals < 0 means 2 * n * n.
Trigraph gen_high_girth(int n, int target_girth, std::uint64_t seed, int proposals = -1);

}  // namespace bullfree
