#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the Trigraph container.

#include <cstdint>
#include <random>
#include <vector>

#include "bullfree/cnf.hpp"
#include "bullfree/trigraph.hpp"

namespace bullfree::oracle {

/// Maximum weight over all vertex subsets that are pairwise antiadjacent. n <= 24.
Weight alpha_by_subsets(const Trigraph& t);

/// Number of inclusion-maximal independent sets by subset enumeration. n <= 20.
long long count_maximal_by_subsets(const Trigraph& t);

/// True when some 5-set and some realization of its switchable pairs
/// induce a graph bull.
bool has_bull_by_realizations(const Trigraph& t);

/// True when some `length`-subset induces a cycle (graphs only).
bool has_hole_by_subsets(const Trigraph& g, int length);

/// Satisfying assignment (index 0 unused) or empty.
std::vector<bool> sat_by_enumeration(const CnfFormula& f);

/// True when every outside vertex is strongly complete or anticomplete to x.
bool homogeneous_by_scan(const Trigraph& t, std::uint32_t x_mask);

using Rng = std::mt19937_64;

/// Monogamous trigraph with no three pairwise adjacent vertices, hence
/// bull-free. Edges and switchable pairs are added in random order.
Trigraph random_triangle_free_trigraph(int n, double edge_p, double switch_p, Rng& rng);

/// A mix of bull-free monogamous constructions: triangle-free trigraphs,
/// their complements, substitutions of those into each other, and
/// rejection-sampled random trigraphs.
Trigraph random_bull_free(int n, Rng& rng);

/// Random 3-CNF with 1..max_vars variables and 1..max_clauses clauses.
CnfFormula random_cnf(int max_vars, int max_clauses, Rng& rng);

}  // namespace bullfree::oracle
