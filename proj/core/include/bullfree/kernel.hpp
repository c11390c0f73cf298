#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bullfree/trigraph.hpp"

namespace bullfree {

/// Kernel-size functions for parameter k (and hole bound p):
///   g(k)     = C(k+1, 2) - 1          Ramsey bound on |X| for triangle-free X
///   f(k)     = 5 g(k)                 kernel size for the clique-plus-triangle-free class
///   f_old(k) = g(k) + (k-1)(C(g(k), 2) + 2 g(k) + 1)
///   gp(k, p) = ceil(k (k^(1/(p-1)) + 2))   bound on |X| without holes of length < 2p
struct KernelBounds {
  long long k = 0;
  std::optional<int> p;
  long long g = 0;
  long long f = 0;
  long long f_old = 0;
  std::optional<long long> gp;
};

/// Requires k >= 1 and, when given, p >= 3. Throws CapacityError on overflow.
KernelBounds kernel_bounds(long long k, std::optional<int> p = std::nullopt);

/// Claimed decomposition of a trigraph into a triangle-free part X and
/// strong cliques K_1..K_t, each listed in its order v_1..v_r.
///
/// `a_sides[i]`, when present, fixes the A side of the bipartition of
/// N(K_i) (B is the rest of N(K_i)); when absent the verifier searches for
/// a bipartition with nested traces.
struct T1Structure {
  VertexList x;
  std::vector<VertexList> cliques;
  std::vector<std::optional<VertexList>> a_sides;
};

struct T1Check {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

std::string_view to_string(T1Check::Status status);

struct T1Report {
  std::vector<T1Check> checks;

  bool passed() const;
  /// Status of the named check; throws UsageError for an unknown name.
  T1Check::Status status(std::string_view name) const;
};

// Check names, in report order.
inline constexpr std::string_view kT1Monogamous = "monogamous";
inline constexpr std::string_view kT1TriangleFreeX = "x-triangle-free";
inline constexpr std::string_view kT1StrongCliques = "strong-cliques";
inline constexpr std::string_view kT1CliquesAnticomplete = "cliques-anticomplete";
// each X-vertex has neighbours in at most two cliques
inline constexpr std::string_view kT1TwoCliqueNeighbors = "two-clique-neighbors";
// N(K) bipartite as (A, B) with A-traces shrinking and B-traces growing along K
inline constexpr std::string_view kT1NestedTraces = "nested-traces";
// |K| <= 2|N(K)|; only meaningful without a homogeneous set
inline constexpr std::string_view kT1CliqueVsNeighborhood = "clique-vs-neighborhood";
// sum_i |N(K_i)| <= 2|X|
inline constexpr std::string_view kT1NeighborhoodSum = "neighborhood-sum";
// n <= 5|X|
inline constexpr std::string_view kT1VertexBound = "vertex-bound";

/// Verifies every structural condition and the derived counting bounds.
/// Throws UsageError when the structure is not a partition of V(T).
T1Report verify_t1(const Trigraph& t, const T1Structure& s);

}  // namespace bullfree
