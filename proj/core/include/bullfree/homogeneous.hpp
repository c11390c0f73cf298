#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "bullfree/trigraph.hpp"

namespace bullfree {

/// A set X with 1 < |X| < n such that every vertex outside X is strongly
/// complete or strongly anticomplete to X.
struct HomogeneousSet {
  VertexList members;

  friend bool operator==(const HomogeneousSet&, const HomogeneousSet&) = default;
};

/// A homogeneous pair (A, B) with its witness partition. C..F are fully
/// determined by (A, B): C sees A only, D sees B only, E sees both, F neither.
struct HomogeneousPair {
  VertexList a, b, c, d, e, f;

  /// A ∪ B, ascending.
  VertexList side() const;
  int side_size() const { return static_cast<int>(a.size() + b.size()); }
  bool small() const { return side_size() <= 6; }
  bool proper() const { return !c.empty() && !d.empty(); }

  friend bool operator==(const HomogeneousPair&, const HomogeneousPair&) = default;
};

bool is_homogeneous_set(const Trigraph& t, std::span<const Vertex> x);

/// Builds the witness partition for (A, B) and checks the six conditions.
/// nullopt when (A, B) is not a homogeneous pair. Throws UsageError when A
/// or B is empty, out of range or the two overlap.
std::optional<HomogeneousPair> make_homogeneous_pair(const Trigraph& t, VertexList a, VertexList b);

/// Full definitional check of a stored pair, including its partition.
bool is_valid_homogeneous_pair(const Trigraph& t, const HomogeneousPair& pair);

/// Inclusion-minimal homogeneous set containing {u, v}, obtained by
/// repeatedly absorbing vertices that are mixed on the current set.
std::optional<HomogeneousSet> minimal_homogeneous_set_containing(const Trigraph& t, Vertex u,
                                                                 Vertex v);

/// Smallest homogeneous set over all seed pairs; ties go to the
/// lexicographically smallest member list.
std::optional<HomogeneousSet> find_minimally_sided_homogeneous_set(const Trigraph& t,
                                                                   int threads = 1);

/// Small homogeneous pair with |A| = i and |B| = j (1 <= j <= i, 3 <= i+j <= 6).
///
/// Guesses A and j-1 vertices of B, then sweeps the remaining vertices once,
/// adding to B any vertex mixed on A or on the current B. The same sweep is
/// also run with the roles exchanged (guess B, complete A), which catches
/// pairs where every B-vertex is uniform on A.
std::optional<HomogeneousPair> find_small_pair_ij(const Trigraph& t, int i, int j);

/// The (i, j) size classes visited by find_small_homogeneous_pair, in order.
inline constexpr std::pair<int, int> kSmallPairSizes[] = {
    {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {5, 1},
};

std::optional<HomogeneousPair> find_small_homogeneous_pair(const Trigraph& t);

/// Why a quadruple run of grow_proper_pair produced no pair. Each outcome
/// certifies that no minimally-sided proper pair has a1, a2 in A and c, d
/// outside A ∪ B.
struct PropertyP {
  enum class Reason {
    epsilon_reached,    // a vertex that is neither alpha nor beta entered R
    b_empty,            // A closed without B: A is a homogeneous set
    uniform_attachment, // B strongly complete/anticomplete to A
    small_remainder,    // fewer than 3 vertices left outside A ∪ B
  };
  Reason reason;

  friend bool operator==(const PropertyP&, const PropertyP&) = default;
};

std::string_view to_string(PropertyP::Reason reason);

using ProperPairGrowth = std::variant<HomogeneousPair, PropertyP>;

/// Grows a proper homogeneous pair from the seeds a1, a2 (which go to A),
/// with c forced into C and d into D. a1 and a2 must be strongly adjacent
/// to c and strongly antiadjacent to d. Vertices in R are processed FIFO.
ProperPairGrowth grow_proper_pair(const Trigraph& t, Vertex a1, Vertex a2, Vertex c, Vertex d);

/// Runs grow_proper_pair over every admissible quadruple and returns a
/// returned pair of minimum |A ∪ B|. Ties: smallest A ∪ B, then smallest A.
/// Quadruples with (c, d) in both orders are visited, so pairs whose larger
/// side is B are found through the role-exchanged seeds.
std::optional<HomogeneousPair> find_minimally_sided_proper_pair(const Trigraph& t,
                                                                int threads = 1);

struct DecompositionOutcome {
  enum class Tag { small_pair, minimally_sided_cut, none };

  Tag tag = Tag::none;
  std::optional<HomogeneousPair> pair;  // small pair, or the proper pair behind a cut
  std::optional<HomogeneousSet> set;    // set behind a cut
  VertexList side;                      // the cut side X, or A ∪ B for a small pair

  int side_size() const { return static_cast<int>(side.size()); }
};

std::string_view to_string(DecompositionOutcome::Tag tag);

/// A small homogeneous pair if one exists; otherwise the smaller of the
/// minimally-sided homogeneous set and the minimally-sided proper pair
/// (the set wins ties); otherwise none.
DecompositionOutcome find_decomposition(const Trigraph& t, int threads = 1);

/// Every homogeneous pair (A, B), both orientations, by enumerating all
/// 3^n vertex labellings. Optional bound on |A ∪ B|. Meant for n <= 12.
std::vector<HomogeneousPair> brute_force_pairs(const Trigraph& t,
                                               std::optional<int> max_side = std::nullopt);

/// Every homogeneous set by subset enumeration. Meant for n <= 16.
std::vector<HomogeneousSet> brute_force_homogeneous_sets(const Trigraph& t);

}  // namespace bullfree
