#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace bullfree {

using Vertex = int;
using Weight = std::int64_t;
using VertexList = std::vector<Vertex>;

/// Value of the adjacency function on an unordered vertex pair.
enum class Adjacency : std::int8_t {
  strong_antiedge = -1,
  switchable = 0,
  strong_edge = 1,
};

constexpr Adjacency operator-(Adjacency a) {
  return static_cast<Adjacency>(-static_cast<std::int8_t>(a));
}

/// How a single vertex attaches to a set of vertices.
enum class Attachment {
  strongly_complete,
  strongly_anticomplete,
  mixed,
};

/// Symmetric ternary adjacency over vertices 0..n-1 with non-negative
/// integer vertex weights (default 1). Unset pairs are strong antiedges.
///
/// Storage is a dense n*n matrix; `at()` is the unchecked accessor used by
/// the inner loops, `theta()` the checked one.
class Trigraph {
 public:
  Trigraph() = default;
  explicit Trigraph(int n);

  /// Graph on n vertices with the listed strong edges.
  static Trigraph from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Trigraph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int size() const noexcept { return n_; }

  Adjacency theta(Vertex u, Vertex v) const;
  Adjacency at(Vertex u, Vertex v) const noexcept {
    return static_cast<Adjacency>(adj_[static_cast<std::size_t>(u) * n_ + v]);
  }

  void set(Vertex u, Vertex v, Adjacency value);
  void set_edge(Vertex u, Vertex v) { set(u, v, Adjacency::strong_edge); }

  Weight weight(Vertex v) const;
  void set_weight(Vertex v, Weight w);
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  // theta in {0, +1}
  bool adjacent(Vertex u, Vertex v) const noexcept { return at(u, v) != Adjacency::strong_antiedge; }
  // theta in {-1, 0}
  bool antiadjacent(Vertex u, Vertex v) const noexcept { return at(u, v) != Adjacency::strong_edge; }
  bool strongly_adjacent(Vertex u, Vertex v) const noexcept { return at(u, v) == Adjacency::strong_edge; }
  bool strongly_antiadjacent(Vertex u, Vertex v) const noexcept {
    return at(u, v) == Adjacency::strong_antiedge;
  }
  bool semiadjacent(Vertex u, Vertex v) const noexcept { return at(u, v) == Adjacency::switchable; }

  /// True when no pair is switchable.
  bool is_graph() const noexcept;
  /// True when every vertex lies in at most one switchable pair.
  bool is_monogamous() const noexcept;

  /// Adjacent (theta >= 0) vertices of v, ascending.
  VertexList neighbors(Vertex v) const;
  /// Strongly adjacent vertices of v, ascending.
  VertexList strong_neighbors(Vertex v) const;
  /// The switchable partners of v, ascending (at most one when monogamous).
  VertexList switchable_partners(Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> strong_edges() const;

  bool in_range(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const Trigraph&, const Trigraph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<std::int8_t> adj_;
  std::vector<Weight> weights_;
};

/// Negates every pair value; weights are preserved.
Trigraph complement(const Trigraph& t);

/// Realization in which every switchable pair becomes a strong antiedge.
Trigraph realize_antiedges(const Trigraph& t);

/// Induced subtrigraph together with the map from new to original ids.
struct InducedTrigraph {
  Trigraph trigraph;
  VertexList origin;
};

/// Induced subtrigraph on `vertices`, relabelled 0..|S|-1 in ascending id order.
InducedTrigraph induced(const Trigraph& t, std::span<const Vertex> vertices);

/// Classification of v against the non-empty set S (v must not be in S).
Attachment classify(const Trigraph& t, Vertex v, std::span<const Vertex> set);

/// Unchecked variant of classify; an empty set counts as strongly complete.
Attachment attachment_of(const Trigraph& t, Vertex v, std::span<const Vertex> set) noexcept;

/// True when every vertex of `from` is strongly adjacent to every vertex of `to`.
bool strongly_complete(const Trigraph& t, std::span<const Vertex> from, std::span<const Vertex> to);
/// True when every vertex of `from` is strongly antiadjacent to every vertex of `to`.
bool strongly_anticomplete(const Trigraph& t, std::span<const Vertex> from,
                           std::span<const Vertex> to);

/// Pairwise antiadjacent (theta <= 0).
bool is_independent(const Trigraph& t, std::span<const Vertex> vertices);

Weight total_weight(const Trigraph& t, std::span<const Vertex> vertices);

/// Sorted, duplicate-free copy.
VertexList normalized(VertexList vertices);

/// Ascending list of V(T) minus `excluded`.
VertexList complement_of(int n, std::span<const Vertex> excluded);

}  // namespace bullfree
