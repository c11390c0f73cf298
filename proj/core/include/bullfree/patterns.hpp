#pragma once

#include <optional>

#include "bullfree/trigraph.hpp"

namespace bullfree {

enum class PatternKind { bull, hole, triangle };

/// Vertices realising an induced pattern.
///
/// For a bull the order is (x1, x2, x3, y, z): x1x2x3 is the triangle, y
/// hangs off x1 and z off x2. For a hole the vertices are in cycle order.
struct PatternWitness {
  PatternKind kind = PatternKind::bull;
  VertexList vertices;
  int hole_length = 0;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// Re-checks a witness against `t` using adjacent/antiadjacent semantics.
bool confirms_pattern(const Trigraph& t, const PatternWitness& witness);

/// Induced bull where bull edges are adjacent (theta >= 0) and bull
/// non-edges antiadjacent (theta <= 0). Returns the lexicographically
/// smallest (x1, x2, x3, y, z) with x1 < x2.
std::optional<PatternWitness> find_bull(const Trigraph& t);

/// Induced cycle of exactly `length` vertices (length >= 4). The input must
/// be a graph. The witness starts at its smallest vertex.
std::optional<PatternWitness> find_hole(const Trigraph& t, int length);

/// Length of a shortest cycle of a graph; nullopt for forests.
std::optional<int> girth(const Trigraph& g);

/// Three pairwise adjacent (theta >= 0) vertices, if any.
std::optional<PatternWitness> find_triangle(const Trigraph& t);
bool is_triangle_free(const Trigraph& t);

}  // namespace bullfree
