#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bullfree/cnf.hpp"
#include "bullfree/patterns.hpp"
#include "bullfree/trigraph.hpp"

namespace bullfree {

using Edge = std::pair<Vertex, Vertex>;

/// Clause-triangle vertex: vertex 3*clause + position carries `literal`.
struct LiteralVertex {
  int clause = 0;
  int position = 0;
  Literal literal = 0;

  friend bool operator==(const LiteralVertex&, const LiteralVertex&) = default;
};

struct ConflictGraph {
  Trigraph graph;
  std::vector<LiteralVertex> labels;
  std::vector<Edge> edges;  // (u < v), ascending
};

/// One triangle per clause, plus every edge between an x-vertex and an
/// x̄-vertex for each variable x.
ConflictGraph build_conflict_graph(const CnfFormula& f);

/// Smallest even q with 3(q + 1) >= 2p. Throws UsageError for p < 3.
int compute_q(int p);

/// Each edge uv (u < v) becomes the path u, i_1, ..., i_q, v. Original
/// vertices keep their ids; internal vertex t (1-based) of edge e is
/// n + e*q + (t - 1), edges taken in ascending order.
struct Subdivision {
  Trigraph graph;
  int original_count = 0;
  int q = 0;
  std::vector<Edge> edges;

  bool is_original(Vertex v) const { return v < original_count; }
  /// Original edge index behind an internal vertex.
  int edge_of(Vertex internal) const { return (internal - original_count) / q; }
  /// 1-based position of an internal vertex along its path.
  int position_of(Vertex internal) const { return (internal - original_count) % q + 1; }
  /// u, i_1, ..., i_q, v for edge e.
  VertexList path(int e) const;
};

/// Requires q even and q >= 2 unless `allow_odd` (used to build corrupted
/// instances in tests); throws UsageError otherwise or for a non-graph.
Subdivision subdivide(const Trigraph& g, int q, bool allow_odd = false);

struct ReductionArtifact {
  CnfFormula formula;
  ConflictGraph conflict;
  Subdivision subdivided;
  int p = 0;
  int q = 0;
  long long target_k = 0;  // |E(G_phi)| * q / 2 + m
};

ReductionArtifact reduce(const CnfFormula& f, int p);

struct InstanceReport {
  std::optional<PatternWitness> bull;
  std::vector<PatternWitness> holes;  // first hole of each offending length
  std::vector<int> lengths_checked;   // 4 .. 2p - 1

  bool passed() const { return !bull && holes.empty(); }
};

/// Searches the subdivided graph for an induced bull and induced cycles of
/// length 4 .. 2p-1. Throws CapacityError when 2p - 1 > 9.
InstanceReport verify_instance(const ReductionArtifact& art);

/// Original edges with both endpoints in `s`.
int count_conflicts(const ReductionArtifact& art, const VertexList& s);

/// One shift along the path of the first conflicted original edge
/// (ascending by endpoints). nullopt when there is no conflict.
/// Throws InternalError if the first free gap index is even.
std::optional<VertexList> repair_step(const ReductionArtifact& art, const VertexList& s);

struct RepairResult {
  VertexList set;
  std::vector<int> eta_history;  // conflict count before each pass, then the final 0
};

/// Applies repair_step until no conflict remains. Throws UsageError when
/// `s` is not an independent set of the subdivided graph.
RepairResult repair_independent_set(const ReductionArtifact& art, VertexList s);

/// Repairs `s`, keeps its original vertices and reads a literal off each
/// clause triangle. Variables left unset are false; index 0 is unused.
/// Throws UsageError if `s` is not independent or smaller than target_k,
/// InternalError if fewer than m original vertices survive.
std::vector<bool> extract_assignment(const ReductionArtifact& art, const VertexList& s);

/// Independent set of size target_k built from a satisfying assignment: one
/// true-literal vertex per clause and q/2 internal vertices per edge.
/// Throws UsageError if the assignment does not satisfy the formula.
VertexList lift_assignment(const ReductionArtifact& art, const std::vector<bool>& assignment);

}  // namespace bullfree
