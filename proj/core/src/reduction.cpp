#include "bullfree/reduction.hpp"

#include <algorithm>

#include "bullfree/errors.hpp"

namespace bullfree {
namespace {

std::vector<char> membership(int n, const VertexList& s) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw UsageError("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

void require_independent(const ReductionArtifact& art, const VertexList& s) {
  const auto& g = art.subdivided.graph;
  membership(g.size(), s);
  if (!is_independent(g, s)) throw UsageError("set is not independent in the subdivided graph");
}

}  // namespace

ConflictGraph build_conflict_graph(const CnfFormula& f) {
  const int m = f.num_clauses();
  ConflictGraph out;
  out.graph = Trigraph(3 * m);
  for (int j = 0; j < m; ++j) {
    for (int r = 0; r < 3; ++r) out.labels.push_back({j, r, f.clauses[j][r]});
  }
  for (Vertex u = 0; u < 3 * m; ++u) {
    for (Vertex v = u + 1; v < 3 * m; ++v) {
      const bool same_clause = u / 3 == v / 3;
      const bool opposite = out.labels[u].literal == -out.labels[v].literal;
      if (same_clause || opposite) {
        out.graph.set_edge(u, v);
        out.edges.emplace_back(u, v);
      }
    }
  }
  return out;
}

int compute_q(int p) {
  if (p < 3) throw UsageError("p must be at least 3");
  int q = 0;
  while (3 * (q + 1) < 2 * p) q += 2;
  return q;
}

VertexList Subdivision::path(int e) const {
  VertexList out{edges[e].first};
  for (int t = 0; t < q; ++t) out.push_back(original_count + e * q + t);
  out.push_back(edges[e].second);
  return out;
}

Subdivision subdivide(const Trigraph& g, int q, bool allow_odd) {
  if (!g.is_graph()) throw UsageError("subdivide expects a graph");
  if (!allow_odd && (q < 2 || q % 2 != 0)) throw UsageError("q must be even and at least 2");
  if (q < 1) throw UsageError("q must be positive");
  Subdivision s;
  s.original_count = g.size();
  s.q = q;
  s.edges = g.strong_edges();
  s.graph = Trigraph(g.size() + static_cast<int>(s.edges.size()) * q);
  for (Vertex v = 0; v < g.size(); ++v) s.graph.set_weight(v, g.weights()[v]);
  for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
    const VertexList p = s.path(e);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) s.graph.set_edge(p[i], p[i + 1]);
  }
  return s;
}

ReductionArtifact reduce(const CnfFormula& f, int p) {
  ReductionArtifact art;
  art.p = p;
  art.q = compute_q(p);
  art.formula = f;
  art.conflict = build_conflict_graph(f);
  art.subdivided = subdivide(art.conflict.graph, art.q);
  art.target_k = static_cast<long long>(art.conflict.edges.size()) * art.q / 2 + f.num_clauses();
  return art;
}

InstanceReport verify_instance(const ReductionArtifact& art) {
  const int longest = 2 * art.p - 1;
  if (longest > 9) {
    throw CapacityError("hole search up to length " + std::to_string(longest) +
                        " exceeds the exhaustive limit of 9");
  }
  InstanceReport report;
  const auto& g = art.subdivided.graph;
  report.bull = find_bull(g);
  for (int len = 4; len <= longest; ++len) {
    report.lengths_checked.push_back(len);
    if (auto hole = find_hole(g, len)) report.holes.push_back(*hole);
  }
  return report;
}

int count_conflicts(const ReductionArtifact& art, const VertexList& s) {
  const auto in = membership(art.subdivided.graph.size(), s);
  int eta = 0;
  for (auto [u, v] : art.subdivided.edges) eta += in[u] && in[v];
  return eta;
}

std::optional<VertexList> repair_step(const ReductionArtifact& art, const VertexList& s) {
  const auto& sub = art.subdivided;
  auto in = membership(sub.graph.size(), s);
  for (int e = 0; e < static_cast<int>(sub.edges.size()); ++e) {
    if (!in[sub.edges[e].first] || !in[sub.edges[e].second]) continue;
    const VertexList x = sub.path(e);  // x_0 = u, ..., x_{q+1} = v
    int gap = -1;
    for (int i = 1; i <= sub.q; ++i) {
      if (!in[x[i]] && !in[x[i + 1]]) {
        gap = i;
        break;
      }
    }
    if (gap < 0) throw InternalError("no free gap on a conflicted path; set is not independent");
    if (gap % 2 == 0) throw InternalError("first free gap on a conflicted path has even index");
    for (int j = 0; j <= (gap - 1) / 2; ++j) {
      in[x[2 * j]] = 0;
      in[x[2 * j + 1]] = 1;
    }
    VertexList out;
    for (Vertex v = 0; v < sub.graph.size(); ++v) {
      if (in[v]) out.push_back(v);
    }
    return out;
  }
  return std::nullopt;
}

RepairResult repair_independent_set(const ReductionArtifact& art, VertexList s) {
  require_independent(art, s);
  RepairResult r;
  r.set = normalized(std::move(s));
  r.eta_history.push_back(count_conflicts(art, r.set));
  while (auto next = repair_step(art, r.set)) {
    r.set = std::move(*next);
    r.eta_history.push_back(count_conflicts(art, r.set));
  }
  return r;
}

std::vector<bool> extract_assignment(const ReductionArtifact& art, const VertexList& s) {
  require_independent(art, s);
  if (static_cast<long long>(normalized(s).size()) < art.target_k) {
    throw UsageError("set has fewer than target_k = " + std::to_string(art.target_k) + " vertices");
  }
  const RepairResult repaired = repair_independent_set(art, s);
  std::vector<bool> assignment(art.formula.num_vars + 1, false);
  int originals = 0;
  for (Vertex v : repaired.set) {
    if (!art.subdivided.is_original(v)) continue;
    ++originals;
    const Literal lit = art.conflict.labels[v].literal;
    assignment[lit > 0 ? lit : -lit] = lit > 0;
  }
  if (originals < art.formula.num_clauses()) {
    throw InternalError("repaired set keeps " + std::to_string(originals) +
                        " original vertices, fewer than m = " + std::to_string(art.formula.num_clauses()));
  }
  if (!art.formula.satisfied_by(assignment)) throw InternalError("extracted assignment is not satisfying");
  return assignment;
}

VertexList lift_assignment(const ReductionArtifact& art, const std::vector<bool>& assignment) {
  if (!art.formula.satisfied_by(assignment)) throw UsageError("assignment does not satisfy the formula");
  const auto& sub = art.subdivided;
  std::vector<char> picked(sub.graph.size(), 0);
  for (int j = 0; j < art.formula.num_clauses(); ++j) {
    for (int r = 0; r < 3; ++r) {
      const Literal lit = art.formula.clauses[j][r];
      if (assignment[lit > 0 ? lit : -lit] == (lit > 0)) {
        picked[3 * j + r] = 1;
        break;
      }
    }
  }
  for (int e = 0; e < static_cast<int>(sub.edges.size()); ++e) {
    const VertexList x = sub.path(e);
    // Odd positions when u is free, even positions (ending next to v) otherwise.
    const int start = picked[x.front()] ? 2 : 1;
    for (int t = start; t <= sub.q; t += 2) picked[x[t]] = 1;
  }
  VertexList out;
  for (Vertex v = 0; v < sub.graph.size(); ++v) {
    if (picked[v]) out.push_back(v);
  }
  return out;
}

}  // namespace bullfree
