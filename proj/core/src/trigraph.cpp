#include "bullfree/trigraph.hpp"

#include <algorithm>
#include <string>

#include "bullfree/errors.hpp"

namespace bullfree {

Trigraph::Trigraph(int n)
    : n_(n),
      adj_(static_cast<std::size_t>(n < 0 ? 0 : n) * (n < 0 ? 0 : n),
           static_cast<std::int8_t>(Adjacency::strong_antiedge)),
      weights_(static_cast<std::size_t>(n < 0 ? 0 : n), 1) {
  if (n < 0) throw UsageError("trigraph size must be non-negative");
}

Trigraph Trigraph::from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Trigraph Trigraph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Trigraph t(n);
  for (auto [u, v] : edges) t.set_edge(u, v);
  return t;
}

void Trigraph::check_pair(Vertex u, Vertex v) const {
  if (!in_range(u) || !in_range(v)) {
    throw UsageError("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") out of range for n = " + std::to_string(n_));
  }
  if (u == v) throw UsageError("adjacency is undefined on (v, v) for v = " + std::to_string(u));
}

Adjacency Trigraph::theta(Vertex u, Vertex v) const {
  check_pair(u, v);
  return at(u, v);
}

void Trigraph::set(Vertex u, Vertex v, Adjacency value) {
  check_pair(u, v);
  const auto raw = static_cast<std::int8_t>(value);
  adj_[static_cast<std::size_t>(u) * n_ + v] = raw;
  adj_[static_cast<std::size_t>(v) * n_ + u] = raw;
}

Weight Trigraph::weight(Vertex v) const {
  if (!in_range(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
  return weights_[v];
}

void Trigraph::set_weight(Vertex v, Weight w) {
  if (!in_range(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
  if (w < 0) throw UsageError("weights must be non-negative");
  weights_[v] = w;
}

bool Trigraph::is_graph() const noexcept {
  return std::none_of(adj_.begin(), adj_.end(), [](std::int8_t x) { return x == 0; });
}

bool Trigraph::is_monogamous() const noexcept {
  for (Vertex u = 0; u < n_; ++u) {
    int partners = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (u != v && semiadjacent(u, v) && ++partners > 1) return false;
    }
  }
  return true;
}

VertexList Trigraph::neighbors(Vertex v) const {
  VertexList out;
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v && adjacent(u, v)) out.push_back(u);
  }
  return out;
}

VertexList Trigraph::strong_neighbors(Vertex v) const {
  VertexList out;
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v && strongly_adjacent(u, v)) out.push_back(u);
  }
  return out;
}

VertexList Trigraph::switchable_partners(Vertex v) const {
  VertexList out;
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v && semiadjacent(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Trigraph::strong_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (strongly_adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Trigraph complement(const Trigraph& t) {
  Trigraph out(t.size());
  for (Vertex u = 0; u < t.size(); ++u) {
    out.set_weight(u, t.weights()[u]);
    for (Vertex v = u + 1; v < t.size(); ++v) out.set(u, v, -t.at(u, v));
  }
  return out;
}

Trigraph realize_antiedges(const Trigraph& t) {
  Trigraph out = t;
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex v = u + 1; v < t.size(); ++v) {
      if (t.semiadjacent(u, v)) out.set(u, v, Adjacency::strong_antiedge);
    }
  }
  return out;
}

InducedTrigraph induced(const Trigraph& t, std::span<const Vertex> vertices) {
  for (Vertex v : vertices) {
    if (!t.in_range(v)) throw UsageError("induced: vertex " + std::to_string(v) + " out of range");
  }
  InducedTrigraph out;
  out.origin = normalized(VertexList(vertices.begin(), vertices.end()));
  const int k = static_cast<int>(out.origin.size());
  out.trigraph = Trigraph(k);
  for (int i = 0; i < k; ++i) {
    out.trigraph.set_weight(i, t.weights()[out.origin[i]]);
    for (int j = i + 1; j < k; ++j) out.trigraph.set(i, j, t.at(out.origin[i], out.origin[j]));
  }
  return out;
}

Attachment attachment_of(const Trigraph& t, Vertex v, std::span<const Vertex> set) noexcept {
  bool all_strong = true;
  bool all_anti = true;
  for (Vertex s : set) {
    const Adjacency a = t.at(v, s);
    all_strong = all_strong && a == Adjacency::strong_edge;
    all_anti = all_anti && a == Adjacency::strong_antiedge;
    if (!all_strong && !all_anti) return Attachment::mixed;
  }
  return all_strong ? Attachment::strongly_complete : Attachment::strongly_anticomplete;
}

Attachment classify(const Trigraph& t, Vertex v, std::span<const Vertex> set) {
  if (!t.in_range(v)) throw UsageError("classify: vertex out of range");
  if (set.empty()) throw UsageError("classify: set must be non-empty");
  for (Vertex s : set) {
    if (!t.in_range(s)) throw UsageError("classify: set vertex out of range");
    if (s == v) throw UsageError("classify: vertex " + std::to_string(v) + " lies in the set");
  }
  return attachment_of(t, v, set);
}

bool strongly_complete(const Trigraph& t, std::span<const Vertex> from, std::span<const Vertex> to) {
  for (Vertex a : from) {
    for (Vertex b : to) {
      if (!t.strongly_adjacent(a, b)) return false;
    }
  }
  return true;
}

bool strongly_anticomplete(const Trigraph& t, std::span<const Vertex> from,
                           std::span<const Vertex> to) {
  for (Vertex a : from) {
    for (Vertex b : to) {
      if (!t.strongly_antiadjacent(a, b)) return false;
    }
  }
  return true;
}

bool is_independent(const Trigraph& t, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !t.antiadjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Weight total_weight(const Trigraph& t, std::span<const Vertex> vertices) {
  Weight sum = 0;
  for (Vertex v : vertices) sum += t.weights()[v];
  return sum;
}

VertexList normalized(VertexList vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

VertexList complement_of(int n, std::span<const Vertex> excluded) {
  std::vector<char> skip(static_cast<std::size_t>(n), 0);
  for (Vertex v : excluded) skip[v] = 1;
  VertexList out;
  for (Vertex v = 0; v < n; ++v) {
    if (!skip[v]) out.push_back(v);
  }
  return out;
}

}  // namespace bullfree
