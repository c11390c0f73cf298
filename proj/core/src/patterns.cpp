#include "bullfree/patterns.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "bullfree/errors.hpp"

namespace bullfree {
namespace {

std::vector<VertexList> adjacency_lists(const Trigraph& t) {
  std::vector<VertexList> lists(static_cast<std::size_t>(t.size()));
  for (Vertex v = 0; v < t.size(); ++v) lists[v] = t.neighbors(v);
  return lists;
}

void require_graph(const Trigraph& t, const char* what) {
  if (!t.is_graph()) {
    throw UsageError(std::string(what) + " is only defined on graphs (no switchable pairs)");
  }
}

class HoleSearch {
 public:
  HoleSearch(const Trigraph& g, int length)
      : g_(g), length_(length), adjacency_(adjacency_lists(g)), on_path_(g.size(), 0) {}

  std::optional<VertexList> run() {
    for (Vertex s = 0; s < g_.size(); ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      const bool found = extend();
      on_path_[s] = 0;
      if (found) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const int i = static_cast<int>(path_.size());
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    const bool closing = i == length_ - 1;
    for (Vertex v : adjacency_[last]) {
      if (v <= start || on_path_[v]) continue;
      if (closing && (v < path_[1] || !g_.adjacent(v, start))) continue;
      bool chordless = true;
      for (int j = closing ? 1 : 0; j + 1 < i; ++j) {
        if (g_.adjacent(v, path_[j])) {
          chordless = false;
          break;
        }
      }
      if (!chordless) continue;
      path_.push_back(v);
      if (closing) return true;
      on_path_[v] = 1;
      const bool found = extend();
      on_path_[v] = 0;
      if (found) return true;
      path_.pop_back();
    }
    return false;
  }

  const Trigraph& g_;
  int length_;
  std::vector<VertexList> adjacency_;
  std::vector<char> on_path_;
  VertexList path_;
};

}  // namespace

bool confirms_pattern(const Trigraph& t, const PatternWitness& w) {
  const auto& x = w.vertices;
  for (Vertex v : x) {
    if (!t.in_range(v)) return false;
  }
  if (normalized(x).size() != x.size()) return false;
  switch (w.kind) {
    case PatternKind::bull: {
      if (x.size() != 5) return false;
      const Vertex x1 = x[0], x2 = x[1], x3 = x[2], y = x[3], z = x[4];
      return t.adjacent(x1, x2) && t.adjacent(x2, x3) && t.adjacent(x3, x1) && t.adjacent(x1, y) &&
             t.adjacent(x2, z) && t.antiadjacent(y, x2) && t.antiadjacent(y, x3) &&
             t.antiadjacent(z, x1) && t.antiadjacent(z, x3) && t.antiadjacent(y, z);
    }
    case PatternKind::triangle:
      return x.size() == 3 && t.adjacent(x[0], x[1]) && t.adjacent(x[1], x[2]) &&
             t.adjacent(x[0], x[2]);
    case PatternKind::hole: {
      const int len = static_cast<int>(x.size());
      if (len < 4 || len != w.hole_length) return false;
      for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
          const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
          if (consecutive ? !t.adjacent(x[i], x[j]) : !t.antiadjacent(x[i], x[j])) return false;
        }
      }
      return true;
    }
  }
  return false;
}

std::optional<PatternWitness> find_bull(const Trigraph& t) {
  const auto adj = adjacency_lists(t);
  for (Vertex x1 = 0; x1 < t.size(); ++x1) {
    for (Vertex x2 : adj[x1]) {
      if (x2 <= x1) continue;
      for (Vertex x3 : adj[x1]) {
        if (x3 == x2 || !t.adjacent(x2, x3)) continue;
        for (Vertex y : adj[x1]) {
          if (y == x2 || y == x3 || !t.antiadjacent(y, x2) || !t.antiadjacent(y, x3)) continue;
          for (Vertex z : adj[x2]) {
            if (z == x1 || z == x3 || z == y) continue;
            if (t.antiadjacent(z, x1) && t.antiadjacent(z, x3) && t.antiadjacent(z, y)) {
              return PatternWitness{PatternKind::bull, {x1, x2, x3, y, z}, 0};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_hole(const Trigraph& t, int length) {
  if (length < 4) throw UsageError("holes have length at least 4");
  require_graph(t, "hole search");
  if (length > t.size()) return std::nullopt;
  HoleSearch search(t, length);
  if (auto cycle = search.run()) return PatternWitness{PatternKind::hole, std::move(*cycle), length};
  return std::nullopt;
}

std::optional<int> girth(const Trigraph& g) {
  require_graph(g, "girth");
  const int n = g.size();
  const auto adj = adjacency_lists(g);
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<PatternWitness> find_triangle(const Trigraph& t) {
  const auto adj = adjacency_lists(t);
  for (Vertex a = 0; a < t.size(); ++a) {
    for (Vertex b : adj[a]) {
      if (b <= a) continue;
      for (Vertex c : adj[b]) {
        if (c > b && t.adjacent(a, c)) return PatternWitness{PatternKind::triangle, {a, b, c}, 0};
      }
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Trigraph& t) { return !find_triangle(t).has_value(); }

}  // namespace bullfree
