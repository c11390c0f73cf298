#include "bullfree/generators.hpp"

#include <cmath>
#include <deque>
#include <random>

#include "bullfree/errors.hpp"

namespace bullfree {
namespace {

// Library-independent draws so a seed means the same instance everywhere.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

bool within(const std::vector<VertexList>& adj, Vertex from, Vertex to, int limit) {
  if (from == to) return true;
  std::vector<int> dist(adj.size(), -1);
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] == limit) continue;
    for (Vertex w : adj[u]) {
      if (dist[w] >= 0) continue;
      if (w == to) return true;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return false;
}

}  // namespace

Trigraph gen_random_trigraph(int n, const PairDensities& p, bool monogamous, std::uint64_t seed) {
  if (n < 0) throw UsageError("vertex count must be non-negative");
  if (p.strong_edge < 0 || p.switchable < 0 || p.strong_antiedge < 0 ||
      std::abs(p.strong_edge + p.switchable + p.strong_antiedge - 1.0) > 1e-9) {
    throw UsageError("pair densities must be non-negative and sum to 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[below(rng, i)]);

  Trigraph t(n);
  std::vector<char> matched(n, 0);
  const double decided = p.strong_edge + p.strong_antiedge;
  for (auto [u, v] : pairs) {
    const double r = unit(rng);
    Adjacency value = Adjacency::strong_antiedge;
    if (r < p.strong_edge) {
      value = Adjacency::strong_edge;
    } else if (r < p.strong_edge + p.switchable) {
      if (monogamous && (matched[u] || matched[v])) {
        value = decided > 0 && unit(rng) * decided < p.strong_edge ? Adjacency::strong_edge
                                                                   : Adjacency::strong_antiedge;
      } else {
        value = Adjacency::switchable;
        matched[u] = matched[v] = 1;
      }
    }
    t.set(u, v, value);
  }
  return t;
}

Trigraph gen_high_girth(int n, int target_girth, std::uint64_t seed, int proposals) {
  if (n < 0) throw UsageError("vertex count must be non-negative");
  if (target_girth < 4) throw UsageError("target girth must be at least 4");
  if (proposals < 0) proposals = 2 * n * n;
  std::mt19937_64 rng(seed);
  Trigraph g(n);
  if (n < 2) return g;
  std::vector<VertexList> adj(n);
  for (int i = 0; i < proposals; ++i) {
    const auto u = static_cast<Vertex>(below(rng, n));
    const auto v = static_cast<Vertex>(below(rng, n));
    if (u == v || g.strongly_adjacent(u, v)) continue;
    // Adding uv closes a cycle of length dist(u, v) + 1.
    if (within(adj, u, v, target_girth - 2)) continue;
    g.set_edge(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return g;
}

}  // namespace bullfree
