#include "bullfree/high_girth.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "bullfree/errors.hpp"
#include "bullfree/patterns.hpp"

namespace bullfree {
namespace {

__extension__ using u128 = unsigned __int128;
constexpr u128 kU128Max = ~u128{0};

// base^exp, saturating at kU128Max.
u128 saturating_pow(u128 base, int exp) {
  u128 result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > kU128Max / base) return kU128Max;
    result *= base;
  }
  return result;
}

}  // namespace

long long high_girth_threshold(long long k, int p) {
  if (k < 1) throw UsageError("k must be at least 1");
  if (p < 2) throw UsageError("p must be at least 2");
  const u128 target = saturating_pow(static_cast<u128>(k), p);
  if (target == kU128Max) throw CapacityError("k^p exceeds 128 bits");
  // smallest x with x^(p-1) >= k^p
  const long double estimate = std::pow(static_cast<long double>(k),
                                        static_cast<long double>(p) / static_cast<long double>(p - 1));
  if (estimate > static_cast<long double>(std::numeric_limits<long long>::max() / 4)) {
    throw CapacityError("high-girth threshold exceeds 64 bits");
  }
  auto x = static_cast<long long>(std::ceil(estimate));
  while (x > 0 && saturating_pow(static_cast<u128>(x - 1), p - 1) >= target) --x;
  while (saturating_pow(static_cast<u128>(x), p - 1) < target) ++x;
  return 2 * k + x;
}

bool peel_qualifies(long long degree, long long k, int p) {
  if (degree <= 0) return true;
  return saturating_pow(static_cast<u128>(degree - 1), p - 1) < static_cast<u128>(k);
}

GreedyIndependentSet greedy_high_girth_is(const Trigraph& g, long long k, int p) {
  if (p < 2 || k < 2) throw UsageError("greedy high-girth extraction needs p, k >= 2");
  if (!g.is_graph()) throw UsageError("greedy high-girth extraction needs a graph");
  if (auto gg = girth(g); gg && *gg < 2 * p) {
    throw UsageError("graph has girth " + std::to_string(*gg) + " < 2p = " + std::to_string(2 * p));
  }

  const int n = g.size();
  GreedyIndependentSet out;
  out.below_threshold = n < high_girth_threshold(k, p);

  std::vector<VertexList> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::vector<char> alive(n, 1);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());

  auto remove = [&](Vertex v) {
    alive[v] = 0;
    for (Vertex w : adj[v]) {
      if (alive[w]) --degree[w];
    }
  };

  while (static_cast<long long>(out.peeled.size()) < k) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && peel_qualifies(degree[v], k, p) && (pick < 0 || degree[v] < degree[pick])) {
        pick = v;
      }
    }
    if (pick < 0) break;
    out.peeled.push_back(pick);
    const VertexList closed_nbrs = [&] {
      VertexList c{pick};
      for (Vertex w : adj[pick]) {
        if (alive[w]) c.push_back(w);
      }
      return c;
    }();
    for (Vertex w : closed_nbrs) {
      if (alive[w]) remove(w);
    }
  }

  VertexList chosen = out.peeled;
  Vertex root = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) {
      if (root < 0) root = v;
      out.residual_min_degree =
          root == v ? degree[v] : std::min(out.residual_min_degree, degree[v]);
    }
  }

  if (static_cast<long long>(chosen.size()) < k && root >= 0) {
    out.used_fallback = true;
    std::vector<int> dist(n, -1);
    dist[root] = 0;
    out.layers.assign(1, VertexList{root});
    for (int i = 1; i <= p - 1; ++i) {
      VertexList next;
      for (Vertex u : out.layers.back()) {
        for (Vertex w : adj[u]) {
          if (alive[w] && dist[w] < 0) {
            dist[w] = i;
            next.push_back(w);
          }
        }
      }
      out.layers.push_back(normalized(std::move(next)));
    }

    const int delta = out.residual_min_degree;
    for (int i = 1; i <= p - 1; ++i) {
      if (!is_independent(g, out.layers[i])) {
        throw InternalError("BFS layer N_" + std::to_string(i) + " is not independent");
      }
    }
    if (static_cast<int>(out.layers[1].size()) < delta) {
      throw InternalError("|N_1| is below the residual minimum degree");
    }
    for (int i = 1; i + 1 <= p - 1; ++i) {
      for (Vertex w : out.layers[i + 1]) {
        int back = 0;
        for (Vertex u : adj[w]) back += alive[u] && dist[u] == i;
        if (back != 1) {
          throw InternalError("a vertex of N_" + std::to_string(i + 1) + " has " +
                              std::to_string(back) + " neighbours in N_" + std::to_string(i));
        }
      }
      if (out.layers[i + 1].size() < out.layers[i].size() * static_cast<std::size_t>(delta - 1)) {
        throw InternalError("BFS layer N_" + std::to_string(i + 1) + " grew too slowly");
      }
    }
    chosen.insert(chosen.end(), out.layers[p - 1].begin(), out.layers[p - 1].end());
  }

  out.set.vertices = normalized(std::move(chosen));
  out.set.total_weight = total_weight(g, out.set.vertices);
  if (!is_independent(g, out.set.vertices)) throw InternalError("greedy set is not independent");
  if (!out.below_threshold && static_cast<long long>(out.set.vertices.size()) < k) {
    throw InternalError("greedy extraction returned fewer than k vertices above the threshold");
  }
  return out;
}

}  // namespace bullfree
