#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "bullfree/generators.hpp"
#include "bullfree/patterns.hpp"

namespace bullfree::oracle {
namespace {

bool independent_mask(const Trigraph& t, std::uint32_t mask) {
  for (int u = 0; u < t.size(); ++u) {
    if (!(mask >> u & 1)) continue;
    for (int v = u + 1; v < t.size(); ++v) {
      if ((mask >> v & 1) && t.at(u, v) == Adjacency::strong_edge) return false;
    }
  }
  return true;
}

// Bull on the 5 vertices of `s` under the 0/1 adjacency matrix `adj`,
// trying every role assignment.
bool graph_bull(const std::array<std::array<bool, 5>, 5>& adj) {
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  do {
    const int x1 = perm[0], x2 = perm[1], x3 = perm[2], y = perm[3], z = perm[4];
    const bool ok = adj[x1][x2] && adj[x2][x3] && adj[x3][x1] && adj[x1][y] && adj[x2][z] &&
                    !adj[x1][z] && !adj[x2][y] && !adj[x3][y] && !adj[x3][z] && !adj[y][z];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

Weight alpha_by_subsets(const Trigraph& t) {
  if (t.size() > 24) throw std::invalid_argument("alpha_by_subsets: n too large");
  Weight best = 0;
  for (std::uint32_t mask = 0; mask < (1u << t.size()); ++mask) {
    if (!independent_mask(t, mask)) continue;
    Weight w = 0;
    for (int v = 0; v < t.size(); ++v) {
      if (mask >> v & 1) w += t.weights()[v];
    }
    best = std::max(best, w);
  }
  return best;
}

long long count_maximal_by_subsets(const Trigraph& t) {
  if (t.size() > 20) throw std::invalid_argument("count_maximal_by_subsets: n too large");
  long long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << t.size()); ++mask) {
    if (!independent_mask(t, mask)) continue;
    bool maximal = true;
    for (int v = 0; v < t.size() && maximal; ++v) {
      if (!(mask >> v & 1) && independent_mask(t, mask | 1u << v)) maximal = false;
    }
    count += maximal;
  }
  return count;
}

bool has_bull_by_realizations(const Trigraph& t) {
  const int n = t.size();
  std::array<int, 5> s{};
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            std::vector<std::pair<int, int>> open;
            std::array<std::array<bool, 5>, 5> adj{};
            for (int i = 0; i < 5; ++i) {
              for (int j = i + 1; j < 5; ++j) {
                const Adjacency a = t.at(s[i], s[j]);
                if (a == Adjacency::switchable) open.emplace_back(i, j);
                adj[i][j] = adj[j][i] = a == Adjacency::strong_edge;
              }
            }
            for (std::uint32_t r = 0; r < (1u << open.size()); ++r) {
              for (std::size_t b = 0; b < open.size(); ++b) {
                const bool on = r >> b & 1;
                adj[open[b].first][open[b].second] = adj[open[b].second][open[b].first] = on;
              }
              if (graph_bull(adj)) return true;
            }
          }
  return false;
}

bool has_hole_by_subsets(const Trigraph& g, int length) {
  const int n = g.size();
  if (length > n) return false;
  std::vector<int> pick(length);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    bool cycle = true;
    for (int i = 0; i < length && cycle; ++i) {
      int deg = 0;
      for (int j = 0; j < length; ++j) {
        if (i != j && g.strongly_adjacent(pick[i], pick[j])) ++deg;
      }
      cycle = deg == 2;
    }
    if (cycle) {
      // 2-regular; connected iff walking from pick[0] visits all.
      std::vector<char> seen(length, 0);
      int cur = 0, prev = -1, visited = 0;
      do {
        seen[cur] = 1;
        ++visited;
        int next = -1;
        for (int j = 0; j < length; ++j) {
          if (j != cur && j != prev && g.strongly_adjacent(pick[cur], pick[j])) {
            next = j;
            break;
          }
        }
        prev = cur;
        cur = next;
      } while (cur >= 0 && !seen[cur]);
      if (visited == length) return true;
    }
    int i = length - 1;
    while (i >= 0 && pick[i] == n - length + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < length; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<bool> sat_by_enumeration(const CnfFormula& f) {
  std::vector<bool> a(f.num_vars + 1, false);
  for (std::uint64_t mask = 0; mask < (1ULL << f.num_vars); ++mask) {
    for (int v = 1; v <= f.num_vars; ++v) a[v] = mask >> (v - 1) & 1;
    bool all = true;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (Literal l : c) sat = sat || a[std::abs(l)] == (l > 0);
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return a;
  }
  return {};
}

bool homogeneous_by_scan(const Trigraph& t, std::uint32_t x_mask) {
  const int size = std::popcount(x_mask);
  if (size < 2 || size >= t.size()) return false;
  for (int v = 0; v < t.size(); ++v) {
    if (x_mask >> v & 1) continue;
    bool all_plus = true, all_minus = true;
    for (int x = 0; x < t.size(); ++x) {
      if (!(x_mask >> x & 1)) continue;
      all_plus = all_plus && t.at(v, x) == Adjacency::strong_edge;
      all_minus = all_minus && t.at(v, x) == Adjacency::strong_antiedge;
    }
    if (!all_plus && !all_minus) return false;
  }
  return true;
}

Trigraph random_triangle_free_trigraph(int n, double edge_p, double switch_p, Rng& rng) {
  Trigraph t(n);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<char> matched(n, 0);
  for (auto [u, v] : pairs) {
    const double r = unit(rng);
    Adjacency a = Adjacency::strong_antiedge;
    if (r < switch_p && !matched[u] && !matched[v]) {
      a = Adjacency::switchable;
    } else if (r < switch_p + edge_p) {
      a = Adjacency::strong_edge;
    }
    if (a == Adjacency::strong_antiedge) continue;
    bool triangle = false;
    for (int w = 0; w < n && !triangle; ++w) {
      triangle = w != u && w != v && t.adjacent(u, w) && t.adjacent(v, w);
    }
    if (triangle) continue;
    t.set(u, v, a);
    if (a == Adjacency::switchable) matched[u] = matched[v] = 1;
  }
  return t;
}

namespace {

// Replaces vertex `at` of `base` (no switchable pair on it) by `module`.
Trigraph substitute(const Trigraph& base, int at, const Trigraph& module) {
  const int n = base.size() - 1 + module.size();
  Trigraph out(n);
  auto place = [&](int v) { return v < at ? v : v - 1; };  // base ids other than `at`
  const int offset = base.size() - 1;
  for (int u = 0; u < base.size(); ++u) {
    if (u == at) continue;
    for (int v = u + 1; v < base.size(); ++v) {
      if (v != at) out.set(place(u), place(v), base.at(u, v));
    }
    for (int m = 0; m < module.size(); ++m) out.set(place(u), offset + m, base.at(u, at));
  }
  for (int a = 0; a < module.size(); ++a) {
    for (int b = a + 1; b < module.size(); ++b) out.set(offset + a, offset + b, module.at(a, b));
  }
  return out;
}

Trigraph basic_piece(int n, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Trigraph t = random_triangle_free_trigraph(n, 0.2 + 0.5 * unit(rng), 0.15 * unit(rng), rng);
  if (unit(rng) < 0.5) t = complement(t);
  return t;
}

}  // namespace

Trigraph random_bull_free(int n, Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  const int k = n <= 8 ? kind(rng) : kind(rng) % 3;
  if (k <= 1 || n < 4) return basic_piece(n, rng);
  if (k == 2) {
    std::uniform_int_distribution<int> split(2, n - 2);
    const int module_size = split(rng);
    Trigraph base = basic_piece(n - module_size + 1, rng);
    int at = -1;
    for (int v = 0; v < base.size() && at < 0; ++v) {
      if (base.switchable_partners(v).empty()) at = v;
    }
    if (at < 0) return basic_piece(n, rng);
    return substitute(base, at, basic_piece(module_size, rng));
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    PairDensities d;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    d.strong_edge = 0.2 + 0.6 * unit(rng);
    d.switchable = 0.15 * unit(rng);
    d.strong_antiedge = 1.0 - d.strong_edge - d.switchable;
    Trigraph t = gen_random_trigraph(n, d, true, rng());
    if (!find_bull(t)) return t;
  }
  return basic_piece(n, rng);
}

CnfFormula random_cnf(int max_vars, int max_clauses, Rng& rng) {
  std::uniform_int_distribution<int> vars(1, max_vars), clauses(1, max_clauses);
  CnfFormula f;
  f.num_vars = vars(rng);
  const int m = clauses(rng);
  std::uniform_int_distribution<int> var(1, f.num_vars), sign(0, 1);
  for (int j = 0; j < m; ++j) {
    Clause c{};
    for (auto& l : c) l = var(rng) * (sign(rng) ? 1 : -1);
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace bullfree::oracle
