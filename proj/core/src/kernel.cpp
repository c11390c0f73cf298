#include "bullfree/kernel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bullfree/errors.hpp"
#include "bullfree/high_girth.hpp"
#include "bullfree/homogeneous.hpp"
#include "bullfree/patterns.hpp"

namespace bullfree {
namespace {

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("kernel bound overflows 64 bits");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("kernel bound overflows 64 bits");
  return r;
}

long long choose2(long long x) { return x % 2 == 0 ? checked_mul(x / 2, x - 1) : checked_mul(x, (x - 1) / 2); }

std::string join(const VertexList& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

// Trace of x along the clique: which positions of K it is adjacent to.
std::vector<char> trace(const Trigraph& t, Vertex x, const VertexList& clique) {
  std::vector<char> tr(clique.size());
  for (std::size_t i = 0; i < clique.size(); ++i) tr[i] = t.adjacent(x, clique[i]);
  return tr;
}

// A-side vertices need downward-closed traces (adjacent to v_{i+1} implies v_i).
bool prefix_closed(const std::vector<char>& tr) {
  for (std::size_t i = 1; i < tr.size(); ++i) {
    if (tr[i] && !tr[i - 1]) return false;
  }
  return true;
}

bool suffix_closed(const std::vector<char>& tr) {
  for (std::size_t i = 1; i < tr.size(); ++i) {
    if (tr[i - 1] && !tr[i]) return false;
  }
  return true;
}

// Looks for a split of `nbhd` into two independent sets A, B with
// prefix-closed traces in A and suffix-closed traces in B. Each connected
// component of T[nbhd] admits at most two 2-colourings.
bool search_bipartition(const Trigraph& t, const VertexList& nbhd,
                        const std::vector<std::vector<char>>& traces) {
  const std::size_t m = nbhd.size();
  std::vector<int> colour(m, -1);
  for (std::size_t s = 0; s < m; ++s) {
    if (colour[s] >= 0) continue;
    std::vector<std::size_t> comp{s};
    colour[s] = 0;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const std::size_t u = comp[head];
      for (std::size_t w = 0; w < m; ++w) {
        if (w == u || !t.adjacent(nbhd[u], nbhd[w])) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          comp.push_back(w);
        } else if (colour[w] == colour[u]) {
          return false;  // odd cycle of adjacent pairs
        }
      }
    }
    bool ok_as_is = true, ok_flipped = true;
    for (std::size_t u : comp) {
      const bool a_ok = prefix_closed(traces[u]);
      const bool b_ok = suffix_closed(traces[u]);
      ok_as_is = ok_as_is && (colour[u] == 0 ? a_ok : b_ok);
      ok_flipped = ok_flipped && (colour[u] == 0 ? b_ok : a_ok);
    }
    if (!ok_as_is && !ok_flipped) return false;
  }
  return true;
}

}  // namespace

KernelBounds kernel_bounds(long long k, std::optional<int> p) {
  if (k < 1) throw UsageError("k must be at least 1");
  if (p && *p < 3) throw UsageError("p must be at least 3");
  KernelBounds b;
  b.k = k;
  b.p = p;
  b.g = choose2(checked_add(k, 1)) - 1;
  b.f = checked_mul(5, b.g);
  const long long inner = checked_add(checked_add(choose2(b.g), checked_mul(2, b.g)), 1);
  b.f_old = checked_add(b.g, checked_mul(k - 1, inner));
  if (p) b.gp = high_girth_threshold(k, *p);
  return b;
}

std::string_view to_string(T1Check::Status status) {
  switch (status) {
    case T1Check::Status::pass: return "pass";
    case T1Check::Status::fail: return "fail";
    case T1Check::Status::skipped: return "skipped";
  }
  return "unknown";
}

bool T1Report::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const T1Check& c) { return c.status == T1Check::Status::fail; });
}

T1Check::Status T1Report::status(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c.status;
  }
  throw UsageError("no T1 check named " + std::string(name));
}

T1Report verify_t1(const Trigraph& t, const T1Structure& s) {
  const int n = t.size();
  std::vector<int> owner(n, -2);  // -1 for X, i for clique i
  auto claim = [&](Vertex v, int who) {
    if (!t.in_range(v)) throw UsageError("T1 structure: vertex " + std::to_string(v) + " out of range");
    if (owner[v] != -2) throw UsageError("T1 structure: vertex " + std::to_string(v) + " listed twice");
    owner[v] = who;
  };
  for (Vertex v : s.x) claim(v, -1);
  for (std::size_t i = 0; i < s.cliques.size(); ++i) {
    if (s.cliques[i].empty()) throw UsageError("T1 structure: empty clique");
    for (Vertex v : s.cliques[i]) claim(v, static_cast<int>(i));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] == -2) throw UsageError("T1 structure: vertex " + std::to_string(v) + " not covered");
  }
  if (!s.a_sides.empty() && s.a_sides.size() != s.cliques.size()) {
    throw UsageError("T1 structure: a_sides must be empty or have one entry per clique");
  }

  T1Report report;
  auto add = [&](std::string_view name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::string(name), ok ? T1Check::Status::pass : T1Check::Status::fail,
                             ok ? std::string() : std::move(detail)});
  };

  add(kT1Monogamous, t.is_monogamous(), "a vertex lies in two switchable pairs");

  const auto x_part = induced(t, s.x);
  auto tri = find_triangle(x_part.trigraph);
  add(kT1TriangleFreeX, !tri,
      tri ? "triangle " + join({x_part.origin[tri->vertices[0]], x_part.origin[tri->vertices[1]],
                                x_part.origin[tri->vertices[2]]})
          : "");

  {
    std::string bad;
    for (const auto& k : s.cliques) {
      for (std::size_t i = 0; i < k.size() && bad.empty(); ++i) {
        for (std::size_t j = i + 1; j < k.size(); ++j) {
          if (!t.strongly_adjacent(k[i], k[j])) {
            bad = "clique " + join(k) + " is not strong";
            break;
          }
        }
      }
    }
    add(kT1StrongCliques, bad.empty(), bad);
  }

  {
    std::string bad;
    for (std::size_t i = 0; i < s.cliques.size() && bad.empty(); ++i) {
      for (std::size_t j = i + 1; j < s.cliques.size(); ++j) {
        if (!strongly_anticomplete(t, s.cliques[i], s.cliques[j])) {
          bad = "cliques " + join(s.cliques[i]) + " and " + join(s.cliques[j]) + " are not anticomplete";
          break;
        }
      }
    }
    add(kT1CliquesAnticomplete, bad.empty(), bad);
  }

  // N(K_i): vertices of X adjacent to at least one vertex of K_i.
  std::vector<VertexList> nbhd(s.cliques.size());
  for (std::size_t i = 0; i < s.cliques.size(); ++i) {
    for (Vertex x : s.x) {
      if (std::any_of(s.cliques[i].begin(), s.cliques[i].end(),
                      [&](Vertex v) { return t.adjacent(x, v); })) {
        nbhd[i].push_back(x);
      }
    }
    std::sort(nbhd[i].begin(), nbhd[i].end());
  }

  {
    std::string bad;
    for (Vertex x : s.x) {
      int touched = 0;
      for (const auto& nk : nbhd) touched += std::binary_search(nk.begin(), nk.end(), x);
      if (touched > 2) {
        bad = "vertex " + std::to_string(x) + " has neighbours in " + std::to_string(touched) + " cliques";
        break;
      }
    }
    add(kT1TwoCliqueNeighbors, bad.empty(), bad);
  }

  {
    std::string bad;
    for (std::size_t i = 0; i < s.cliques.size() && bad.empty(); ++i) {
      const auto& k = s.cliques[i];
      std::vector<std::vector<char>> traces;
      for (Vertex x : nbhd[i]) traces.push_back(trace(t, x, k));
      const bool given = !s.a_sides.empty() && s.a_sides[i].has_value();
      if (!given) {
        if (!search_bipartition(t, nbhd[i], traces)) {
          bad = "no nested bipartition of N(" + join(k) + ")";
        }
        continue;
      }
      const VertexList a = normalized(*s.a_sides[i]);
      for (Vertex v : a) {
        if (!std::binary_search(nbhd[i].begin(), nbhd[i].end(), v)) {
          throw UsageError("T1 structure: A side vertex " + std::to_string(v) + " is not in N(K)");
        }
      }
      VertexList b;
      std::set_difference(nbhd[i].begin(), nbhd[i].end(), a.begin(), a.end(), std::back_inserter(b));
      if (!is_independent(t, a) || !is_independent(t, b)) {
        bad = "N(" + join(k) + ") split " + join(a) + " / " + join(b) + " is not bipartite";
        continue;
      }
      for (std::size_t j = 0; j < nbhd[i].size(); ++j) {
        const bool in_a = std::binary_search(a.begin(), a.end(), nbhd[i][j]);
        if (in_a ? !prefix_closed(traces[j]) : !suffix_closed(traces[j])) {
          bad = "vertex " + std::to_string(nbhd[i][j]) + " breaks the nested " +
                (in_a ? "A" : "B") + "-traces of clique " + join(k);
          break;
        }
      }
    }
    add(kT1NestedTraces, bad.empty(), bad);
  }

  if (find_minimally_sided_homogeneous_set(t)) {
    report.checks.push_back({std::string(kT1CliqueVsNeighborhood), T1Check::Status::skipped,
                             "trigraph has a homogeneous set"});
  } else {
    std::string bad;
    for (std::size_t i = 0; i < s.cliques.size(); ++i) {
      if (s.cliques[i].size() > 2 * nbhd[i].size()) {
        bad = "|K| = " + std::to_string(s.cliques[i].size()) + " > 2|N(K)| = " +
              std::to_string(2 * nbhd[i].size()) + " for " + join(s.cliques[i]);
        break;
      }
    }
    add(kT1CliqueVsNeighborhood, bad.empty(), bad);
  }

  std::size_t sum = 0;
  for (const auto& nk : nbhd) sum += nk.size();
  add(kT1NeighborhoodSum, sum <= 2 * s.x.size(),
      "sum |N(K_i)| = " + std::to_string(sum) + " > 2|X| = " + std::to_string(2 * s.x.size()));
  add(kT1VertexBound, static_cast<std::size_t>(n) <= 5 * s.x.size(),
      "n = " + std::to_string(n) + " > 5|X| = " + std::to_string(5 * s.x.size()));
  return report;
}

}  // namespace bullfree
