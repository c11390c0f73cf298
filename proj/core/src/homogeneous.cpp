#include "bullfree/homogeneous.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>
#include <tuple>

#include "bullfree/errors.hpp"
#include "parallel.hpp"

namespace bullfree {
namespace {

// Calls fn(chosen) for every k-subset of pool in lexicographic order; stops
// as soon as fn returns true.
bool for_each_combination(const VertexList& pool, int k,
                          const std::function<bool(const VertexList&)>& fn) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  VertexList chosen(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (fn(chosen)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool uniform_on(const Trigraph& t, Vertex v, std::span<const Vertex> set) {
  return attachment_of(t, v, set) != Attachment::mixed;
}

// One sweep of the small-pair search: `fixed` is the fully guessed side,
// `grown` starts with the partial guess and must reach `target` vertices.
std::optional<HomogeneousPair> sweep(const Trigraph& t, const VertexList& fixed, VertexList grown,
                                     int target, bool fixed_is_a) {
  VertexList taken = fixed;
  taken.insert(taken.end(), grown.begin(), grown.end());
  const VertexList rest = complement_of(t.size(), taken);
  for (Vertex v : rest) {
    if (static_cast<int>(grown.size()) == target) break;
    if (!uniform_on(t, v, fixed) || !uniform_on(t, v, grown)) grown.push_back(v);
  }
  if (static_cast<int>(grown.size()) != target) return std::nullopt;

  taken = fixed;
  taken.insert(taken.end(), grown.begin(), grown.end());
  for (Vertex v : complement_of(t.size(), taken)) {
    if (!uniform_on(t, v, fixed) || !uniform_on(t, v, grown)) return std::nullopt;
  }
  return fixed_is_a ? make_homogeneous_pair(t, fixed, std::move(grown))
                    : make_homogeneous_pair(t, std::move(grown), fixed);
}

auto pair_key(const HomogeneousPair& p) { return std::make_tuple(p.side_size(), p.side(), p.a); }

}  // namespace

VertexList HomogeneousPair::side() const {
  VertexList s = a;
  s.insert(s.end(), b.begin(), b.end());
  std::sort(s.begin(), s.end());
  return s;
}

bool is_homogeneous_set(const Trigraph& t, std::span<const Vertex> x) {
  const VertexList members = normalized(VertexList(x.begin(), x.end()));
  if (members.size() != x.size()) return false;
  for (Vertex v : members) {
    if (!t.in_range(v)) return false;
  }
  if (members.size() < 2 || static_cast<int>(members.size()) >= t.size()) return false;
  for (Vertex v : complement_of(t.size(), members)) {
    if (!uniform_on(t, v, members)) return false;
  }
  return true;
}

std::optional<HomogeneousPair> make_homogeneous_pair(const Trigraph& t, VertexList a,
                                                     VertexList b) {
  a = normalized(std::move(a));
  b = normalized(std::move(b));
  if (a.empty() || b.empty()) throw UsageError("homogeneous pair sides must be non-empty");
  for (const auto* side : {&a, &b}) {
    for (Vertex v : *side) {
      if (!t.in_range(v)) throw UsageError("homogeneous pair vertex out of range");
    }
  }
  VertexList both = a;
  both.insert(both.end(), b.begin(), b.end());
  if (normalized(both).size() != both.size()) throw UsageError("homogeneous pair sides overlap");

  if (a.size() + b.size() < 3) return std::nullopt;
  if (t.size() - static_cast<int>(a.size() + b.size()) < 3) return std::nullopt;

  HomogeneousPair pair;
  for (Vertex v : complement_of(t.size(), both)) {
    const Attachment to_a = attachment_of(t, v, a);
    const Attachment to_b = attachment_of(t, v, b);
    if (to_a == Attachment::mixed || to_b == Attachment::mixed) return std::nullopt;
    const bool sees_a = to_a == Attachment::strongly_complete;
    const bool sees_b = to_b == Attachment::strongly_complete;
    (sees_a ? (sees_b ? pair.e : pair.c) : (sees_b ? pair.d : pair.f)).push_back(v);
  }
  if (strongly_complete(t, a, b) || strongly_anticomplete(t, a, b)) return std::nullopt;
  pair.a = std::move(a);
  pair.b = std::move(b);
  return pair;
}

bool is_valid_homogeneous_pair(const Trigraph& t, const HomogeneousPair& p) {
  VertexList all;
  for (const auto* part : {&p.a, &p.b, &p.c, &p.d, &p.e, &p.f}) {
    if (!std::is_sorted(part->begin(), part->end())) return false;
    all.insert(all.end(), part->begin(), part->end());
  }
  if (static_cast<int>(all.size()) != t.size()) return false;
  std::sort(all.begin(), all.end());
  for (int i = 0; i < t.size(); ++i) {
    if (all[i] != i) return false;
  }
  if (p.a.empty() || p.b.empty()) return false;
  if (p.a.size() + p.b.size() < 3) return false;
  if (p.c.size() + p.d.size() + p.e.size() + p.f.size() < 3) return false;
  auto join = [](const VertexList& x, const VertexList& y) {
    VertexList z = x;
    z.insert(z.end(), y.begin(), y.end());
    return z;
  };
  return strongly_complete(t, p.a, join(p.c, p.e)) && strongly_anticomplete(t, p.a, join(p.d, p.f)) &&
         strongly_complete(t, p.b, join(p.d, p.e)) && strongly_anticomplete(t, p.b, join(p.c, p.f)) &&
         !strongly_complete(t, p.a, p.b) && !strongly_anticomplete(t, p.a, p.b);
}

std::optional<HomogeneousSet> minimal_homogeneous_set_containing(const Trigraph& t, Vertex u,
                                                                 Vertex v) {
  if (!t.in_range(u) || !t.in_range(v)) throw UsageError("seed vertex out of range");
  if (u == v) throw UsageError("seed vertices must be distinct");
  const int n = t.size();
  std::vector<char> inside(n, 0);
  std::vector<int> strong(n, 0), anti(n, 0);
  int size = 0;
  std::vector<Vertex> pending{u, v};
  auto absorb = [&](Vertex x) {
    inside[x] = 1;
    ++size;
    for (Vertex y = 0; y < n; ++y) {
      if (y == x) continue;
      if (t.strongly_adjacent(x, y)) ++strong[y];
      if (t.strongly_antiadjacent(x, y)) ++anti[y];
    }
  };
  absorb(u);
  absorb(v);
  bool grew = true;
  while (grew && size < n) {
    grew = false;
    for (Vertex y = 0; y < n; ++y) {
      if (!inside[y] && strong[y] != size && anti[y] != size) {
        absorb(y);
        grew = true;
      }
    }
  }
  if (size >= n) return std::nullopt;
  HomogeneousSet out;
  for (Vertex y = 0; y < n; ++y) {
    if (inside[y]) out.members.push_back(y);
  }
  return out;
}

std::optional<HomogeneousSet> find_minimally_sided_homogeneous_set(const Trigraph& t, int threads) {
  const int n = t.size();
  auto better = [](const HomogeneousSet& x, const HomogeneousSet& y) {
    return std::make_pair(x.members.size(), std::cref(x.members)) <
           std::make_pair(y.members.size(), std::cref(y.members));
  };
  return detail::parallel_best<HomogeneousSet>(
      n, threads,
      [&](int u) {
        std::optional<HomogeneousSet> best;
        for (Vertex v = u + 1; v < n; ++v) {
          auto x = minimal_homogeneous_set_containing(t, u, v);
          if (x && (!best || better(*x, *best))) best = std::move(x);
        }
        return best;
      },
      better);
}

std::optional<HomogeneousPair> find_small_pair_ij(const Trigraph& t, int i, int j) {
  if (j < 1 || j > i || i + j < 3 || i + j > 6) {
    throw UsageError("small pair sizes need 1 <= j <= i and 3 <= i + j <= 6, got (" +
                     std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  const VertexList all = complement_of(t.size(), {});
  std::optional<HomogeneousPair> found;

  // Guess A entirely and j-1 vertices of B, then complete B.
  for_each_combination(all, i, [&](const VertexList& a) {
    const VertexList pool = complement_of(t.size(), a);
    return for_each_combination(pool, j - 1, [&](const VertexList& partial_b) {
      found = sweep(t, a, partial_b, j, /*fixed_is_a=*/true);
      return found.has_value();
    });
  });
  if (found || i == j) return found;

  // Role-exchanged sweep: guess B entirely and i-1 vertices of A.
  for_each_combination(all, j, [&](const VertexList& b) {
    const VertexList pool = complement_of(t.size(), b);
    return for_each_combination(pool, i - 1, [&](const VertexList& partial_a) {
      found = sweep(t, b, partial_a, i, /*fixed_is_a=*/false);
      return found.has_value();
    });
  });
  return found;
}

std::optional<HomogeneousPair> find_small_homogeneous_pair(const Trigraph& t) {
  for (auto [i, j] : kSmallPairSizes) {
    if (auto pair = find_small_pair_ij(t, i, j)) return pair;
  }
  return std::nullopt;
}

std::string_view to_string(PropertyP::Reason reason) {
  switch (reason) {
    case PropertyP::Reason::epsilon_reached: return "epsilon-vertex-reached";
    case PropertyP::Reason::b_empty: return "b-empty";
    case PropertyP::Reason::uniform_attachment: return "uniform-attachment";
    case PropertyP::Reason::small_remainder: return "small-remainder";
  }
  return "unknown";
}

ProperPairGrowth grow_proper_pair(const Trigraph& t, Vertex a1, Vertex a2, Vertex c, Vertex d) {
  for (Vertex v : {a1, a2, c, d}) {
    if (!t.in_range(v)) throw UsageError("quadruple vertex out of range");
  }
  if (normalized({a1, a2, c, d}).size() != 4) throw UsageError("quadruple vertices must be distinct");
  if (!t.strongly_adjacent(a1, c) || !t.strongly_adjacent(a2, c) ||
      !t.strongly_antiadjacent(a1, d) || !t.strongly_antiadjacent(a2, d)) {
    throw UsageError("a1 and a2 must be strongly adjacent to c and strongly antiadjacent to d");
  }

  const int n = t.size();
  enum class Mark { alpha, beta, epsilon };
  enum class Place { s, r, a, b };
  std::vector<Mark> mark(n, Mark::epsilon);
  for (Vertex v = 0; v < n; ++v) {
    if (v == c || v == d) continue;
    if (t.strongly_adjacent(v, c) && t.strongly_antiadjacent(v, d)) mark[v] = Mark::alpha;
    if (t.strongly_adjacent(v, d) && t.strongly_antiadjacent(v, c)) mark[v] = Mark::beta;
  }

  std::vector<Place> place(n, Place::s);
  std::deque<Vertex> r{a1, a2};
  place[a1] = place[a2] = Place::r;
  int s_size = n - 2;
  VertexList a, b;
  Vertex b_rep = -1;

  auto to_r = [&](Vertex y) {
    place[y] = Place::r;
    r.push_back(y);
    --s_size;
  };
  // Moves every y in S that is semiadjacent to x or separates x from rep
  // (strongly adjacent to exactly one of them).
  auto pull_distinguishing = [&](Vertex x, Vertex rep) {
    for (Vertex y = 0; y < n; ++y) {
      if (place[y] != Place::s) continue;
      const bool semi = t.semiadjacent(x, y);
      const bool split = rep >= 0 && rep != y && t.strongly_adjacent(x, y) != t.strongly_adjacent(rep, y);
      if (semi || split) to_r(y);
    }
  };

  while (!r.empty()) {
    const Vertex x = r.front();
    r.pop_front();
    switch (mark[x]) {
      case Mark::epsilon:
        return PropertyP{PropertyP::Reason::epsilon_reached};
      case Mark::alpha:
        pull_distinguishing(x, x == a1 ? -1 : a1);
        place[x] = Place::a;
        a.push_back(x);
        break;
      case Mark::beta:
        if (b.empty()) {
          b_rep = x;
          pull_distinguishing(x, -1);
        } else {
          pull_distinguishing(x, b_rep);
        }
        place[x] = Place::b;
        b.push_back(x);
        break;
    }
  }

  if (b.empty()) return PropertyP{PropertyP::Reason::b_empty};
  if (strongly_complete(t, a, b) || strongly_anticomplete(t, a, b)) {
    return PropertyP{PropertyP::Reason::uniform_attachment};
  }
  if (s_size < 3) return PropertyP{PropertyP::Reason::small_remainder};

  auto pair = make_homogeneous_pair(t, a, b);
  if (!pair || !pair->proper()) {
    throw InternalError("proper pair growth produced an invalid pair");
  }
  return *pair;
}

std::optional<HomogeneousPair> find_minimally_sided_proper_pair(const Trigraph& t, int threads) {
  const int n = t.size();
  auto better = [](const HomogeneousPair& x, const HomogeneousPair& y) {
    return pair_key(x) < pair_key(y);
  };
  return detail::parallel_best<HomogeneousPair>(
      n, threads,
      [&](int a1) {
        std::optional<HomogeneousPair> best;
        for (Vertex a2 = a1 + 1; a2 < n; ++a2) {
          for (Vertex c = 0; c < n; ++c) {
            if (c == a1 || c == a2 || !t.strongly_adjacent(a1, c) || !t.strongly_adjacent(a2, c)) {
              continue;
            }
            for (Vertex d = 0; d < n; ++d) {
              if (d == a1 || d == a2 || d == c || !t.strongly_antiadjacent(a1, d) ||
                  !t.strongly_antiadjacent(a2, d)) {
                continue;
              }
              auto grown = grow_proper_pair(t, a1, a2, c, d);
              if (auto* pair = std::get_if<HomogeneousPair>(&grown)) {
                if (!best || better(*pair, *best)) best = std::move(*pair);
              }
            }
          }
        }
        return best;
      },
      better);
}

std::string_view to_string(DecompositionOutcome::Tag tag) {
  switch (tag) {
    case DecompositionOutcome::Tag::small_pair: return "small-pair";
    case DecompositionOutcome::Tag::minimally_sided_cut: return "minimally-sided-cut";
    case DecompositionOutcome::Tag::none: return "none";
  }
  return "unknown";
}

DecompositionOutcome find_decomposition(const Trigraph& t, int threads) {
  DecompositionOutcome out;
  if (auto small = find_small_homogeneous_pair(t)) {
    out.tag = DecompositionOutcome::Tag::small_pair;
    out.side = small->side();
    out.pair = std::move(small);
    return out;
  }
  auto set = find_minimally_sided_homogeneous_set(t, threads);
  auto proper = find_minimally_sided_proper_pair(t, threads);
  if (set && (!proper || set->members.size() <= static_cast<std::size_t>(proper->side_size()))) {
    out.tag = DecompositionOutcome::Tag::minimally_sided_cut;
    out.side = set->members;
    out.set = std::move(set);
  } else if (proper) {
    out.tag = DecompositionOutcome::Tag::minimally_sided_cut;
    out.side = proper->side();
    out.pair = std::move(proper);
  }
  return out;
}

std::vector<HomogeneousPair> brute_force_pairs(const Trigraph& t, std::optional<int> max_side) {
  const int n = t.size();
  std::vector<HomogeneousPair> out;
  std::vector<int> label(n, 0);  // 0 outside, 1 in A, 2 in B
  while (true) {
    VertexList a, b;
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] == 1) a.push_back(v);
      if (label[v] == 2) b.push_back(v);
    }
    const int side = static_cast<int>(a.size() + b.size());
    if (!a.empty() && !b.empty() && side >= 3 && n - side >= 3 && (!max_side || side <= *max_side)) {
      if (auto pair = make_homogeneous_pair(t, std::move(a), std::move(b))) {
        out.push_back(std::move(*pair));
      }
    }
    int pos = 0;
    while (pos < n && label[pos] == 2) label[pos++] = 0;
    if (pos == n) break;
    ++label[pos];
  }
  return out;
}

std::vector<HomogeneousSet> brute_force_homogeneous_sets(const Trigraph& t) {
  const int n = t.size();
  std::vector<HomogeneousSet> out;
  if (n >= 31) throw CapacityError("homogeneous set enumeration limited to n <= 30");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexList x;
    for (Vertex v = 0; v < n; ++v) {
      if (mask & (1u << v)) x.push_back(v);
    }
    if (is_homogeneous_set(t, x)) out.push_back(HomogeneousSet{std::move(x)});
  }
  return out;
}

}  // namespace bullfree
