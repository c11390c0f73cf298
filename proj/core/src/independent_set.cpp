#include "bullfree/independent_set.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "bitset.hpp"
#include "bullfree/capacity.hpp"
#include "bullfree/errors.hpp"

namespace bullfree {
namespace {

using detail::Bitset;

std::vector<Bitset> conflict_masks(const Trigraph& t) {
  std::vector<Bitset> masks(t.size(), Bitset(t.size()));
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex v = u + 1; v < t.size(); ++v) {
      if (t.strongly_adjacent(u, v)) {
        masks[u].set(v);
        masks[v].set(u);
      }
    }
  }
  return masks;
}

struct Partial {
  Weight weight = 0;
  VertexList vertices;
};

class BranchAndBound {
 public:
  explicit BranchAndBound(const Trigraph& t)
      : weights_(t.weights()), conflicts_(conflict_masks(t)) {}

  IndependentSetResult run(int n) {
    Bitset all(n);
    all.fill();
    auto best = solve(all, -1);
    if (!best) throw InternalError("branch and bound lost the optimum");
    std::sort(best->vertices.begin(), best->vertices.end());
    return {std::move(best->vertices), best->weight};
  }

 private:
  Weight weight_of(const Bitset& set) const {
    Weight w = 0;
    set.for_each([&](int v) { w += weights_[v]; });
    return w;
  }

  // Sum over a greedy clique cover of the heaviest member of each clique.
  Weight clique_cover_bound(const Bitset& set) const {
    std::vector<int> order;
    set.for_each([&](int v) { order.push_back(v); });
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights_[a] > weights_[b]; });
    std::vector<Bitset> cliques;
    Weight bound = 0;
    for (int v : order) {
      bool placed = false;
      for (auto& clique : cliques) {
        if (clique.subset_of(conflicts_[v])) {
          clique.set(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        cliques.emplace_back(set.size());
        cliques.back().set(v);
        bound += weights_[v];  // heaviest first, so the opener is the max
      }
    }
    return bound;
  }

  // Exact optimum of `set` when it exceeds `floor`; nullopt otherwise.
  std::optional<Partial> solve(Bitset set, Weight floor) {
    Partial taken;
    reduce(set, taken);
    if (set.none()) {
      if (taken.weight > floor) return taken;
      return std::nullopt;
    }
    const Weight rest_floor = floor - taken.weight;
    if (weight_of(set) <= rest_floor || clique_cover_bound(set) <= rest_floor) return std::nullopt;

    auto components = split(set);
    std::optional<Partial> rest;
    if (components.size() > 1) {
      rest = solve_components(components, rest_floor);
    } else {
      rest = branch(set, rest_floor);
    }
    if (!rest) return std::nullopt;
    taken.weight += rest->weight;
    taken.vertices.insert(taken.vertices.end(), rest->vertices.begin(), rest->vertices.end());
    return taken;
  }

  // Takes isolated vertices and vertices at least as heavy as their whole
  // remaining neighbourhood; both are always part of some optimum.
  void reduce(Bitset& set, Partial& taken) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = set.first(); v >= 0; v = set.next(v + 1)) {
        const Bitset nbrs = set & conflicts_[v];
        if (weights_[v] >= weight_of(nbrs)) {
          taken.weight += weights_[v];
          taken.vertices.push_back(v);
          set.reset(v);
          set.subtract(nbrs);
          changed = true;
        }
      }
    }
  }

  std::vector<Bitset> split(const Bitset& set) const {
    std::vector<Bitset> components;
    Bitset left = set;
    while (left.any()) {
      Bitset comp(set.size());
      Bitset frontier(set.size());
      frontier.set(left.first());
      while (frontier.any()) {
        comp |= frontier;
        left.subtract(frontier);
        Bitset next(set.size());
        frontier.for_each([&](int v) { next |= conflicts_[v]; });
        next &= left;
        frontier = next;
      }
      components.push_back(std::move(comp));
    }
    return components;
  }

  std::optional<Partial> solve_components(const std::vector<Bitset>& components, Weight floor) {
    std::vector<Weight> bound(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) bound[i] = clique_cover_bound(components[i]);
    Weight pending = std::accumulate(bound.begin(), bound.end(), Weight{0});
    if (pending <= floor) return std::nullopt;
    Partial total;
    for (std::size_t i = 0; i < components.size(); ++i) {
      pending -= bound[i];
      // Best case for the other components is their bound (or exact value).
      auto part = solve(components[i], floor - total.weight - pending);
      if (!part) return std::nullopt;
      total.weight += part->weight;
      total.vertices.insert(total.vertices.end(), part->vertices.begin(), part->vertices.end());
    }
    if (total.weight > floor) return total;
    return std::nullopt;
  }

  std::optional<Partial> branch(const Bitset& set, Weight floor) {
    int pivot = -1;
    int pivot_degree = -1;
    set.for_each([&](int v) {
      const int degree = set.count_and(conflicts_[v]);
      if (degree > pivot_degree) {
        pivot = v;
        pivot_degree = degree;
      }
    });

    std::optional<Partial> best;
    Bitset with = minus(set, conflicts_[pivot]);
    with.reset(pivot);
    if (auto in = solve(with, floor - weights_[pivot])) {
      in->weight += weights_[pivot];
      in->vertices.push_back(pivot);
      floor = std::max(floor, in->weight);
      best = std::move(in);
    }
    Bitset without = set;
    without.reset(pivot);
    if (auto out = solve(without, floor)) best = std::move(out);
    return best;
  }

  const std::vector<Weight>& weights_;
  std::vector<Bitset> conflicts_;
};

class Enumerator {
 public:
  explicit Enumerator(const Trigraph& t) : t_(t), weights_(t.weights()) {}

  IndependentSetResult run() {
    extend(0);
    return {best_, best_weight_};
  }

 private:
  void extend(Vertex from) {
    if (current_weight_ > best_weight_ ||
        (current_weight_ == best_weight_ && current_ < best_)) {
      best_ = current_;
      best_weight_ = current_weight_;
    }
    for (Vertex v = from; v < t_.size(); ++v) {
      bool compatible = true;
      for (Vertex u : current_) {
        if (t_.strongly_adjacent(u, v)) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      current_.push_back(v);
      current_weight_ += weights_[v];
      extend(v + 1);
      current_weight_ -= weights_[v];
      current_.pop_back();
    }
  }

  const Trigraph& t_;
  const std::vector<Weight>& weights_;
  VertexList current_;
  Weight current_weight_ = 0;
  VertexList best_;
  Weight best_weight_ = 0;
};

class BronKerbosch {
 public:
  BronKerbosch(const Trigraph& t, long long cap) : n_(t.size()), cap_(cap), compatible_(n_, Bitset(n_)) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (u != v && t.antiadjacent(u, v)) compatible_[u].set(v);
      }
    }
  }

  MaximalSetEnumeration run() {
    Bitset p(n_);
    p.fill();
    VertexList r;
    expand(r, p, Bitset(n_));
    std::sort(out_.sets.begin(), out_.sets.end());
    return std::move(out_);
  }

 private:
  bool full() const { return static_cast<long long>(out_.sets.size()) > cap_; }

  void expand(VertexList& r, Bitset p, Bitset x) {
    if (full()) return;
    if (p.none() && x.none()) {
      VertexList set = r;
      std::sort(set.begin(), set.end());
      out_.sets.push_back(std::move(set));
      if (full()) out_.overflow = true;
      return;
    }
    int pivot = -1;
    int pivot_hits = -1;
    auto consider = [&](int u) {
      const int hits = p.count_and(compatible_[u]);
      if (hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    const Bitset candidates = minus(p, compatible_[pivot]);
    for (int v = candidates.first(); v >= 0; v = candidates.next(v + 1)) {
      r.push_back(v);
      expand(r, p & compatible_[v], x & compatible_[v]);
      r.pop_back();
      if (full()) return;
      p.reset(v);
      x.set(v);
    }
  }

  int n_;
  long long cap_;
  std::vector<Bitset> compatible_;
  MaximalSetEnumeration out_;
};

}  // namespace

bool is_valid_independent_set(const Trigraph& t, const IndependentSetResult& s) {
  for (Vertex v : s.vertices) {
    if (!t.in_range(v)) return false;
  }
  return is_independent(t, s.vertices) && total_weight(t, s.vertices) == s.total_weight;
}

IndependentSetResult alpha_exact(const Trigraph& t, AlphaStrategy strategy) {
  switch (strategy) {
    case AlphaStrategy::enumeration:
      require_capacity(static_cast<std::size_t>(t.size()), kEnumerationMaxN, "alpha (enumeration)");
      return Enumerator(t).run();
    case AlphaStrategy::branch_and_bound:
      require_capacity(static_cast<std::size_t>(t.size()), kBranchAndBoundMaxN,
                       "alpha (branch and bound)");
      if (t.size() == 0) return {};
      return BranchAndBound(t).run(t.size());
  }
  throw UsageError("unknown alpha strategy");
}

MaximalSetEnumeration enumerate_maximal_independent_sets(const Trigraph& t, long long cap) {
  if (cap < 0) throw UsageError("enumeration cap must be non-negative");
  if (t.size() == 0) return {{VertexList{}}, cap < 1};
  return BronKerbosch(t, cap).run();
}

}  // namespace bullfree
