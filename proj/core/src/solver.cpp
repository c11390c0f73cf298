#include "bullfree/solver.hpp"

#include <algorithm>

#include "bullfree/errors.hpp"
#include "bullfree/homogeneous.hpp"
#include "bullfree/patterns.hpp"

namespace bullfree {
namespace {

// Each vertex of the working trigraph stands for an original vertex or for
// a contracted set; `chosen[v]` is the best independent set behind v.
struct Working {
  Trigraph t;
  std::vector<VertexList> chosen;
};

IndependentSetResult solve_exact(const Trigraph& t, int threads, int& contractions) {
  Working w{t, {}};
  w.chosen.resize(t.size());
  for (Vertex v = 0; v < t.size(); ++v) w.chosen[v] = {v};

  while (w.t.size() > 2) {
    auto x = find_minimally_sided_homogeneous_set(w.t, threads);
    if (!x) break;
    ++contractions;
    const VertexList& members = x->members;
    const auto inner = induced(w.t, members);
    const IndependentSetResult best = solve_exact(inner.trigraph, threads, contractions);

    VertexList merged;
    for (Vertex local : best.vertices) {
      const auto& part = w.chosen[inner.origin[local]];
      merged.insert(merged.end(), part.begin(), part.end());
    }

    // The contracted vertex takes the place of the smallest member; the
    // rest are dropped and the survivors renumbered in order.
    const Vertex keep = members.front();
    VertexList survivors;
    for (Vertex v = 0; v < w.t.size(); ++v) {
      if (v == keep || !std::binary_search(members.begin(), members.end(), v)) survivors.push_back(v);
    }
    Working next;
    next.t = Trigraph(static_cast<int>(survivors.size()));
    next.chosen.resize(survivors.size());
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      const Vertex u = survivors[i];
      if (u == keep) {
        next.t.set_weight(static_cast<Vertex>(i), best.total_weight);
        next.chosen[i] = merged;
      } else {
        next.t.set_weight(static_cast<Vertex>(i), w.t.weights()[u]);
        next.chosen[i] = std::move(w.chosen[u]);
      }
      for (std::size_t j = i + 1; j < survivors.size(); ++j) {
        const Vertex v = survivors[j];
        Adjacency a;
        if (u == keep || v == keep) {
          const Vertex outside = u == keep ? v : u;
          a = attachment_of(w.t, outside, members) == Attachment::strongly_complete
                  ? Adjacency::strong_edge
                  : Adjacency::strong_antiedge;
        } else {
          a = w.t.at(u, v);
        }
        next.t.set(static_cast<Vertex>(i), static_cast<Vertex>(j), a);
      }
    }
    w = std::move(next);
  }

  const IndependentSetResult finish = alpha_exact(w.t);
  IndependentSetResult out;
  out.total_weight = finish.total_weight;
  for (Vertex v : finish.vertices) {
    out.vertices.insert(out.vertices.end(), w.chosen[v].begin(), w.chosen[v].end());
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

}  // namespace

WisDecision solve_wis(const Trigraph& t, Weight k, int threads) {
  if (!t.is_monogamous()) throw UsageError("solve_wis: trigraph is not monogamous");
  if (auto bull = find_bull(t)) {
    std::string ids;
    for (Vertex v : bull->vertices) ids += (ids.empty() ? "" : " ") + std::to_string(v);
    throw UsageError("solve_wis: trigraph contains a bull (" + ids + ")");
  }
  WisDecision out;
  if (k <= 0) {
    out.yes = true;
    return out;
  }
  out.certificate = solve_exact(t, threads, out.contractions);
  out.alpha = out.certificate.total_weight;
  out.yes = *out.alpha >= k;
  if (!is_valid_independent_set(t, out.certificate)) {
    throw InternalError("solve_wis produced an invalid certificate");
  }
  return out;
}

}  // namespace bullfree
