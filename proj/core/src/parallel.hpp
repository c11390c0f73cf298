#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

namespace bullfree::detail {

// Runs `search(index)` for index in [0, count) on up to `threads` workers and
// returns the best result under `better`. Each worker keeps its own best, so
// the merged answer does not depend on scheduling as long as `better` is a
// strict total order on distinct results.
template <class Result, class Search, class Better>
std::optional<Result> parallel_best(int count, int threads, Search search, Better better) {
  auto merge = [&](std::optional<Result>& into, std::optional<Result> candidate) {
    if (candidate && (!into || better(*candidate, *into))) into = std::move(candidate);
  };
  threads = std::clamp(threads, 1, std::max(1, count));
  if (threads == 1) {
    std::optional<Result> best;
    for (int i = 0; i < count; ++i) merge(best, search(i));
    return best;
  }
  std::vector<std::optional<Result>> partial(static_cast<std::size_t>(threads));
  {
    std::vector<std::jthread> workers;
    workers.reserve(partial.size());
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (int i = w; i < count; i += threads) merge(partial[w], search(i));
      });
    }
  }
  std::optional<Result> best;
  for (auto& p : partial) merge(best, std::move(p));
  return best;
}

}  // namespace bullfree::detail
