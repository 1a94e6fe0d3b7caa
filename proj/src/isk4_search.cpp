#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>

#include "esu.hpp"
#include "isk4col/patterns.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isk4col {

namespace {

detail::EsuLimits isk4_limits() {
  detail::EsuLimits limits;
  limits.max_degree = 3;
  limits.max_full_degree = 4;
  return limits;
}

// Visitor keeping the least K4-subdivision among the subsets seen.
struct Isk4Collector {
  const Graph& g;
  std::optional<std::vector<VertexId>> best;
  bool stop_at_first = false;

  template <class Esu>
  void operator()(Esu& esu) {
    if (esu.full_count() != 4) return;
    const auto& sub = esu.subset();
    for (int u : sub) {
      int d = esu.induced_degree(u);
      if (d != 2 && d != 3) return;
    }
    std::vector<VertexId> ids;
    ids.reserve(sub.size());
    for (int u : sub) ids.push_back(g.id(u));
    std::sort(ids.begin(), ids.end());
    if (best && !(ids < *best)) return;
    if (!k4_subdivision(g, ids)) return;
    best = std::move(ids);
    if (stop_at_first) esu.stop();
  }
};

std::optional<std::vector<VertexId>> search_root(const Graph& g, int root) {
  Isk4Collector collect{g, std::nullopt};
  detail::SubcubicEnumerator<Isk4Collector> esu(g, isk4_limits(), collect);
  esu.run(root);
  return std::move(collect.best);
}

Isk4Result make_result(const Graph& g, std::optional<std::vector<VertexId>> found, SearchMode mode) {
  Isk4Result r;
  r.mode = mode;
  if (found) {
    r.status = Isk4Result::Status::found;
    r.witness = k4_subdivision(g, *found);
  } else {
    r.status = Isk4Result::Status::absent;
  }
  return r;
}

Isk4Result find_isk4_parallel(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::optional<std::vector<VertexId>>> per_root(static_cast<std::size_t>(n));
  std::atomic<int> first_hit{n};
#pragma omp parallel for schedule(dynamic, 1)
  for (int root = 0; root < n; ++root) {
    if (root > first_hit.load(std::memory_order_relaxed)) continue;
    per_root[static_cast<std::size_t>(root)] = search_root(g, root);
    if (per_root[static_cast<std::size_t>(root)]) {
      int cur = first_hit.load();
      while (root < cur && !first_hit.compare_exchange_weak(cur, root)) {
      }
    }
  }
  for (int root = 0; root < n; ++root) {
    if (per_root[static_cast<std::size_t>(root)]) {
      return make_result(g, std::move(per_root[static_cast<std::size_t>(root)]), SearchMode::exact);
    }
  }
  return make_result(g, std::nullopt, SearchMode::exact);
}

Isk4Result find_isk4_bounded(const Graph& g, const Isk4Options& opts) {
  const int n = static_cast<int>(g.order());
  std::vector<int> roots(static_cast<std::size_t>(n));
  std::iota(roots.begin(), roots.end(), 0);
  std::mt19937_64 rng(opts.seed);
  std::shuffle(roots.begin(), roots.end(), rng);

  auto limits = isk4_limits();
  limits.max_size = opts.bounded_max_subset;
  std::uint64_t steps_left = opts.bounded_steps;
  bool complete = true;
  Isk4Collector collect{g, std::nullopt, true};
  for (int root : roots) {
    if (steps_left == 0) {
      complete = false;
      break;
    }
    limits.max_steps = steps_left;
    detail::SubcubicEnumerator<Isk4Collector> esu(g, limits, collect);
    bool finished = esu.run(root);
    steps_left -= std::min(steps_left, esu.steps());
    if (collect.best) break;
    if (!finished || esu.truncated()) complete = false;
  }
  Isk4Result r;
  r.mode = SearchMode::bounded;
  if (collect.best) {
    r.status = Isk4Result::Status::found;
    r.witness = k4_subdivision(g, *collect.best);
  } else if (complete) {
    // the whole space was enumerated after all, so absence is definite
    r.status = Isk4Result::Status::absent;
    r.mode = SearchMode::exact;
  } else {
    r.status = Isk4Result::Status::unknown;
  }
  return r;
}

}  // namespace

Isk4Result find_isk4_serial(const Graph& g) {
  for (int root = 0; root < static_cast<int>(g.order()); ++root) {
    if (auto hit = search_root(g, root)) return make_result(g, std::move(hit), SearchMode::exact);
  }
  return make_result(g, std::nullopt, SearchMode::exact);
}

Isk4Result find_isk4(const Graph& g, const Isk4Options& opts) {
  if (g.order() > opts.budget) return find_isk4_bounded(g, opts);
  return opts.parallel ? find_isk4_parallel(g) : find_isk4_serial(g);
}

}  // namespace isk4col
