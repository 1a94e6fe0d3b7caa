#include <algorithm>
#include <functional>
#include <queue>

#include "isk4col/cutsets.hpp"
#include "isk4col/errors.hpp"

namespace isk4col {

namespace {

// MCS-M (Berry, Blair, Heggernes, Peyton). Returns, for every local vertex,
// its higher neighbors madj(v) in the minimal triangulation, and the
// elimination order (first eliminated first).
struct MinimalTriangulation {
  std::vector<int> order;
  std::vector<std::vector<int>> madj;
};

MinimalTriangulation mcs_m(const Graph& g) {
  const int n = static_cast<int>(g.order());
  MinimalTriangulation out;
  out.order.assign(static_cast<std::size_t>(n), -1);
  out.madj.assign(static_cast<std::size_t>(n), {});
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<int> reach_key(static_cast<std::size_t>(n));

  for (int i = n - 1; i >= 0; --i) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (!numbered[static_cast<std::size_t>(u)] &&
          (v < 0 || weight[static_cast<std::size_t>(u)] > weight[static_cast<std::size_t>(v)])) {
        v = u;
      }
    }
    // key(u): least possible maximum weight of the interior of a v-u path
    // through unnumbered vertices (-1 for neighbours of v).
    std::fill(reach_key.begin(), reach_key.end(), INT32_MAX);
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (int u : g.neighbors(v)) {
      if (numbered[static_cast<std::size_t>(u)]) continue;
      reach_key[static_cast<std::size_t>(u)] = -1;
      pq.emplace(-1, u);
    }
    while (!pq.empty()) {
      auto [key, u] = pq.top();
      pq.pop();
      if (key != reach_key[static_cast<std::size_t>(u)]) continue;
      int through = std::max(key, weight[static_cast<std::size_t>(u)]);
      for (int w : g.neighbors(u)) {
        if (w == v || numbered[static_cast<std::size_t>(w)]) continue;
        if (through < reach_key[static_cast<std::size_t>(w)]) {
          reach_key[static_cast<std::size_t>(w)] = through;
          pq.emplace(through, w);
        }
      }
    }
    std::vector<int> reached;
    for (int u = 0; u < n; ++u) {
      if (u == v || numbered[static_cast<std::size_t>(u)]) continue;
      if (reach_key[static_cast<std::size_t>(u)] < weight[static_cast<std::size_t>(u)]) reached.push_back(u);
    }
    for (int u : reached) {
      ++weight[static_cast<std::size_t>(u)];
      out.madj[static_cast<std::size_t>(u)].push_back(v);
    }
    numbered[static_cast<std::size_t>(v)] = 1;
    out.order[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

// Components of g - s (s as local indices) and whether each one sees all of s.
struct Split {
  std::vector<std::vector<int>> components;
  int full = 0;
};

Split split_by(const Graph& g, const std::vector<int>& s) {
  const int n = static_cast<int>(g.order());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (int u : s) label[static_cast<std::size_t>(u)] = -2;
  Split out;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (label[static_cast<std::size_t>(root)] != -1) continue;
    const int c = static_cast<int>(out.components.size());
    out.components.emplace_back();
    std::vector<char> sees(s.size(), 0);
    label[static_cast<std::size_t>(root)] = c;
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out.components.back().push_back(u);
      for (int w : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        } else if (label[static_cast<std::size_t>(w)] == -2) {
          sees[static_cast<std::size_t>(std::find(s.begin(), s.end(), w) - s.begin())] = 1;
        }
      }
    }
    std::sort(out.components.back().begin(), out.components.back().end());
    if (std::all_of(sees.begin(), sees.end(), [](char x) { return x != 0; })) ++out.full;
  }
  return out;
}

bool local_clique(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent_local(s[i], s[j])) return false;
    }
  }
  return true;
}

CliqueCutset to_ids(const Graph& g, std::vector<int> clique, const Split& split) {
  CliqueCutset out;
  std::sort(clique.begin(), clique.end());
  for (int u : clique) out.clique.push_back(g.id(u));
  for (const auto& comp : split.components) {
    std::vector<VertexId> ids;
    ids.reserve(comp.size());
    for (int u : comp) ids.push_back(g.id(u));
    out.components.push_back(std::move(ids));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw ContractViolation("clique cutset search needs a connected graph");
}

}  // namespace

std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
  require_connected(g);
  if (g.order() < 3) return std::nullopt;
  auto tri = mcs_m(g);
  for (int x : tri.order) {
    auto& s = tri.madj[static_cast<std::size_t>(x)];
    if (s.empty() || !local_clique(g, s)) continue;
    auto split = split_by(g, s);
    // clique minimal separators have at least two full components
    if (split.components.size() >= 2 && split.full >= 2) return to_ids(g, s, split);
  }
  return std::nullopt;
}

std::optional<CliqueCutset> find_clique_cutset_bruteforce(const Graph& g) {
  require_connected(g);
  const int n = static_cast<int>(g.order());
  std::optional<CliqueCutset> best;
  std::vector<int> clique;
  // every clique is visited once as an increasing sequence
  std::function<void(int)> grow = [&](int from) {
    if (!clique.empty()) {
      auto split = split_by(g, clique);
      if (split.components.size() >= 2) {
        auto cand = to_ids(g, clique, split);
        if (!best || cand.clique.size() < best->clique.size() ||
            (cand.clique.size() == best->clique.size() && cand.clique < best->clique)) {
          best = std::move(cand);
        }
      }
    }
    for (int v = from; v < n; ++v) {
      bool ok = std::all_of(clique.begin(), clique.end(), [&](int u) { return g.adjacent_local(u, v); });
      if (!ok) continue;
      clique.push_back(v);
      grow(v + 1);
      clique.pop_back();
    }
  };
  grow(0);
  return best;
}

}  // namespace isk4col
