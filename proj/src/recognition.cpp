#include "isk4col/recognition.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "isk4col/errors.hpp"
#include "isk4col/patterns.hpp"

namespace isk4col {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::complete_bipartite: return "complete_bipartite";
    case Branch::series_parallel: return "series_parallel";
    case Branch::line_of_sparse: return "line_of_sparse";
    case Branch::proper_2_cutset: return "proper_2_cutset";
    case Branch::unclassified: return "unclassified";
  }
  return "?";
}

std::optional<Bipartition> is_complete_bipartite(const Graph& g) {
  const int n = static_cast<int>(g.order());
  if (n < 2 || !is_connected(g)) return std::nullopt;
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  side[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (side[static_cast<std::size_t>(w)] < 0) {
        side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
        queue.push_back(w);
      } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
        return std::nullopt;
      }
    }
  }
  Bipartition out;
  for (int u = 0; u < n; ++u) (side[static_cast<std::size_t>(u)] == 0 ? out.left : out.right).push_back(g.id(u));
  if (out.left.size() * out.right.size() != g.size()) return std::nullopt;
  return out;
}

namespace {

// Multigraph used only by the series-parallel reduction: neighbour
// multiplicities plus a loop counter per vertex.
class MultiGraph {
 public:
  explicit MultiGraph(const Graph& g) : adj_(g.order()), loops_(g.order(), 0), alive_(g.order(), 1) {
    for (int u = 0; u < static_cast<int>(g.order()); ++u) {
      for (int w : g.neighbors(u)) adj_[static_cast<std::size_t>(u)][w] = 1;
    }
  }

  std::size_t order() const { return adj_.size(); }
  bool alive(int v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  std::size_t distinct_degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }

  void drop_loops(int v) { loops_[static_cast<std::size_t>(v)] = 0; }

  void collapse_parallels(int v) {
    for (auto& [w, mult] : adj_[static_cast<std::size_t>(v)]) {
      mult = 1;
      adj_[static_cast<std::size_t>(w)][v] = 1;
    }
  }

  std::vector<int> remove(int v) {
    std::vector<int> touched;
    for (auto& [w, mult] : adj_[static_cast<std::size_t>(v)]) {
      adj_[static_cast<std::size_t>(w)].erase(v);
      touched.push_back(w);
    }
    adj_[static_cast<std::size_t>(v)].clear();
    alive_[static_cast<std::size_t>(v)] = 0;
    return touched;
  }

  // v has exactly two distinct neighbours u, w: replace u-v-w by an edge u-w
  std::vector<int> suppress(int v) {
    auto it = adj_[static_cast<std::size_t>(v)].begin();
    int u = it->first;
    int w = std::next(it)->first;
    remove(v);
    ++adj_[static_cast<std::size_t>(u)][w];
    ++adj_[static_cast<std::size_t>(w)][u];
    return {u, w};
  }

 private:
  std::vector<std::map<int, int>> adj_;
  std::vector<int> loops_;
  std::vector<char> alive_;
};

}  // namespace

bool is_series_parallel(const Graph& g) {
  MultiGraph mg(g);
  std::deque<int> queue;
  for (int v = 0; v < static_cast<int>(mg.order()); ++v) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (!mg.alive(v)) continue;
    mg.drop_loops(v);
    mg.collapse_parallels(v);
    std::vector<int> touched;
    if (mg.distinct_degree(v) <= 1) {
      touched = mg.remove(v);
    } else if (mg.distinct_degree(v) == 2) {
      touched = mg.suppress(v);
    }
    for (int w : touched) queue.push_back(w);
  }
  for (int v = 0; v < static_cast<int>(mg.order()); ++v) {
    if (mg.alive(v)) return false;
  }
  return true;
}

bool is_sparse_subcubic(const Graph& h) {
  if (h.max_degree() > 3) return false;
  for (int u = 0; u < static_cast<int>(h.order()); ++u) {
    if (h.degree(u) <= 2) continue;
    for (int w : h.neighbors(u)) {
      if (h.degree(w) > 2) return false;
    }
  }
  return true;
}

bool validate_root(const Graph& g, const RootGraph& r) {
  if (r.edge_of.size() != g.order()) return false;
  std::set<Edge> used;
  for (VertexId v : g.ids()) {
    auto it = r.edge_of.find(v);
    if (it == r.edge_of.end()) return false;
    const auto [x, y] = it->second;
    if (!r.root.adjacent(x, y) || !used.insert({std::min(x, y), std::max(x, y)}).second) return false;
  }
  if (used.size() != r.root.size()) return false;
  auto share = [](const Edge& e, const Edge& f) {
    return e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second;
  };
  auto ids = g.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      bool in_line = share(r.edge_of.at(ids[i]), r.edge_of.at(ids[j]));
      if (in_line != g.adjacent(ids[i], ids[j])) return false;
    }
  }
  return is_sparse_subcubic(r.root);
}

std::optional<RootGraph> reconstruct_line_graph_root(const Graph& g) {
  if (!is_connected(g)) throw ContractViolation("line graph reconstruction needs a connected graph");
  if (find_diamond(g)) throw ContractViolation("line graph reconstruction needs a diamond-free graph");
  const int n = static_cast<int>(g.order());

  // In a diamond-free graph every edge lies in exactly one maximal clique:
  // its endpoints plus their common neighbours.
  std::map<std::vector<int>, int> clique_index;
  std::vector<std::vector<int>> cliques_at(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      std::vector<int> clique{u, v};
      std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                            g.neighbors(v).end(), std::back_inserter(clique));
      std::sort(clique.begin(), clique.end());
      auto [it, fresh] = clique_index.emplace(clique, static_cast<int>(clique_index.size()));
      if (fresh) {
        for (int w : clique) cliques_at[static_cast<std::size_t>(w)].push_back(it->second);
      }
    }
  }
  int next_vertex = static_cast<int>(clique_index.size());
  RootGraph out;
  std::vector<Edge> root_edges;
  for (int u = 0; u < n; ++u) {
    auto& cs = cliques_at[static_cast<std::size_t>(u)];
    if (cs.size() > 2) return std::nullopt;
    while (cs.size() < 2) cs.push_back(next_vertex++);  // pendant ends
    Edge e{std::min(cs[0], cs[1]), std::max(cs[0], cs[1])};
    root_edges.push_back(e);
    out.edge_of.emplace(g.id(u), e);
  }
  std::vector<VertexId> root_ids(static_cast<std::size_t>(next_vertex));
  for (int i = 0; i < next_vertex; ++i) root_ids[static_cast<std::size_t>(i)] = i;
  out.root = Graph::from_id_edges(std::move(root_ids), root_edges);
  if (out.root.size() != g.order()) return std::nullopt;  // two cliques sharing two vertices
  if (!is_sparse_subcubic(out.root)) return std::nullopt;
  return out;
}

BasicVerdict classify_basic(const Graph& g) {
  BasicVerdict v;
  if (auto bip = is_complete_bipartite(g)) {
    v.branch = Branch::complete_bipartite;
    v.bipartition = std::move(bip);
    return v;
  }
  if (!g.empty() && is_connected(g) && !find_diamond(g)) {
    if (auto root = reconstruct_line_graph_root(g)) {
      v.branch = Branch::line_of_sparse;
      v.root = std::move(root);
      return v;
    }
  }
  if (is_connected(g)) {
    if (auto cut = find_proper_2_cutset(g, true)) {
      v.branch = Branch::proper_2_cutset;
      v.cutset = std::move(cut);
      return v;
    }
  }
  if (is_series_parallel(g)) v.branch = Branch::series_parallel;
  return v;
}

}  // namespace isk4col
