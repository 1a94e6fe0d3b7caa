#include "isk4col/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "isk4col/errors.hpp"

namespace isk4col {

Graph::Graph(std::vector<VertexId> ids, std::vector<std::vector<int>> adj)
    : ids_(std::move(ids)), adj_(std::move(adj)) {
  std::size_t total = 0;
  for (const auto& nb : adj_) total += nb.size();
  m_ = total / 2;
}

Graph Graph::from_id_edges(std::vector<VertexId> ids, std::span<const Edge> edges) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw MalformedInput("duplicate vertex id");
  }
  auto index_of = [&](VertexId v) -> int {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) {
      throw MalformedInput("edge endpoint " + std::to_string(v) + " is not a vertex");
    }
    return static_cast<int>(it - ids.begin());
  };
  std::vector<std::vector<int>> adj(ids.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw MalformedInput("self-loop at vertex " + std::to_string(a));
    int u = index_of(a);
    int v = index_of(b);
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return Graph(std::move(ids), std::move(adj));
}

std::optional<int> Graph::local(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = static_cast<int>(adj_.front().size());
  for (const auto& nb : adj_) best = std::min(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::adjacent_local(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  // search the shorter list
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  auto u = local(a);
  auto v = local(b);
  return u && v && adjacent_local(*u, *v);
}

std::vector<VertexId> Graph::neighbor_ids(VertexId v) const {
  auto u = local(v);
  if (!u) throw MalformedInput("vertex " + std::to_string(v) + " is not in the graph");
  std::vector<VertexId> out;
  out.reserve(adj_[static_cast<std::size_t>(*u)].size());
  for (int w : adj_[static_cast<std::size_t>(*u)]) out.push_back(ids_[static_cast<std::size_t>(w)]);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (int v : adj_[u]) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(ids_[u], ids_[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

Graph build_graph(std::span<const Edge> edge_list, VertexId n) {
  if (n < 0) throw MalformedInput("negative vertex count");
  std::vector<VertexId> ids(static_cast<std::size_t>(n));
  for (VertexId i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  for (const auto& [a, b] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw MalformedInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                           ") has an id outside [0," + std::to_string(n) + ")");
    }
  }
  return Graph::from_id_edges(std::move(ids), edge_list);
}

Graph induced_by_local(const Graph& g, std::span<const int> locals) {
  std::vector<int> sorted(locals.begin(), locals.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexId> ids;
  ids.reserve(sorted.size());
  for (int u : sorted) ids.push_back(g.id(u));
  std::vector<std::vector<int>> adj(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (int w : g.neighbors(sorted[i])) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
      if (it != sorted.end() && *it == w) adj[i].push_back(static_cast<int>(it - sorted.begin()));
    }
  }
  return Graph(std::move(ids), std::move(adj));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
  std::vector<int> locals;
  locals.reserve(s.size());
  for (VertexId v : s) {
    auto u = g.local(v);
    if (!u) throw MalformedInput("vertex " + std::to_string(v) + " is not in the graph");
    locals.push_back(*u);
  }
  std::sort(locals.begin(), locals.end());
  locals.erase(std::unique(locals.begin(), locals.end()), locals.end());
  return induced_by_local(g, locals);
}

PeelResult peel_low_degree(const Graph& g, int threshold) {
  const int n = static_cast<int>(g.order());
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> eligible;
  for (int u = 0; u < n; ++u) {
    deg[static_cast<std::size_t>(u)] = g.degree(u);
    if (g.degree(u) <= threshold) eligible.push(u);
  }
  PeelResult out;
  while (!eligible.empty()) {
    int u = eligible.top();
    eligible.pop();
    if (removed[static_cast<std::size_t>(u)]) continue;
    removed[static_cast<std::size_t>(u)] = 1;
    Removal r{g.id(u), {}};
    for (int w : g.neighbors(u)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      r.neighbors.push_back(g.id(w));
      if (--deg[static_cast<std::size_t>(w)] == threshold) eligible.push(w);
    }
    out.log.push_back(std::move(r));
  }
  std::vector<int> keep;
  for (int u = 0; u < n; ++u) {
    if (!removed[static_cast<std::size_t>(u)]) keep.push_back(u);
  }
  out.residual = keep.size() == static_cast<std::size_t>(n) ? g : induced_by_local(g, keep);
  return out;
}

std::pair<std::vector<int>, int> component_labels(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return {std::move(label), count};
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  auto [label, count] = component_labels(g);
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(count));
  // labels are assigned in order of smallest local index, i.e. smallest id
  for (std::size_t u = 0; u < label.size(); ++u) out[static_cast<std::size_t>(label[u])].push_back(g.id(static_cast<int>(u)));
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_labels(g).second == 1; }

bool is_clique(const Graph& g, std::span<const VertexId> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

std::string to_compact_json(const Graph& g) {
  std::string out = "{\"ids\":[";
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.id(static_cast<int>(i)));
  }
  out += "],\"edges\":[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(u) + ',' + std::to_string(v) + ']';
  }
  out += "]}";
  return out;
}

}  // namespace isk4col
