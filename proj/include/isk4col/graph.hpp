#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isk4col {

/// Stable vertex identifier. Induced subgraphs keep the ids of their parent.
using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph.
///
/// Vertices carry stable ids; internally every vertex also has a local index
/// in [0, order()). Local indices follow ascending id order, so iterating
/// locally is iterating by id. Neighbor lists hold local indices, sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on the id set `ids` (any order, must be distinct) with
  /// edges given by id pairs. Duplicate edges collapse; self-loops and ids
  /// outside `ids` raise MalformedInput.
  static Graph from_id_edges(std::vector<VertexId> ids, std::span<const Edge> edges);

  std::size_t order() const noexcept { return ids_.size(); }
  std::size_t size() const noexcept { return m_; }
  bool empty() const noexcept { return ids_.empty(); }

  std::span<const VertexId> ids() const noexcept { return ids_; }
  VertexId id(int local) const { return ids_[static_cast<std::size_t>(local)]; }
  std::optional<int> local(VertexId v) const;
  bool contains(VertexId v) const { return local(v).has_value(); }

  std::span<const int> neighbors(int local) const { return adj_[static_cast<std::size_t>(local)]; }
  int degree(int local) const { return static_cast<int>(adj_[static_cast<std::size_t>(local)].size()); }
  int max_degree() const;
  int min_degree() const;

  bool adjacent_local(int u, int v) const;
  bool adjacent(VertexId a, VertexId b) const;

  std::vector<VertexId> neighbor_ids(VertexId v) const;
  /// Edges as (smaller id, larger id), sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.adj_ == b.adj_;
  }

 private:
  Graph(std::vector<VertexId> ids, std::vector<std::vector<int>> adj);

  friend Graph induced_by_local(const Graph& g, std::span<const int> locals);

  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

/// Graph on ids 0..n-1.
Graph build_graph(std::span<const Edge> edge_list, VertexId n);

/// Induced subgraph on a set of ids; MalformedInput if some id is not in g.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> s);

/// Induced subgraph on local indices of g (need not be sorted, must be distinct).
Graph induced_by_local(const Graph& g, std::span<const int> locals);

/// One peeled vertex and the neighbors it still had when it was removed.
struct Removal {
  VertexId vertex;
  std::vector<VertexId> neighbors;

  friend bool operator==(const Removal&, const Removal&) = default;
};
using RemovalLog = std::vector<Removal>;

struct PeelResult {
  Graph residual;
  RemovalLog log;
};

/// Removes vertices of degree <= threshold until none is left, always taking
/// the lowest id among the eligible ones.
PeelResult peel_low_degree(const Graph& g, int threshold = 2);

/// Components as sorted id lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Component label per local index, plus the number of components.
std::pair<std::vector<int>, int> component_labels(const Graph& g);

bool is_connected(const Graph& g);
bool is_clique(const Graph& g, std::span<const VertexId> s);

/// {"ids":[...],"edges":[[u,v],...]} on one line, for diagnostics.
std::string to_compact_json(const Graph& g);

}  // namespace isk4col
