#include <algorithm>

#include "coloring_detail.hpp"
#include "isk4col/coloring.hpp"
#include "isk4col/errors.hpp"
#include "isk4col/patterns.hpp"

namespace isk4col {

std::string_view to_string(DualRoute r) {
  switch (r) {
    case DualRoute::cycle: return "cycle";
    case DualRoute::prism7: return "prism7";
    case DualRoute::line_graph: return "line_graph";
    case DualRoute::fallback: return "fallback";
  }
  return "?";
}

namespace {

bool dual_ok(const Graph& tx, const DualColorings& d) {
  return is_proper(tx, d.same) && is_proper(tx, d.differ) && palette_size(d.same) <= 3 &&
         palette_size(d.differ) <= 3 && d.same.at(d.a) == d.same.at(d.b) && d.differ.at(d.a) != d.differ.at(d.b);
}

// tx is a cycle through a and b: color the two a-b paths greedily.
std::optional<DualColorings> cycle_route(const Graph& tx, VertexId a, VertexId b) {
  if (!is_connected(tx) || tx.min_degree() != 2 || tx.max_degree() != 2) return std::nullopt;
  std::vector<std::vector<VertexId>> paths;
  for (VertexId first : tx.neighbor_ids(a)) {
    std::vector<VertexId> path;
    VertexId prev = a;
    VertexId cur = first;
    while (cur != b) {
      path.push_back(cur);
      auto nb = tx.neighbor_ids(cur);
      VertexId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    paths.push_back(std::move(path));
  }
  DualColorings d;
  d.a = a;
  d.b = b;
  d.route = DualRoute::cycle;
  for (int target = 0; target < 2; ++target) {
    VertexColoring c{{a, 0}, {b, target}};
    for (const auto& path : paths) {
      int prev = 0;
      for (std::size_t i = 0; i < path.size(); ++i) {
        int col = 0;
        while (col == prev || (i + 1 == path.size() && col == target)) ++col;
        c[path[i]] = col;
        prev = col;
      }
    }
    (target == 0 ? d.same : d.differ) = std::move(c);
  }
  return d;
}

// tx + u is the prism with one matching edge subdivided by u: a and b each
// sit on a triangle ({a,p1,p2} and {b,q1,q2}) and p1q1, p2q2 are edges.
std::optional<DualColorings> prism7_route(const Graph& tx, VertexId a, VertexId b) {
  if (tx.order() != 6 || tx.size() != 8) return std::nullopt;
  auto pa = tx.neighbor_ids(a);
  auto pb = tx.neighbor_ids(b);
  if (pa.size() != 2 || pb.size() != 2) return std::nullopt;
  if (!tx.adjacent(pa[0], pa[1]) || !tx.adjacent(pb[0], pb[1])) return std::nullopt;
  VertexId p1 = pa[0], p2 = pa[1];
  VertexId q1 = pb[0], q2 = pb[1];
  if (p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2) return std::nullopt;
  if (!tx.adjacent(p1, q1)) std::swap(q1, q2);
  if (!tx.adjacent(p1, q1) || !tx.adjacent(p2, q2) || tx.adjacent(p1, q2) || tx.adjacent(p2, q1)) return std::nullopt;
  DualColorings d;
  d.a = a;
  d.b = b;
  d.route = DualRoute::prism7;
  d.same = {{a, 0}, {b, 0}, {p1, 2}, {p2, 1}, {q1, 1}, {q2, 2}};
  d.differ = {{a, 0}, {q1, 0}, {p2, 1}, {b, 1}, {p1, 2}, {q2, 2}};
  return d;
}

// tx + u = L(H): the edge of u sits between the edges of a and b, and the
// Kempe argument on H gives both colorings.
std::optional<DualColorings> line_route(const Graph& tx, VertexId a, VertexId b) {
  const VertexId u = tx.ids().back() + 1;
  std::vector<VertexId> ids(tx.ids().begin(), tx.ids().end());
  ids.push_back(u);
  auto edges = tx.edges();
  edges.push_back({a, u});
  edges.push_back({b, u});
  Graph g = Graph::from_id_edges(std::move(ids), edges);
  if (!is_connected(g) || find_diamond(g)) return std::nullopt;
  auto root = reconstruct_line_graph_root(g);
  if (!root) return std::nullopt;
  const Graph& h = root->root;
  auto pair = detail::kempe_dual(h, root->edge_of.at(a), root->edge_of.at(b), root->edge_of.at(u),
                                 edge_color_sparse(h));
  if (!pair) return std::nullopt;
  DualColorings d;
  d.a = a;
  d.b = b;
  d.route = DualRoute::line_graph;
  for (VertexId v : tx.ids()) {
    Edge e = detail::norm(root->edge_of.at(v));
    d.same[v] = pair->same.at(e);
    d.differ[v] = pair->differ.at(e);
  }
  return d;
}

class ConstrainedSearch {
 public:
  ConstrainedSearch(const Graph& g, const DualOptions& opts) : g_(g), opts_(opts), color_(g.order(), -1) {
    // breadth-first order keeps constraints tight early
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < static_cast<int>(g.order()); ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = 1;
      order_.push_back(s);
      for (std::size_t i = order_.size() - 1; i < order_.size(); ++i) {
        for (int w : g.neighbors(order_[i])) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            order_.push_back(w);
          }
        }
      }
    }
  }

  std::optional<VertexColoring> run(int a, int b, bool same) {
    std::fill(color_.begin(), color_.end(), -1);
    color_[static_cast<std::size_t>(a)] = 0;
    color_[static_cast<std::size_t>(b)] = same ? 0 : 1;
    if (!step(0)) return std::nullopt;
    VertexColoring out;
    for (int v = 0; v < static_cast<int>(g_.order()); ++v) out[g_.id(v)] = color_[static_cast<std::size_t>(v)];
    return out;
  }

 private:
  bool step(std::size_t i) {
    if (++nodes_ > opts_.fallback_budget) throw BudgetExceeded("dual coloring search exceeded its node budget");
    if (opts_.deadline && (nodes_ & 4095) == 0 && std::chrono::steady_clock::now() > *opts_.deadline) {
      throw BudgetExceeded("dual coloring search passed its deadline");
    }
    while (i < order_.size() && color_[static_cast<std::size_t>(order_[i])] >= 0) ++i;
    if (i == order_.size()) return true;
    int v = order_[i];
    for (int c = 0; c < 3; ++c) {
      bool clash = false;
      for (int w : g_.neighbors(v)) clash = clash || color_[static_cast<std::size_t>(w)] == c;
      if (clash) continue;
      color_[static_cast<std::size_t>(v)] = c;
      if (step(i + 1)) return true;
    }
    color_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  const Graph& g_;
  const DualOptions& opts_;
  std::vector<int> color_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

DualColorings dual_colorings_for_side(const Graph& tx, VertexId a, VertexId b, const DualOptions& opts) {
  auto la = tx.local(a);
  auto lb = tx.local(b);
  if (!la || !lb || a == b) throw ContractViolation("dual_colorings_for_side: a and b must be distinct vertices of tx");
  if (tx.adjacent(a, b)) throw ContractViolation("dual_colorings_for_side: a and b must be nonadjacent");

  for (auto route : {cycle_route, prism7_route, line_route}) {
    auto d = route(tx, a, b);
    if (d && dual_ok(tx, *d)) return *d;
  }
  if (!opts.allow_fallback) {
    throw ClassificationFailure("no constructive route gives dual colorings", to_compact_json(tx));
  }
  ConstrainedSearch search(tx, opts);
  auto same = search.run(*la, *lb, true);
  auto differ = search.run(*la, *lb, false);
  if (!same || !differ) {
    throw ClassificationFailure("side admits no dual 3-colorings; input is not in the class", to_compact_json(tx));
  }
  DualColorings d{a, b, std::move(*same), std::move(*differ), DualRoute::fallback};
  return d;
}

}  // namespace isk4col
