#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "isk4col/graph.hpp"
#include "isk4col/recognition.hpp"

namespace isk4col {

/// vertex id -> color in {0, 1, ...}
using VertexColoring = std::map<VertexId, int>;
/// edge (smaller id, larger id) -> color in {0, 1, 2}
using EdgeColoring = std::map<Edge, int>;

/// Number of distinct colors used.
int palette_size(const VertexColoring& c);
/// Total on V(g), nothing outside V(g), no monochromatic edge.
bool is_proper(const Graph& g, const VertexColoring& c);
/// Total on E(h), adjacent edges differ, colors in {0,1,2}.
bool is_proper_edge_coloring(const Graph& h, const EdgeColoring& c);

struct ChiResult {
  int chi = 0;
  VertexColoring witness;
};

/// Exact chromatic number by DSATUR branch and bound with a clique lower
/// bound. Raises BudgetExceeded when g has more than `budget` vertices.
ChiResult chi_exact(const Graph& g, int budget = 20);

/// Kempe component: the edges reachable from `start` through edges colored c or d.
std::vector<Edge> kempe_chain(const Graph& h, const EdgeColoring& col, Edge start, int c, int d);
/// Exchanges c and d on the listed edges.
void swap_colors(EdgeColoring& col, const std::vector<Edge>& chain, int c, int d);

/// Proper 3-edge-coloring of a sparse graph with maximum degree <= 3.
/// Raises ContractViolation otherwise.
EdgeColoring edge_color_sparse(const Graph& h);

/// True if h has degrees in {2,3}, exactly one edge yz joining two degree-2
/// vertices, and e1, e2 are the other edges at y and z.
bool lemma_shape(const Graph& h, Edge e1, Edge e2);

struct EdgeColoringPair {
  EdgeColoring same;    // same(e1) == same(e2)
  EdgeColoring differ;  // differ(e1) != differ(e2)
};

/// Two proper 3-edge-colorings of a subdivided cubic graph with one edge
/// subdivided twice, obtained from one coloring by Kempe swaps.
/// Raises ContractViolation if `lemma_shape` fails.
EdgeColoringPair lemma_dual_edge_colorings(const Graph& h, Edge e1, Edge e2);

/// Coloring of a complete bipartite or line_of_sparse verdict.
/// Raises ContractViolation for other branches.
VertexColoring color_basic(const Graph& g, const BasicVerdict& verdict);

enum class DualRoute { cycle, prism7, line_graph, fallback };
std::string_view to_string(DualRoute r);

struct DualColorings {
  VertexId a = 0;
  VertexId b = 0;
  VertexColoring same;    // a and b share a color
  VertexColoring differ;  // a and b differ
  DualRoute route = DualRoute::fallback;
};

struct DualOptions {
  std::uint64_t fallback_budget = 3486784401ULL;  // 3^20 search nodes
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool allow_fallback = true;
};

/// Dual colorings of tx = G[X + {a,b}] for a proper 2-cutset {a,b}.
/// Tries, in order: tx is a cycle; tx + u is the seven-vertex subdivided
/// prism; tx + u is a line graph whose root carries the two-edge structure
/// around u; exhaustive search. Raises ClassificationFailure if no pair
/// exists and BudgetExceeded if the search runs out.
DualColorings dual_colorings_for_side(const Graph& tx, VertexId a, VertexId b, const DualOptions& opts = {});

/// Pieces agreeing on the clique `k`; each palette is permuted to match the
/// first piece on k. Raises ContractViolation if k is not a clique of every
/// piece or the pieces overlap outside k.
VertexColoring merge_at_clique(const std::vector<std::pair<Graph, VertexColoring>>& pieces,
                               const std::vector<VertexId>& k);

/// Picks the dual coloring that matches ty on {a,b} and aligns its palette.
VertexColoring merge_at_proper2(const DualColorings& dual, const VertexColoring& ty, VertexId a, VertexId b);

/// Replays a peel log in reverse, giving each vertex the least color in
/// {0,1,2} not used by its logged neighbors.
VertexColoring add_back_peeled(VertexColoring coloring, const RemovalLog& log);

}  // namespace isk4col
