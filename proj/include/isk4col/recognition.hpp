#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "isk4col/cutsets.hpp"
#include "isk4col/graph.hpp"

namespace isk4col {

struct Bipartition {
  std::vector<VertexId> left;   // part containing the smallest id
  std::vector<VertexId> right;
};

/// Both parts nonempty and every cross pair adjacent.
std::optional<Bipartition> is_complete_bipartite(const Graph& g);

/// No K4 minor, decided by loop/parallel/degree<=2 reductions.
bool is_series_parallel(const Graph& g);

/// Root graph H with the vertex-to-edge correspondence g = L(H).
struct RootGraph {
  Graph root;
  std::map<VertexId, Edge> edge_of;  // vertex of g -> edge of root (smaller id first)
};

/// Re-derives L(root) through `edge_of` and compares it with g; also checks
/// that root is sparse with maximum degree at most three.
bool validate_root(const Graph& g, const RootGraph& r);

/// Sparse, maximum degree <= 3.
bool is_sparse_subcubic(const Graph& h);

/// Krausz reconstruction for diamond-free graphs. Triangles resolve to K_{1,3}.
/// Returns a root only if it is sparse with maximum degree <= 3.
/// Raises ContractViolation on disconnected input or if g has a diamond.
std::optional<RootGraph> reconstruct_line_graph_root(const Graph& g);

enum class Branch { complete_bipartite, series_parallel, line_of_sparse, proper_2_cutset, unclassified };
std::string_view to_string(Branch b);

struct BasicVerdict {
  Branch branch = Branch::unclassified;
  std::optional<Bipartition> bipartition;
  std::optional<RootGraph> root;
  std::optional<Proper2Cutset> cutset;
};

/// Tries complete bipartite, line graph of a sparse subcubic graph, proper
/// 2-cutset (least small side), then series-parallel.
BasicVerdict classify_basic(const Graph& g);

}  // namespace isk4col
