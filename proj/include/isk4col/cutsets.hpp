#pragma once

#include <optional>
#include <vector>

#include "isk4col/graph.hpp"

namespace isk4col {

struct CliqueCutset {
  std::vector<VertexId> clique;                  // sorted
  std::vector<std::vector<VertexId>> components;  // of g - clique, ordered by smallest id
};

/// A clique minimal separator of a connected graph, found through a minimal
/// elimination ordering (MCS-M); nothing if g has no clique cutset.
/// Raises ContractViolation on disconnected input.
std::optional<CliqueCutset> find_clique_cutset(const Graph& g);

/// Reference search: tries every clique, smallest first, as a separator.
/// Exponential in the clique number; for cross-checking only.
std::optional<CliqueCutset> find_clique_cutset_bruteforce(const Graph& g);

/// Proper 2-cutset {a, b} with sides X (the smaller) and Y.
struct Proper2Cutset {
  VertexId a;
  VertexId b;
  std::vector<VertexId> x;  // sorted, |x| <= |y|
  std::vector<VertexId> y;  // sorted
};

/// Independent check of the definition: a, b nonadjacent, X and Y nonempty,
/// disjoint, covering V - {a,b}, anticomplete, and neither G[X+T] nor
/// G[Y+T] an a-b path.
bool validate_proper_2_cutset(const Graph& g, const Proper2Cutset& t);

/// Scans nonadjacent pairs. With `minimize_small_side` the result minimizes
/// |X| over all proper 2-cutsets (ties: least (a, b)); otherwise the first
/// pair that admits one is returned.
std::optional<Proper2Cutset> find_proper_2_cutset(const Graph& g, bool minimize_small_side = true);

/// Node of the clique-cutset decomposition tree.
///
/// Each node first peels vertices of degree <= 2 to a fixpoint. The residual
/// is then either empty, split (on a clique cutset, or on the empty clique if
/// peeling disconnected it), or kept as a basic leaf.
struct TreeNode {
  enum class Kind { internal, basic_leaf, empty_leaf };

  int id = 0;
  int parent = -1;
  int layer = 0;
  Kind kind = Kind::empty_leaf;
  std::vector<VertexId> vertices;  // sorted, before peeling
  RemovalLog peel;
  std::vector<VertexId> cutset;    // internal nodes only; may be empty
  std::vector<int> children;

  std::vector<VertexId> residual() const;
};

struct CliqueCutsetTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root; children have larger ids
  int layers = 0;               // number of peel/split rounds, j(G)

  std::vector<int> basic_leaves() const;
};

/// Layered decomposition. With jobs > 1 the nodes of one layer are processed
/// concurrently; the result does not depend on `jobs`.
CliqueCutsetTree build_clique_tree(const Graph& g, int jobs = 1);

}  // namespace isk4col
