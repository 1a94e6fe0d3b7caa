#include <algorithm>

#include "isk4col/cutsets.hpp"

namespace isk4col {

std::vector<VertexId> TreeNode::residual() const {
  std::vector<VertexId> removed;
  removed.reserve(peel.size());
  for (const auto& r : peel) removed.push_back(r.vertex);
  std::sort(removed.begin(), removed.end());
  std::vector<VertexId> out;
  std::set_difference(vertices.begin(), vertices.end(), removed.begin(), removed.end(), std::back_inserter(out));
  return out;
}

std::vector<int> CliqueCutsetTree::basic_leaves() const {
  std::vector<int> out;
  for (const auto& node : nodes) {
    if (node.kind == TreeNode::Kind::basic_leaf) out.push_back(node.id);
  }
  return out;
}

namespace {

struct Processed {
  TreeNode::Kind kind = TreeNode::Kind::empty_leaf;
  RemovalLog peel;
  std::vector<VertexId> cutset;
  std::vector<Graph> children;
};

// One layer step on one node: peel, then split if possible.
Processed process(const Graph& f) {
  Processed out;
  auto peeled = peel_low_degree(f, 2);
  out.peel = std::move(peeled.log);
  const Graph& r = peeled.residual;
  if (r.empty()) return out;

  auto comps = connected_components(r);
  if (comps.size() > 1) {
    out.kind = TreeNode::Kind::internal;
    for (const auto& c : comps) out.children.push_back(induced_subgraph(r, c));
    return out;
  }
  if (auto cut = find_clique_cutset(r)) {
    out.kind = TreeNode::Kind::internal;
    out.cutset = cut->clique;
    for (auto& c : cut->components) {
      c.insert(c.end(), cut->clique.begin(), cut->clique.end());
      out.children.push_back(induced_subgraph(r, c));
    }
    return out;
  }
  out.kind = TreeNode::Kind::basic_leaf;
  return out;
}

}  // namespace

CliqueCutsetTree build_clique_tree(const Graph& g, int jobs) {
  CliqueCutsetTree tree;
  tree.nodes.push_back(TreeNode{0, -1, 0, TreeNode::Kind::empty_leaf,
                                std::vector<VertexId>(g.ids().begin(), g.ids().end()), {}, {}, {}});
  std::vector<Graph> frontier{g};
  std::vector<int> frontier_ids{0};
  int layer = 0;
  while (!frontier.empty()) {
    const int count = static_cast<int>(frontier.size());
    std::vector<Processed> results(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1 && count > 1)
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = process(frontier[static_cast<std::size_t>(i)]);

    std::vector<Graph> next;
    std::vector<int> next_ids;
    for (int i = 0; i < count; ++i) {
      auto& res = results[static_cast<std::size_t>(i)];
      const int nid = frontier_ids[static_cast<std::size_t>(i)];
      tree.nodes[static_cast<std::size_t>(nid)].kind = res.kind;
      tree.nodes[static_cast<std::size_t>(nid)].peel = std::move(res.peel);
      tree.nodes[static_cast<std::size_t>(nid)].cutset = std::move(res.cutset);
      for (auto& child : res.children) {
        TreeNode node;
        node.id = static_cast<int>(tree.nodes.size());
        node.parent = nid;
        node.layer = layer + 1;
        node.vertices.assign(child.ids().begin(), child.ids().end());
        tree.nodes[static_cast<std::size_t>(nid)].children.push_back(node.id);
        next_ids.push_back(node.id);
        tree.nodes.push_back(std::move(node));
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    frontier_ids = std::move(next_ids);
    ++layer;
  }
  tree.layers = layer;
  return tree;
}

}  // namespace isk4col
