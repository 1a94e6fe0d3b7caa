#include "isk4col/pipeline.hpp"

#include <cstdio>
#include <exception>

#include "isk4col/errors.hpp"

namespace isk4col {

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : to_compact_json(g)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PipelineStats& PipelineStats::operator+=(const PipelineStats& o) {
  basic_leaves += o.basic_leaves;
  proper2_steps += o.proper2_steps;
  unclassified += o.unclassified;
  fallbacks += o.fallbacks;
  for (const auto& [k, v] : o.routes) routes[k] += v;
  for (const auto& [k, v] : o.branches) branches[k] += v;
  return *this;
}

namespace {

bool is_basic(const Graph& g) {
  return !g.empty() && is_connected(g) && g.min_degree() >= 3 && !find_clique_cutset(g);
}

std::vector<VertexId> with_pair(std::vector<VertexId> side, VertexId a, VertexId b) {
  side.push_back(a);
  side.push_back(b);
  return side;
}

struct Outcome {
  VertexColoring coloring;
  LeafRecord record;
  PipelineStats stats;
  std::exception_ptr error;
};

VertexColoring color_graph(const Graph& g, const PipelineOptions& opts, PipelineStats& stats,
                           ColoringCertificate* top);

// The proper 2-cutset loop on one basic leaf: peel off T_X sides with their
// dual colorings until T_Y is directly colorable, then glue back in reverse.
Outcome color_leaf(const Graph& leaf, const PipelineOptions& opts) {
  Outcome out;
  ++out.stats.basic_leaves;
  std::vector<DualColorings> extracted;
  Graph cur = leaf;
  VertexColoring col;
  for (;;) {
    auto verdict = classify_basic(cur);
    out.record.steps.push_back(verdict.branch);
    ++out.stats.branches[std::string(to_string(verdict.branch))];
    if (verdict.branch == Branch::complete_bipartite || verdict.branch == Branch::line_of_sparse) {
      col = color_basic(cur, verdict);
      break;
    }
    if (verdict.branch != Branch::proper_2_cutset) {
      ++out.stats.unclassified;
      throw ClassificationFailure("basic leaf fits no branch (" + std::string(to_string(verdict.branch)) + ")",
                                  to_compact_json(cur));
    }
    const auto& t = *verdict.cutset;
    Graph tx = induced_subgraph(cur, with_pair(t.x, t.a, t.b));
    auto dual = dual_colorings_for_side(tx, t.a, t.b, opts.dual);
    ++out.stats.routes[std::string(to_string(dual.route))];
    if (dual.route == DualRoute::fallback) ++out.stats.fallbacks;
    extracted.push_back(std::move(dual));
    ++out.stats.proper2_steps;
    Graph ty = induced_subgraph(cur, with_pair(t.y, t.a, t.b));
    if (is_basic(ty)) {
      cur = std::move(ty);
      continue;
    }
    ++out.record.nested;
    PipelineOptions inner = opts;
    inner.jobs = 1;
    col = color_graph(ty, inner, out.stats, nullptr);
    break;
  }
  for (auto it = extracted.rbegin(); it != extracted.rend(); ++it) col = merge_at_proper2(*it, col, it->a, it->b);
  if (!is_proper(leaf, col)) throw ClassificationFailure("recombined leaf coloring is not proper", to_compact_json(leaf));
  out.coloring = std::move(col);
  return out;
}

VertexColoring color_graph(const Graph& g, const PipelineOptions& opts, PipelineStats& stats,
                           ColoringCertificate* top) {
  auto tree = build_clique_tree(g, opts.jobs);
  const auto leaves = tree.basic_leaves();
  const int count = static_cast<int>(leaves.size());
  std::vector<Outcome> results(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.jobs) if (opts.jobs > 1 && count > 1)
  for (int i = 0; i < count; ++i) {
    auto& r = results[static_cast<std::size_t>(i)];
    try {
      const auto& node = tree.nodes[static_cast<std::size_t>(leaves[static_cast<std::size_t>(i)])];
      r = color_leaf(induced_subgraph(g, node.residual()), opts);
      r.record.node = node.id;
      r.record.vertices = node.residual();
    } catch (...) {
      r.error = std::current_exception();
    }
  }
  for (auto& r : results) {
    if (r.error) std::rethrow_exception(r.error);
  }

  std::vector<VertexColoring> colored(tree.nodes.size());
  for (int i = 0; i < count; ++i) {
    auto& r = results[static_cast<std::size_t>(i)];
    colored[static_cast<std::size_t>(leaves[static_cast<std::size_t>(i)])] = std::move(r.coloring);
    stats += r.stats;
    if (top) top->leaves.push_back(std::move(r.record));
  }
  // children have larger ids than their parent
  for (auto it = tree.nodes.rbegin(); it != tree.nodes.rend(); ++it) {
    const auto& node = *it;
    auto& slot = colored[static_cast<std::size_t>(node.id)];
    if (node.kind == TreeNode::Kind::internal) {
      std::vector<std::pair<Graph, VertexColoring>> pieces;
      for (int c : node.children) {
        const auto& child = tree.nodes[static_cast<std::size_t>(c)];
        pieces.emplace_back(induced_subgraph(g, child.vertices), std::move(colored[static_cast<std::size_t>(c)]));
      }
      slot = merge_at_clique(pieces, node.cutset);
    }
    slot = add_back_peeled(std::move(slot), node.peel);
  }
  if (top) {
    top->tree.node_count = static_cast<int>(tree.nodes.size());
    top->tree.layers = tree.layers;
    for (const auto& node : tree.nodes) {
      if (node.kind == TreeNode::Kind::internal) top->tree.cutsets.push_back(node.cutset);
    }
  }
  return std::move(colored[0]);
}

}  // namespace

ColoringCertificate color_class_member(const Graph& g, const PipelineOptions& opts) {
  ColoringCertificate cert;
  cert.graph_hash = graph_hash(g);
  cert.coloring = color_graph(g, opts, cert.stats, &cert);
  cert.proper = is_proper(g, cert.coloring);
  cert.palette = palette_size(cert.coloring);
  if (!cert.proper) throw ClassificationFailure("final coloring is not proper", to_compact_json(g));
  return cert;
}

bool verify_certificate(const Graph& g, const ColoringCertificate& cert) {
  if (cert.graph_hash != graph_hash(g)) return false;
  if (!is_proper(g, cert.coloring)) return false;
  for (const auto& [v, c] : cert.coloring) {
    if (c < 0 || c > 2) return false;
  }
  const int palette = palette_size(cert.coloring);
  return palette <= 3 && cert.palette == palette && cert.proper;
}

}  // namespace isk4col
