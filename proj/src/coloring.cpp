#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "coloring_detail.hpp"
#include "isk4col/coloring.hpp"
#include "isk4col/errors.hpp"

namespace isk4col {

using detail::norm;

int palette_size(const VertexColoring& c) {
  std::set<int> used;
  for (const auto& [v, col] : c) used.insert(col);
  return static_cast<int>(used.size());
}

bool is_proper(const Graph& g, const VertexColoring& c) {
  if (c.size() != g.order()) return false;
  for (VertexId v : g.ids()) {
    auto it = c.find(v);
    if (it == c.end() || it->second < 0) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (c.at(u) == c.at(v)) return false;
  }
  return true;
}

bool is_proper_edge_coloring(const Graph& h, const EdgeColoring& c) {
  if (c.size() != h.size()) return false;
  for (const auto& e : h.edges()) {
    auto it = c.find(e);
    if (it == c.end() || it->second < 0 || it->second > 2) return false;
  }
  for (int u = 0; u < static_cast<int>(h.order()); ++u) {
    std::array<int, 3> seen{};
    for (int w : h.neighbors(u)) {
      int col = c.at(norm({h.id(u), h.id(w)}));
      if (seen[static_cast<std::size_t>(col)]++) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// chromatic number

namespace {

int max_clique_size(const Graph& g) {
  const int n = static_cast<int>(g.order());
  int best = n > 0 ? 1 : 0;
  std::vector<int> cand(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cand[static_cast<std::size_t>(i)] = i;
  auto grow = [&](auto&& self, int size, const std::vector<int>& pool) -> void {
    best = std::max(best, size);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (size + static_cast<int>(pool.size() - i) <= best) return;
      std::vector<int> next;
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (g.adjacent_local(pool[i], pool[j])) next.push_back(pool[j]);
      }
      self(self, size + 1, next);
    }
  };
  grow(grow, 0, cand);
  return best;
}

class Dsatur {
 public:
  Dsatur(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1) {}

  bool solve() { return step(0, 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  int pick() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int u = 0; u < static_cast<int>(g_.order()); ++u) {
      if (color_[static_cast<std::size_t>(u)] >= 0) continue;
      unsigned mask = 0;
      for (int w : g_.neighbors(u)) {
        if (color_[static_cast<std::size_t>(w)] >= 0) mask |= 1u << color_[static_cast<std::size_t>(w)];
      }
      int sat = __builtin_popcount(mask);
      if (sat > best_sat || (sat == best_sat && g_.degree(u) > best_deg)) {
        best = u;
        best_sat = sat;
        best_deg = g_.degree(u);
      }
    }
    return best;
  }

  bool step(int done, int used) {
    if (done == static_cast<int>(g_.order())) return true;
    int u = pick();
    unsigned mask = 0;
    for (int w : g_.neighbors(u)) {
      if (color_[static_cast<std::size_t>(w)] >= 0) mask |= 1u << color_[static_cast<std::size_t>(w)];
    }
    // a fresh color is interchangeable with any other fresh one
    for (int c = 0; c < std::min(k_, used + 1); ++c) {
      if (mask & (1u << c)) continue;
      color_[static_cast<std::size_t>(u)] = c;
      if (step(done + 1, std::max(used, c + 1))) return true;
    }
    color_[static_cast<std::size_t>(u)] = -1;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

}  // namespace

ChiResult chi_exact(const Graph& g, int budget) {
  if (static_cast<int>(g.order()) > budget) {
    throw BudgetExceeded("chi_exact: " + std::to_string(g.order()) + " vertices exceed the budget of " +
                         std::to_string(budget));
  }
  ChiResult out;
  if (g.empty()) return out;
  for (int k = max_clique_size(g);; ++k) {
    Dsatur search(g, k);
    if (!search.solve()) continue;
    out.chi = k;
    for (int u = 0; u < static_cast<int>(g.order()); ++u) out.witness[g.id(u)] = search.colors()[static_cast<std::size_t>(u)];
    return out;
  }
}

// ---------------------------------------------------------------------------
// edge colorings

std::vector<Edge> kempe_chain(const Graph& h, const EdgeColoring& col, Edge start, int c, int d) {
  start = norm(start);
  std::set<Edge> seen{start};
  std::deque<VertexId> queue{start.first, start.second};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : h.neighbor_ids(v)) {
      Edge e = norm({v, w});
      auto it = col.find(e);
      if (it == col.end() || (it->second != c && it->second != d)) continue;
      if (seen.insert(e).second) queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

void swap_colors(EdgeColoring& col, const std::vector<Edge>& chain, int c, int d) {
  for (const auto& e : chain) {
    int& x = col.at(e);
    x = x == c ? d : (x == d ? c : x);
  }
}

namespace {

int free_color(const Graph& h, const EdgeColoring& col, VertexId v) {
  unsigned mask = 0;
  for (VertexId w : h.neighbor_ids(v)) {
    auto it = col.find(norm({v, w}));
    if (it != col.end()) mask |= 1u << it->second;
  }
  for (int c = 0; c < 3; ++c) {
    if (!(mask & (1u << c))) return c;
  }
  return -1;
}

bool has_color(const Graph& h, const EdgeColoring& col, VertexId v, int c) {
  for (VertexId w : h.neighbor_ids(v)) {
    auto it = col.find(norm({v, w}));
    if (it != col.end() && it->second == c) return true;
  }
  return false;
}

}  // namespace

EdgeColoring edge_color_sparse(const Graph& h) {
  if (!is_sparse_subcubic(h)) throw ContractViolation("edge_color_sparse needs a sparse graph of maximum degree 3");
  EdgeColoring col;
  std::vector<Edge> rest;
  // Edges at degree-3 vertices form a bipartite graph (degree-3 vertices are
  // pairwise nonadjacent), where alternating-path repair always succeeds.
  for (const auto& e : h.edges()) {
    const bool heavy = h.degree(*h.local(e.first)) == 3 || h.degree(*h.local(e.second)) == 3;
    if (!heavy) {
      rest.push_back(e);
      continue;
    }
    auto [u, v] = e;
    int alpha = free_color(h, col, u);
    if (has_color(h, col, v, alpha)) {
      int beta = free_color(h, col, v);
      Edge at_v{};
      for (VertexId w : h.neighbor_ids(v)) {
        auto it = col.find(norm({v, w}));
        if (it != col.end() && it->second == alpha) at_v = it->first;
      }
      swap_colors(col, kempe_chain(h, col, at_v, alpha, beta), alpha, beta);
    }
    col[e] = alpha;
  }
  // Both ends have degree <= 2, so at most two colors are blocked.
  for (const auto& e : rest) {
    unsigned mask = 0;
    for (VertexId end : {e.first, e.second}) {
      for (VertexId w : h.neighbor_ids(end)) {
        auto it = col.find(norm({end, w}));
        if (it != col.end()) mask |= 1u << it->second;
      }
    }
    int c = 0;
    while (mask & (1u << c)) ++c;
    col[e] = c;
  }
  return col;
}

namespace detail {

std::optional<EdgeColoringPair> kempe_dual(const Graph& h, Edge e1, Edge e2, Edge u, const EdgeColoring& base) {
  e1 = norm(e1);
  e2 = norm(e2);
  u = norm(u);
  auto contains = [](const std::vector<Edge>& chain, Edge e) {
    return std::binary_search(chain.begin(), chain.end(), e);
  };
  EdgeColoringPair out{base, base};

  auto& same = out.same;
  if (same.at(e1) != same.at(e2)) {
    const int c1 = same.at(e1);
    const int c3 = same.at(e2);
    auto chain = kempe_chain(h, same, e1, c1, c3);
    if (!contains(chain, e2)) {
      swap_colors(same, chain, c1, c3);
    } else {
      const int c2 = same.at(u);
      swap_colors(same, kempe_chain(h, same, e1, c1, c2), c1, c2);
      auto second = kempe_chain(h, same, e2, c2, c3);
      swap_colors(same, second, c2, c3);
    }
  }

  auto& differ = out.differ;
  if (differ.at(e1) == differ.at(e2)) {
    const int c1 = differ.at(e1);
    const int c3 = 3 - c1 - differ.at(u);
    auto chain = kempe_chain(h, differ, e1, c1, c3);
    swap_colors(differ, chain, c1, c3);
  }

  if (!is_proper_edge_coloring(h, same) || same.at(e1) != same.at(e2)) return std::nullopt;
  if (!is_proper_edge_coloring(h, differ) || differ.at(e1) == differ.at(e2)) return std::nullopt;
  return out;
}

}  // namespace detail

namespace {

std::optional<Edge> middle_edge(const Graph& h, Edge e1, Edge e2) {
  e1 = norm(e1);
  e2 = norm(e2);
  for (VertexId y : {e1.first, e1.second}) {
    for (VertexId z : {e2.first, e2.second}) {
      if (y != z && h.adjacent(y, z)) return norm({y, z});
    }
  }
  return std::nullopt;
}

}  // namespace

bool lemma_shape(const Graph& h, Edge e1, Edge e2) {
  e1 = norm(e1);
  e2 = norm(e2);
  if (e1 == e2 || !h.adjacent(e1.first, e1.second) || !h.adjacent(e2.first, e2.second)) return false;
  for (int v = 0; v < static_cast<int>(h.order()); ++v) {
    if (h.degree(v) != 2 && h.degree(v) != 3) return false;
  }
  std::optional<Edge> light;
  for (const auto& e : h.edges()) {
    if (h.degree(*h.local(e.first)) == 2 && h.degree(*h.local(e.second)) == 2) {
      if (light) return false;
      light = e;
    }
  }
  if (!light || !is_sparse_subcubic(h)) return false;
  const auto [y, z] = *light;
  std::set<Edge> others;
  for (VertexId end : {y, z}) {
    for (VertexId w : h.neighbor_ids(end)) {
      Edge e = norm({end, w});
      if (e != *light) others.insert(e);
    }
  }
  return others == std::set<Edge>{e1, e2};
}

EdgeColoringPair lemma_dual_edge_colorings(const Graph& h, Edge e1, Edge e2) {
  if (!lemma_shape(h, e1, e2)) {
    throw ContractViolation("lemma_dual_edge_colorings: not a subdivided cubic graph with e1, e2 around the doubly subdivided edge");
  }
  auto u = middle_edge(h, e1, e2);
  auto out = detail::kempe_dual(h, e1, e2, *u, edge_color_sparse(h));
  if (!out) throw ClassificationFailure("Kempe swaps did not produce both edge colorings", to_compact_json(h));
  return *out;
}

VertexColoring color_basic(const Graph& g, const BasicVerdict& verdict) {
  VertexColoring out;
  if (verdict.branch == Branch::complete_bipartite && verdict.bipartition) {
    for (VertexId v : verdict.bipartition->left) out[v] = 0;
    for (VertexId v : verdict.bipartition->right) out[v] = 1;
  } else if (verdict.branch == Branch::line_of_sparse && verdict.root) {
    auto ec = edge_color_sparse(verdict.root->root);
    for (const auto& [v, e] : verdict.root->edge_of) out[v] = ec.at(norm(e));
  } else {
    throw ContractViolation("color_basic needs a complete_bipartite or line_of_sparse verdict with its witness");
  }
  if (!is_proper(g, out)) throw ClassificationFailure("basic coloring is not proper", to_compact_json(g));
  return out;
}

// ---------------------------------------------------------------------------
// merges

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

void require_palette3(const VertexColoring& c) {
  for (const auto& [v, col] : c) {
    if (col < 0 || col > 2) throw ContractViolation("merge expects colors in {0,1,2}");
  }
}

// First permutation p with p(from[v]) == to[v] for every v in `pins`.
std::optional<std::array<int, 3>> aligning_perm(const VertexColoring& from, const VertexColoring& to,
                                                const std::vector<VertexId>& pins) {
  for (const auto& p : kPerms) {
    bool ok = true;
    for (VertexId v : pins) {
      if (p[static_cast<std::size_t>(from.at(v))] != to.at(v)) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace

VertexColoring merge_at_clique(const std::vector<std::pair<Graph, VertexColoring>>& pieces,
                               const std::vector<VertexId>& k) {
  VertexColoring out;
  if (pieces.empty()) return out;
  for (const auto& [g, c] : pieces) {
    require_palette3(c);
    for (VertexId v : k) {
      if (!g.contains(v) || !c.count(v)) throw ContractViolation("merge_at_clique: cutset vertex missing from a piece");
    }
    if (!is_clique(g, k)) throw ContractViolation("merge_at_clique: cutset is not a clique in every piece");
  }
  const VertexColoring& ref = pieces.front().second;
  std::set<VertexId> kset(k.begin(), k.end());
  for (const auto& [g, c] : pieces) {
    auto p = aligning_perm(c, ref, k);
    if (!p) throw ContractViolation("merge_at_clique: pieces cannot be aligned on the cutset");
    for (const auto& [v, col] : c) {
      int mapped = (*p)[static_cast<std::size_t>(col)];
      auto [it, fresh] = out.emplace(v, mapped);
      if (!fresh && (!kset.count(v) || it->second != mapped)) {
        throw ContractViolation("merge_at_clique: pieces overlap outside the cutset");
      }
    }
  }
  return out;
}

VertexColoring merge_at_proper2(const DualColorings& dual, const VertexColoring& ty, VertexId a, VertexId b) {
  require_palette3(ty);
  const VertexColoring& pick = ty.at(a) == ty.at(b) ? dual.same : dual.differ;
  require_palette3(pick);
  auto p = aligning_perm(pick, ty, {a, b});
  if (!p) throw ContractViolation("merge_at_proper2: cannot align the cutset pair");
  VertexColoring out = ty;
  for (const auto& [v, col] : pick) {
    int mapped = (*p)[static_cast<std::size_t>(col)];
    auto [it, fresh] = out.emplace(v, mapped);
    if (!fresh && it->second != mapped) throw ContractViolation("merge_at_proper2: sides overlap outside {a,b}");
  }
  return out;
}

VertexColoring add_back_peeled(VertexColoring coloring, const RemovalLog& log) {
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    unsigned mask = 0;
    for (VertexId w : it->neighbors) {
      auto c = coloring.find(w);
      if (c == coloring.end()) throw ContractViolation("add_back_peeled: neighbor of a restored vertex is uncolored");
      if (c->second >= 0 && c->second < 3) mask |= 1u << c->second;
    }
    int c = 0;
    while (mask & (1u << c)) ++c;
    coloring[it->vertex] = c;
  }
  return coloring;
}

}  // namespace isk4col
