#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "isk4col/coloring.hpp"
#include "isk4col/cutsets.hpp"
#include "isk4col/errors.hpp"
#include "isk4col/generators.hpp"
#include "isk4col/recognition.hpp"
#include "oracles.hpp"

using namespace isk4col;

namespace {

Edge norm(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// The edge yz between the two new vertices and its neighbouring edges e1, e2.
std::pair<Edge, Edge> lemma_edges(const Graph& h) {
  for (auto [y, z] : h.edges()) {
    if (h.degree(*h.local(y)) != 2 || h.degree(*h.local(z)) != 2) continue;
    VertexId py = h.neighbor_ids(y)[0] == z ? h.neighbor_ids(y)[1] : h.neighbor_ids(y)[0];
    VertexId pz = h.neighbor_ids(z)[0] == y ? h.neighbor_ids(z)[1] : h.neighbor_ids(z)[0];
    return {norm(y, py), norm(z, pz)};
  }
  FAIL("no edge between degree-2 vertices");
  return {};
}

// Does some proper 3-edge-coloring give e1, e2 equal (want_same) or different colors?
bool realizable(const Graph& h, Edge e1, Edge e2, bool want_same) {
  auto es = h.edges();
  std::size_t i1 = 0, i2 = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i] == e1) i1 = i;
    if (es[i] == e2) i2 = i;
  }
  for (const auto& c : oracle::all_edge_colorings(h)) {
    if ((c[i1] == c[i2]) == want_same) return true;
  }
  return false;
}

bool dual_ok(const Graph& tx, const DualColorings& d) {
  return is_proper(tx, d.same) && is_proper(tx, d.differ) && palette_size(d.same) <= 3 && palette_size(d.differ) <= 3 &&
         d.same.at(d.a) == d.same.at(d.b) && d.differ.at(d.a) != d.differ.at(d.b);
}

// Whether tx admits any 3-coloring with a, b equal / different.
std::pair<bool, bool> exhaustive_dual(const Graph& tx, VertexId a, VertexId b) {
  bool same = false, differ = false;
  int la = *tx.local(a), lb = *tx.local(b);
  for (const auto& c : oracle::all_vertex_colorings(tx)) {
    (c[la] == c[lb] ? same : differ) = true;
  }
  return {same, differ};
}

}  // namespace

TEST_CASE("palette and properness") {
  Graph c4 = cycle_graph(4);
  VertexColoring c{{0, 0}, {1, 1}, {2, 0}, {3, 1}};
  CHECK(is_proper(c4, c));
  CHECK(palette_size(c) == 2);
  c[3] = 0;
  CHECK_FALSE(is_proper(c4, c));
  c.erase(3);
  CHECK_FALSE(is_proper(c4, c));
  VertexColoring extra{{0, 0}, {1, 1}, {2, 0}, {3, 1}, {9, 2}};
  CHECK_FALSE(is_proper(c4, extra));
}

TEST_CASE("chromatic numbers") {
  CHECK(chi_exact(cycle_graph(5)).chi == 3);
  CHECK(chi_exact(complete_bipartite(3, 3)).chi == 2);
  CHECK(chi_exact(petersen_graph()).chi == 3);
  CHECK(chi_exact(complete_graph(5)).chi == 5);
  CHECK(chi_exact(Graph{}).chi == 0);
  CHECK(chi_exact(path_graph(1)).chi == 1);
  CHECK_THROWS_AS(chi_exact(cycle_graph(25)), BudgetExceeded);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 120; ++t) {
    Graph g = oracle::random_graph(rng, 4 + t % 6, 0.2 + 0.1 * (t % 6));
    auto r = chi_exact(g);
    CHECK(r.chi == oracle::chromatic_number(g));
    CHECK(is_proper(g, r.witness));
    CHECK(palette_size(r.witness) == r.chi);
  }
}

TEST_CASE("sparse edge coloring") {
  for (const Graph& h : {complete_bipartite(2, 3), cycle_graph(6), cycle_graph(7), subdivide(complete_graph(4)),
                         subdivide(petersen_graph()), path_graph(5)}) {
    CHECK(is_proper_edge_coloring(h, edge_color_sparse(h)));
  }
  CHECK_THROWS_AS(edge_color_sparse(complete_graph(4)), ContractViolation);
  CHECK_THROWS_AS(edge_color_sparse(complete_bipartite(1, 4)), ContractViolation);
  for (int n : {6, 8, 10}) {
    for (std::uint64_t s = 0; s < 6; ++s) {
      Graph h = subdivide(random_cubic(s, n));
      CHECK(is_proper_edge_coloring(h, edge_color_sparse(h)));
    }
  }
}

TEST_CASE("kempe chains are maximal two-colored paths") {
  Graph h = cycle_graph(6);
  EdgeColoring col{{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 0}, {{3, 4}, 1}, {{4, 5}, 0}, {{0, 5}, 2}};
  REQUIRE(is_proper_edge_coloring(h, col));
  auto chain = kempe_chain(h, col, {0, 1}, 0, 1);
  CHECK(chain.size() == 5);
  swap_colors(col, chain, 0, 1);
  CHECK(is_proper_edge_coloring(h, col));
  CHECK(col.at({0, 1}) == 1);
}

TEST_CASE("lemma shape") {
  Graph h = subdivide(complete_graph(4), Edge{0, 1});
  CHECK(h.order() == 11);
  CHECK(h.size() == 13);
  auto [e1, e2] = lemma_edges(h);
  CHECK(lemma_shape(h, e1, e2));
  CHECK_FALSE(lemma_shape(h, e1, e1));
  Graph plain = subdivide(complete_graph(4));
  CHECK_FALSE(lemma_shape(plain, plain.edges()[0], plain.edges()[1]));
  CHECK_THROWS_AS(lemma_dual_edge_colorings(plain, plain.edges()[0], plain.edges()[1]), ContractViolation);
}

TEST_CASE("dual edge colorings exist and match exhaustive search") {
  std::vector<Graph> bases{complete_graph(4), complete_bipartite(3, 3), prism_graph()};
  for (const Graph& base : bases) {
    for (auto e : base.edges()) {
      Graph h = subdivide(base, e);
      auto [e1, e2] = lemma_edges(h);
      auto pair = lemma_dual_edge_colorings(h, e1, e2);
      CHECK(is_proper_edge_coloring(h, pair.same));
      CHECK(is_proper_edge_coloring(h, pair.differ));
      CHECK(pair.same.at(e1) == pair.same.at(e2));
      CHECK(pair.differ.at(e1) != pair.differ.at(e2));
      if (base.order() == 4) {
        CHECK(realizable(h, e1, e2, true));
        CHECK(realizable(h, e1, e2, false));
      }
    }
  }
}

TEST_CASE("coloring basic graphs") {
  auto k33 = complete_bipartite(3, 3);
  auto c = color_basic(k33, classify_basic(k33));
  CHECK(is_proper(k33, c));
  CHECK(palette_size(c) == 2);
  for (const Graph& g : {prism_graph(), line_graph(subdivide(complete_graph(4))), cycle_graph(5), cycle_graph(9)}) {
    auto v = classify_basic(g);
    REQUIRE(v.branch == Branch::line_of_sparse);
    auto col = color_basic(g, v);
    CHECK(is_proper(g, col));
    CHECK(palette_size(col) <= 3);
  }
  BasicVerdict none;
  CHECK_THROWS_AS(color_basic(complete_graph(4), none), ContractViolation);
}

TEST_CASE("dual colorings: cycles") {
  Graph c5 = cycle_graph(5);
  auto d = dual_colorings_for_side(c5, 0, 2);
  CHECK(d.route == DualRoute::cycle);
  CHECK(dual_ok(c5, d));
  Graph c4 = cycle_graph(4);
  auto e = dual_colorings_for_side(c4, 0, 2);
  CHECK(e.route == DualRoute::cycle);
  CHECK(dual_ok(c4, e));
}

TEST_CASE("dual colorings: subdivided prism") {
  Side s = prism_side();
  auto d = dual_colorings_for_side(s.g, s.a, s.b);
  CHECK(d.route == DualRoute::prism7);
  CHECK(dual_ok(s.g, d));
  // the seven-vertex graph itself admits both kinds
  std::vector<Edge> e = s.g.edges();
  e.push_back({s.a, 6});
  e.push_back({s.b, 6});
  Graph seven = build_graph(e, 7);
  auto [same, differ] = exhaustive_dual(seven, s.a, s.b);
  CHECK(same);
  CHECK(differ);
}

TEST_CASE("dual colorings: line graph sides") {
  for (const Graph& cubic : {complete_graph(4), complete_bipartite(3, 3), prism_graph()}) {
    for (auto tw : cubic.edges()) {
      Side s = line_side(cubic, tw);
      auto d = dual_colorings_for_side(s.g, s.a, s.b);
      CHECK(d.route == DualRoute::line_graph);
      CHECK(dual_ok(s.g, d));
    }
  }
}

TEST_CASE("dual colorings: exhaustive search and failure") {
  Graph k23 = complete_bipartite(2, 3);
  auto d = dual_colorings_for_side(k23, 0, 1);
  CHECK(d.route == DualRoute::fallback);
  CHECK(dual_ok(k23, d));
  DualOptions no_fallback;
  no_fallback.allow_fallback = false;
  CHECK_THROWS_AS(dual_colorings_for_side(k23, 0, 1, no_fallback), ClassificationFailure);
  // diamond minus its middle edge: a, b must share a color
  Graph kite = build_graph(std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 4);
  CHECK(exhaustive_dual(kite, 0, 1) == std::pair<bool, bool>{true, false});
  CHECK_THROWS_AS(dual_colorings_for_side(kite, 0, 1), ClassificationFailure);
  DualOptions tiny;
  tiny.fallback_budget = 2;
  CHECK_THROWS_AS(dual_colorings_for_side(k23, 0, 1, tiny), BudgetExceeded);
}

TEST_CASE("merge at a clique permutes palettes") {
  Graph left = build_graph(std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}, 3);
  Graph right = Graph::from_id_edges({1, 2, 3}, std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  VertexColoring cl{{0, 0}, {1, 1}, {2, 2}};
  VertexColoring cr{{1, 0}, {2, 2}, {3, 1}};
  auto merged = merge_at_clique({{left, cl}, {right, cr}}, {1, 2});
  Graph whole = build_graph(std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, 4);
  CHECK(is_proper(whole, merged));
  CHECK(merged.at(1) == 1);
  CHECK(merged.at(2) == 2);
  CHECK(merged.at(3) == 0);
  CHECK_THROWS_AS(merge_at_clique({{left, cl}, {right, cr}}, {0, 3}), ContractViolation);
  // empty clique: disjoint union
  Graph far = Graph::from_id_edges({7, 8}, std::vector<Edge>{{7, 8}});
  auto u = merge_at_clique({{left, cl}, {far, {{7, 0}, {8, 1}}}}, {});
  CHECK(u.size() == 5);
}

TEST_CASE("merge at a clique keeps each piece up to a palette permutation") {
  std::mt19937_64 rng(40);
  int merged = 0;
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(rng, 6 + t % 8, 0.3 + 0.05 * (t % 4));
    if (!is_connected(g)) continue;
    auto cut = find_clique_cutset(g);
    if (!cut) continue;
    std::vector<std::pair<Graph, VertexColoring>> pieces;
    bool colorable = true;
    for (auto comp : cut->components) {
      comp.insert(comp.end(), cut->clique.begin(), cut->clique.end());
      Graph piece = induced_subgraph(g, comp);
      auto chi = chi_exact(piece);
      if (chi.chi > 3) colorable = false;
      // scramble the palette so alignment has work to do
      std::vector<int> perm{0, 1, 2};
      std::shuffle(perm.begin(), perm.end(), rng);
      for (auto& [v, c] : chi.witness) c = perm[static_cast<std::size_t>(c)];
      pieces.push_back({piece, chi.witness});
    }
    if (!colorable) continue;
    ++merged;
    auto m = merge_at_clique(pieces, cut->clique);
    CHECK(is_proper(g, m));
    for (const auto& [piece, col] : pieces) {
      std::map<int, int> perm;
      bool bijective = true;
      for (auto [v, c] : col) {
        auto [it, fresh] = perm.emplace(c, m.at(v));
        if (!fresh && it->second != m.at(v)) bijective = false;
      }
      std::set<int> image;
      for (auto [from, to] : perm) image.insert(to);
      CHECK(bijective);
      CHECK(image.size() == perm.size());
    }
  }
  CHECK(merged > 30);
}

TEST_CASE("merge at a proper 2-cutset") {
  Graph c4 = cycle_graph(4);
  auto d = dual_colorings_for_side(c4, 0, 2);
  VertexColoring ty_same{{0, 2}, {2, 2}, {5, 0}};
  auto m = merge_at_proper2(d, ty_same, 0, 2);
  CHECK(m.at(0) == 2);
  CHECK(m.at(2) == 2);
  CHECK(m.at(5) == 0);
  CHECK(m.at(1) != 2);
  CHECK(m.at(3) != 2);
  VertexColoring ty_differ{{0, 1}, {2, 0}, {5, 2}};
  auto n = merge_at_proper2(d, ty_differ, 0, 2);
  CHECK(n.at(0) == 1);
  CHECK(n.at(2) == 0);
  CHECK(n.at(1) == 2);
  CHECK(n.at(3) == 2);
}

TEST_CASE("peeled vertices come back with free colors") {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    Graph g = oracle::random_graph(rng, 6 + t % 8, 0.15 + 0.05 * (t % 6));
    auto p = peel_low_degree(g);
    auto chi = chi_exact(p.residual);
    if (chi.chi > 3) continue;
    ++checked;
    auto full = add_back_peeled(chi.witness, p.log);
    CHECK(is_proper(g, full));
    CHECK(palette_size(full) <= 3);
  }
  CHECK(checked > 100);
}
