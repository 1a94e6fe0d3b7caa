#include <doctest.h>

#include <random>

#include "isk4col/coloring.hpp"
#include "isk4col/errors.hpp"
#include "isk4col/generators.hpp"
#include "isk4col/io.hpp"
#include "isk4col/pipeline.hpp"
#include "oracles.hpp"

using namespace isk4col;

TEST_CASE("prism and K33") {
  auto prism = color_class_member(prism_graph());
  CHECK(prism.proper);
  CHECK(prism.palette == 3);
  CHECK(verify_certificate(prism_graph(), prism));
  CHECK(prism.stats.basic_leaves == 1);
  CHECK(prism.stats.branches.at("line_of_sparse") == 1);
  auto k33 = color_class_member(complete_bipartite(3, 3));
  CHECK(k33.palette == 2);
  CHECK(verify_certificate(complete_bipartite(3, 3), k33));
}

TEST_CASE("large series-parallel graphs are colored by peeling alone") {
  Graph g = gen_series_parallel(2, 200);
  auto cert = color_class_member(g);
  CHECK(verify_certificate(g, cert));
  CHECK(cert.stats.basic_leaves == 0);
  CHECK(cert.tree.node_count == 1);
  CHECK(cert.palette <= 3);
}

TEST_CASE("hash") {
  CHECK(graph_hash(prism_graph()).size() == 16);
  CHECK(graph_hash(prism_graph()) == graph_hash(prism_graph()));
  CHECK(graph_hash(prism_graph()) != graph_hash(complete_bipartite(3, 3)));
  CHECK(graph_hash(path_graph(3)) != graph_hash(cycle_graph(3)));
}

TEST_CASE("tampered certificates fail verification") {
  Graph g = prism_graph();
  auto cert = color_class_member(g);
  REQUIRE(verify_certificate(g, cert));
  auto t1 = cert;
  t1.coloring[0] = t1.coloring[1];
  CHECK_FALSE(verify_certificate(g, t1));
  auto t2 = cert;
  t2.graph_hash = "0000000000000000";
  CHECK_FALSE(verify_certificate(g, t2));
  auto t3 = cert;
  t3.coloring.erase(5);
  CHECK_FALSE(verify_certificate(g, t3));
  auto t4 = cert;
  t4.palette = 2;
  CHECK_FALSE(verify_certificate(g, t4));
  auto t5 = cert;
  for (auto& [v, c] : t5.coloring) c += 3;
  CHECK_FALSE(verify_certificate(g, t5));
  CHECK_FALSE(verify_certificate(complete_bipartite(3, 3), cert));
}

TEST_CASE("hub graphs go through the proper 2-cutset loop") {
  // each step cuts off the smallest side; once two sides remain the rest peels
  auto line = [] { return line_side(complete_graph(4), {0, 1}); };
  struct Case {
    std::vector<Side> sides;
    int steps;
    const char* route;
  };
  std::vector<Case> cases{
      {{prism_side(), prism_side(), prism_side()}, 1, "prism7"},
      {{prism_side(), prism_side(), prism_side(), prism_side()}, 2, "prism7"},
      {{line(), line(), line()}, 1, "line_graph"},
      {{line(), line(), line(), line()}, 2, "line_graph"},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    Graph g = gen_hub(i, cases[i].sides);
    auto cert = color_class_member(g);
    CHECK(verify_certificate(g, cert));
    CHECK(cert.stats.proper2_steps == cases[i].steps);
    CHECK(cert.stats.unclassified == 0);
    CHECK(cert.stats.fallbacks == 0);
    CHECK(cert.stats.routes.at(cases[i].route) == cases[i].steps);
    REQUIRE(cert.leaves.size() == 1);
    CHECK(cert.leaves[0].steps.front() == Branch::proper_2_cutset);
    CHECK(cert.leaves[0].nested == 1);
  }
}

TEST_CASE("hub of three prism sides is an exact class member with chi 3") {
  Graph g = gen_hub(0, {prism_side(), prism_side(), prism_side()});
  CHECK(g.order() == 20);
  auto cert = color_class_member(g);
  CHECK(cert.palette == chi_exact(g, 24).chi);
}

TEST_CASE("results do not depend on jobs") {
  std::vector<Graph> gs{gen_hub(3, {prism_side(), prism_side(), prism_side()}),
                        gen_glue(4, {prism_graph(), cycle_graph(5), prism_graph()}, GlueMode::edge),
                        gen_series_parallel(5, 300)};
  for (const Graph& g : gs) {
    PipelineOptions one;
    PipelineOptions four;
    four.jobs = 4;
    auto a = color_class_member(g, one);
    auto b = color_class_member(g, four);
    CHECK(a.coloring == b.coloring);
    CHECK(a.tree.cutsets == b.tree.cutsets);
    CHECK(a.stats.routes == b.stats.routes);
  }
}

TEST_CASE("repeated runs give identical certificates") {
  for (const Graph& g : {gen_hub(6, {prism_side(), prism_side(), prism_side(), prism_side()}),
                         gen_line_of_subdivided_cubic(2, prism_graph()), gen_series_parallel(8, 500)}) {
    CHECK(to_json(color_class_member(g)) == to_json(color_class_member(g)));
  }
}

TEST_CASE("non-members that reach an unclassified leaf raise with the subgraph") {
  try {
    color_class_member(complete_graph(4));
    FAIL("expected ClassificationFailure");
  } catch (const ClassificationFailure& e) {
    CHECK(std::string(e.subgraph()).find("\"ids\":[0,1,2,3]") != std::string::npos);
  }
}

TEST_CASE("small members are 3-colored") {
  std::mt19937_64 rng(17);
  int members = 0;
  for (int t = 0; t < 400 && members < 60; ++t) {
    Graph g = oracle::random_graph(rng, 6 + t % 7, 0.25 + 0.05 * (t % 5));
    if (!oracle::is_member(g)) continue;
    ++members;
    auto cert = color_class_member(g);
    CHECK(verify_certificate(g, cert));
    CHECK(cert.palette <= 3);
    CHECK(cert.palette >= oracle::chromatic_number(g));
  }
  CHECK(members >= 30);
}
