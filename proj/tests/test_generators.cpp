#include <doctest.h>

#include "isk4col/errors.hpp"
#include "isk4col/generators.hpp"
#include "isk4col/patterns.hpp"
#include "isk4col/recognition.hpp"
#include "oracles.hpp"

using namespace isk4col;

TEST_CASE("named graphs") {
  CHECK(petersen_graph().order() == 10);
  CHECK(petersen_graph().size() == 15);
  CHECK(prism_graph().size() == 9);
  CHECK(complete_bipartite(2, 5).size() == 10);
  CHECK(subdivide(complete_graph(4)).order() == 10);
  Graph twice = subdivide(complete_graph(4), Edge{0, 1});
  CHECK(twice.order() == 11);
  CHECK(twice.size() == 13);
  CHECK(line_graph(complete_bipartite(2, 3)) == line_graph(complete_bipartite(2, 3)));
  CHECK(are_isomorphic(line_graph(complete_bipartite(2, 3)), prism_graph()));
  CHECK_FALSE(are_isomorphic(prism_graph(), complete_bipartite(3, 3)));
  CHECK_THROWS_AS(subdivide(cycle_graph(4), Edge{0, 2}), ContractViolation);
}

TEST_CASE("series-parallel generator") {
  for (int n : {1, 2, 5, 12, 13}) {
    Graph g = gen_series_parallel(7, n);
    CHECK(g.order() == static_cast<std::size_t>(n));
    CHECK(is_connected(g));
    CHECK_FALSE(oracle::has_k4_minor(g));
    CHECK(oracle::is_member(g));
  }
  CHECK(gen_series_parallel(3, 40) == gen_series_parallel(3, 40));
  CHECK_FALSE(gen_series_parallel(3, 40) == gen_series_parallel(4, 40));
}

TEST_CASE("connected cubic graphs up to isomorphism") {
  CHECK(cubic_graphs(4).size() == 1);
  CHECK(cubic_graphs(6).size() == 2);
  CHECK(cubic_graphs(8).size() == 5);
  CHECK(cubic_graphs(10).size() == 19);
  for (const Graph& g : cubic_graphs(8)) {
    CHECK(g.min_degree() == 3);
    CHECK(g.max_degree() == 3);
    CHECK(is_connected(g));
  }
  Graph r = random_cubic(5, 20);
  CHECK(r.order() == 20);
  CHECK(r.size() == 30);
  CHECK(is_connected(r));
}

TEST_CASE("line graphs of subdivided cubic graphs are members") {
  Graph a = gen_line_of_subdivided_cubic(1, complete_graph(4));
  CHECK(a.order() == 12);
  CHECK(oracle::is_member(a));
  CHECK(classify_basic(a).branch == Branch::line_of_sparse);
  LineOfCubicOptions twice;
  twice.one_edge_twice = true;
  Graph b = gen_line_of_subdivided_cubic(1, complete_graph(4), twice);
  CHECK(b.order() == 13);
  CHECK(oracle::is_member(b));
  Graph c = gen_line_of_subdivided_cubic(2, complete_bipartite(3, 3));
  CHECK(c.order() == 18);
  CHECK(verify_membership(c).verdict == Verdict::member);
  CHECK(gen_line_of_subdivided_cubic(9, prism_graph()) == gen_line_of_subdivided_cubic(9, prism_graph()));
}

TEST_CASE("gluing") {
  Graph v = gen_glue(1, {prism_graph(), cycle_graph(5)}, GlueMode::vertex);
  CHECK(v.order() == 10);
  CHECK(oracle::is_member(v));
  Graph e = gen_glue(2, {cycle_graph(5), cycle_graph(6), prism_graph()}, GlueMode::edge);
  CHECK(e.order() == 13);
  CHECK(oracle::is_member(e));
  // every prism vertex lies on a triangle, so a shared vertex makes a bowtie
  CHECK_THROWS_AS(gen_glue(3, {prism_graph(), prism_graph()}, GlueMode::vertex), GenerationError);
}

TEST_CASE("hub graphs") {
  Graph g = gen_hub(4, {prism_side(), prism_side(), prism_side()});
  CHECK(g.order() == 20);
  CHECK(is_connected(g));
  CHECK_FALSE(oracle::has_diamond(g));
  CHECK_FALSE(oracle::has_bowtie(g));
  CHECK(verify_membership(g).verdict == Verdict::member);
  CHECK_FALSE(find_clique_cutset(g));
  Side s = line_side(complete_graph(4), {0, 1});
  CHECK(s.g.order() == 12);
  CHECK_FALSE(s.g.adjacent(s.a, s.b));
  CHECK(gen_hub(4, {prism_side(), prism_side(), prism_side()}) == g);
}

TEST_CASE("emitted members pass the exact oracle") {
  Isk4Options o;
  o.budget = 22;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph sp = gen_series_parallel(s, 10 + static_cast<int>(s % 13));
    auto r = verify_membership(sp, o);
    CHECK(r.verdict == Verdict::member);
    CHECK(r.mode == SearchMode::exact);
  }
  for (std::uint64_t s = 0; s < 10; ++s) {
    try {
      Graph g = gen_glue(s, {prism_graph(), cycle_graph(5), gen_series_parallel(s, 6)}, s % 2 ? GlueMode::vertex : GlueMode::edge);
      CHECK(verify_membership(g, o).verdict == Verdict::member);
    } catch (const GenerationError&) {
    }
  }
}

TEST_CASE("planted non-members") {
  for (auto kind : {PatternKind::diamond, PatternKind::bowtie, PatternKind::isk4}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Graph g = gen_nonmember(seed, kind, 4);
      CHECK(is_connected(g));
      if (g.order() <= 14) CHECK_FALSE(oracle::is_member(g));
      CHECK(verify_membership(g).verdict == Verdict::nonmember);
    }
  }
}
