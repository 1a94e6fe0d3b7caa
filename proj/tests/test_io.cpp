#include <doctest.h>

#include <sstream>

#include "isk4col/errors.hpp"
#include "isk4col/generators.hpp"
#include "isk4col/io.hpp"
#include "isk4col/pipeline.hpp"

using namespace isk4col;
using nlohmann::json;

namespace {

Graph parse(const std::string& s) {
  std::istringstream in(s);
  return read_dimacs(in);
}

}  // namespace

TEST_CASE("DIMACS round trip") {
  for (const Graph& g : {prism_graph(), petersen_graph(), path_graph(1), Graph{}}) {
    std::ostringstream out;
    write_dimacs(out, g);
    CHECK(parse(out.str()) == g);
  }
  Graph g = parse("c a comment\np edge 3 2\n\ne 1 2\nc mid\ne 3 2\n");
  CHECK(g == path_graph(3));
  CHECK(parse("p col 2 1\ne 2 1\n").size() == 1);
}

TEST_CASE("malformed DIMACS") {
  for (const char* s : {"", "e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\ne 1 1\n", "p edge 2 2\ne 1 2\n",
                        "p edge 2 1\ne 1 2 3\n", "p graph 2 1\ne 1 2\n", "p edge 2 1\np edge 2 1\ne 1 2\n",
                        "x 1\n", "p edge -1 0\n", "p edge 2 1\ne 0 1\n", "p edge 2 1\ne one two\n"}) {
    CHECK_THROWS_AS(parse(s), MalformedInput);
  }
  Graph sparse_ids = Graph::from_id_edges({0, 5}, std::vector<Edge>{{0, 5}});
  std::ostringstream out;
  CHECK_THROWS_AS(write_dimacs(out, sparse_ids), ContractViolation);
}

TEST_CASE("JSON graphs") {
  Graph g = petersen_graph();
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(graph_from_json(json::parse(R"({"n":3,"edges":[[0,1],[1,2]]})")) == path_graph(3));
  for (const char* s : {R"({"edges":[]})", R"({"n":2,"edges":[[0,2]]})", R"({"n":2,"edges":[[0]]})",
                        R"({"n":2,"edges":[[0,"1"]]})", R"({"n":-1,"edges":[]})", R"({"n":2,"edges":[[1,1]]})"}) {
    CHECK_THROWS_AS(graph_from_json(json::parse(s)), MalformedInput);
  }
  CHECK(format_from_string("json") == GraphFormat::json);
  CHECK(format_from_string("dimacs") == GraphFormat::dimacs);
  CHECK_FALSE(format_from_string("xml"));
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.col"), MalformedInput);
}

TEST_CASE("certificate JSON round trip") {
  Graph g = gen_hub(2, {prism_side(), prism_side(), prism_side()});
  auto cert = color_class_member(g);
  json j = to_json(cert);
  auto back = certificate_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(verify_certificate(g, back));
  CHECK(back.coloring == cert.coloring);
  CHECK(back.stats.routes == cert.stats.routes);
  REQUIRE(back.leaves.size() == cert.leaves.size());
  CHECK(back.leaves[0].steps == cert.leaves[0].steps);
}

TEST_CASE("malformed certificates") {
  json j = to_json(color_class_member(prism_graph()));
  auto broken = [&](auto edit) {
    json k = j;
    edit(k);
    CHECK_THROWS_AS(certificate_from_json(k), MalformedInput);
  };
  broken([](json& k) { k.erase("coloring"); });
  broken([](json& k) { k["schema_version"] = 2; });
  broken([](json& k) { k["coloring"]["x1"] = 0; });
  broken([](json& k) { k["coloring"]["0"] = "red"; });
  broken([](json& k) { k["leaves"][0]["steps"][0] = "mystery"; });
  broken([](json& k) { k["stats"].erase("routes"); });
  broken([](json& k) { k["proper"] = 1; });
}

TEST_CASE("tree and verdict JSON") {
  Graph g = prism_graph();
  json t = to_json(build_clique_tree(g));
  CHECK(t["layers"] == 1);
  CHECK(t["nodes"][0]["kind"] == "basic_leaf");
  json v = to_json(classify_basic(g));
  CHECK(v["branch"] == "line_of_sparse");
  CHECK(v["root"]["edges"].size() == 6);
  json m = to_json(verify_membership(complete_graph(4)));
  CHECK(m["verdict"] == "nonmember");
  CHECK(m["witness"]["kind"] == "isk4");
}
