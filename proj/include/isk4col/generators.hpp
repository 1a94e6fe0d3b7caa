#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isk4col/graph.hpp"
#include "isk4col/patterns.hpp"

namespace isk4col {

// Named graphs on ids 0..n-1.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int p, int q);  // parts {0..p-1}, {p..p+q-1}
Graph prism_graph();                     // triangles {0,1,2}, {3,4,5}; matching i -- i+3
Graph petersen_graph();

/// Every edge replaced by a path of length 2; `twice`, if given, by a path of
/// length 3. New vertices get ids after the existing ones.
Graph subdivide(const Graph& g, std::optional<Edge> twice = std::nullopt);

/// L(h) on ids 0..m-1, vertex i being the i-th edge of h.edges().
Graph line_graph(const Graph& h);

/// Isomorphism test by backtracking; meant for small graphs.
bool are_isomorphic(const Graph& g, const Graph& h);

/// Series-parallel member on n vertices grown by subdivisions, pendant
/// vertices and triangles hung on triangle-free edges.
Graph gen_series_parallel(std::uint64_t seed, int n);

/// Random connected simple cubic graph on n (even, >= 4) vertices.
Graph random_cubic(std::uint64_t seed, int n);

/// Connected cubic graphs on n vertices up to isomorphism (n <= 10), found
/// by seeded sampling until no new class shows up for a long stretch.
std::vector<Graph> cubic_graphs(int n, std::uint64_t seed = 1);

struct LineOfCubicOptions {
  bool one_edge_twice = false;
  std::size_t oracle_budget = 22;
};

/// L(H) for H the subdivision of a cubic base graph, with ids shuffled by
/// the seed. Checked with the membership oracle when small enough; raises
/// GenerationError if the oracle rejects.
Graph gen_line_of_subdivided_cubic(std::uint64_t seed, const Graph& base, const LineOfCubicOptions& opts = {});

enum class GlueMode { vertex, edge };

/// Glues the parts one after another on a random vertex or edge, rejecting
/// gluings that create a diamond, bowtie or (within `oracle_budget`) an
/// ISK4. Raises GenerationError after `retries` failed attempts on a part.
Graph gen_glue(std::uint64_t seed, const std::vector<Graph>& parts, GlueMode mode, int retries = 64,
               std::size_t oracle_budget = 22);

/// One side of a proper 2-cutset, attached through a and b.
struct Side {
  Graph g;
  VertexId a = 0;
  VertexId b = 0;
};

/// The prism minus one matching edge ab.
Side prism_side();

/// L(H) - u, where H subdivides every edge of a cubic graph once except
/// `twice`, which is subdivided twice, and u is the edge between the two
/// new vertices on it; a and b are the neighbors of u.
Side line_side(const Graph& cubic, Edge twice);

/// Sides joined through two hubs: v adjacent to every side's a, w to every
/// side's b, plus `paths` extra v-w paths of length two. With three or more
/// sides {v,w} and each {a,b} are proper 2-cutsets and the graph has no
/// clique cutset. Ids are shuffled by the seed.
Graph gen_hub(std::uint64_t seed, const std::vector<Side>& sides, int paths = 0);

/// A planted diamond, bowtie or subdivided K4 with `padding` extra vertices
/// hung on as trees, ids shuffled by the seed.
Graph gen_nonmember(std::uint64_t seed, PatternKind kind, int padding = 6);

}  // namespace isk4col
