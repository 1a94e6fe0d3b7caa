#include "isk4col/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "isk4col/errors.hpp"

namespace isk4col {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

Graph on_range(int n, const std::vector<Edge>& edges) {
  std::vector<VertexId> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return Graph::from_id_edges(std::move(ids), edges);
}

// Maps local index i of g to id perm[i].
Graph relabel(const Graph& g, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  for (int u = 0; u < static_cast<int>(g.order()); ++u) {
    for (int w : g.neighbors(u)) {
      if (u < w) edges.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(w)]});
    }
  }
  return Graph::from_id_edges(perm, edges);
}

Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<VertexId> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

Graph compact(const Graph& g) {
  std::vector<VertexId> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  return relabel(g, perm);
}

}  // namespace

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return on_range(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return on_range(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return on_range(n, e);
}

Graph complete_bipartite(int p, int q) {
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) e.push_back({i, p + j});
  }
  return on_range(p + q, e);
}

Graph prism_graph() {
  return on_range(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return on_range(10, e);
}

Graph subdivide(const Graph& g, std::optional<Edge> twice) {
  if (twice && twice->first > twice->second) std::swap(twice->first, twice->second);
  if (twice && !g.adjacent(twice->first, twice->second)) throw ContractViolation("subdivide: edge to subdivide twice is not in the graph");
  std::vector<VertexId> ids(g.ids().begin(), g.ids().end());
  VertexId next = ids.empty() ? 0 : ids.back() + 1;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (twice && *twice == Edge{u, v}) {
      VertexId y = next++;
      VertexId z = next++;
      ids.push_back(y);
      ids.push_back(z);
      edges.insert(edges.end(), {{u, y}, {y, z}, {z, v}});
    } else {
      VertexId w = next++;
      ids.push_back(w);
      edges.insert(edges.end(), {{u, w}, {w, v}});
    }
  }
  return Graph::from_id_edges(std::move(ids), edges);
}

Graph line_graph(const Graph& h) {
  auto es = h.edges();
  std::vector<std::vector<int>> at(h.order());
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    at[static_cast<std::size_t>(*h.local(es[static_cast<std::size_t>(i)].first))].push_back(i);
    at[static_cast<std::size_t>(*h.local(es[static_cast<std::size_t>(i)].second))].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& list : at) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) edges.push_back({list[i], list[j]});
    }
  }
  return on_range(static_cast<int>(es.size()), edges);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  const int n = static_cast<int>(g.order());
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto degrees = [](const Graph& x) {
    std::vector<int> d;
    for (int u = 0; u < static_cast<int>(x.order()); ++u) d.push_back(x.degree(u));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;
  // map g's vertices in BFS order so each new one is tied to mapped ones
  std::vector<int> order;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      for (int w : g.neighbors(order[i])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<int> map(g.order(), -1);
  std::vector<char> used(h.order(), 0);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    int u = order[i];
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)] || h.degree(x) != g.degree(u)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        int w = order[j];
        ok = g.adjacent_local(u, w) == h.adjacent_local(x, map[static_cast<std::size_t>(w)]);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(u)] = x;
      used[static_cast<std::size_t>(x)] = 1;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(x)] = 0;
    }
    map[static_cast<std::size_t>(u)] = -1;
    return false;
  };
  return extend(extend, 0);
}

Graph gen_series_parallel(std::uint64_t seed, int n) {
  if (n < 1) throw ContractViolation("gen_series_parallel needs n >= 1");
  Rng rng(seed);
  if (n == 1) return on_range(1, {});
  std::vector<Edge> edges{{0, 1}};
  // once on a triangle a vertex stays excluded, even if the triangle is
  // later subdivided away
  std::vector<char> on_triangle(static_cast<std::size_t>(n), 0);
  int count = 2;
  while (count < n) {
    const int w = count;
    const int op = pick(rng, 100);
    const int i = pick(rng, static_cast<int>(edges.size()));
    auto [u, v] = edges[static_cast<std::size_t>(i)];
    if (op < 40) {
      edges[static_cast<std::size_t>(i)] = {u, w};
      edges.push_back({w, v});
    } else if (op < 75) {
      if (on_triangle[static_cast<std::size_t>(u)] || on_triangle[static_cast<std::size_t>(v)]) continue;
      edges.push_back({u, w});
      edges.push_back({v, w});
      on_triangle[static_cast<std::size_t>(u)] = on_triangle[static_cast<std::size_t>(v)] = 1;
      on_triangle[static_cast<std::size_t>(w)] = 1;
    } else {
      edges.push_back({pick(rng, count), w});
    }
    ++count;
  }
  return on_range(n, edges);
}

Graph random_cubic(std::uint64_t seed, int n) {
  if (n < 4 || n % 2) throw ContractViolation("random_cubic needs an even n >= 4");
  Rng rng(seed);
  for (;;) {
    std::vector<int> points(static_cast<std::size_t>(3 * n));
    for (int i = 0; i < 3 * n; ++i) points[static_cast<std::size_t>(i)] = i / 3;
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Edge e{std::min(points[i], points[i + 1]), std::max(points[i], points[i + 1])};
      simple = e.first != e.second && seen.insert(e).second;
    }
    if (!simple) continue;
    Graph g = on_range(n, {seen.begin(), seen.end()});
    if (is_connected(g)) return g;
  }
}

std::vector<Graph> cubic_graphs(int n, std::uint64_t seed) {
  if (n > 10) throw BudgetExceeded("cubic_graphs is meant for n <= 10");
  std::vector<Graph> found;
  Rng rng(seed);
  constexpr int kPatience = 6000;
  for (int quiet = 0; quiet < kPatience; ++quiet) {
    Graph g = random_cubic(rng(), n);
    bool known = std::any_of(found.begin(), found.end(), [&](const Graph& f) { return are_isomorphic(f, g); });
    if (!known) {
      found.push_back(std::move(g));
      quiet = 0;
    }
  }
  return found;
}

Graph gen_line_of_subdivided_cubic(std::uint64_t seed, const Graph& base, const LineOfCubicOptions& opts) {
  if (base.empty() || base.min_degree() != 3 || base.max_degree() != 3) {
    throw ContractViolation("gen_line_of_subdivided_cubic needs a cubic base graph");
  }
  Rng rng(seed);
  std::optional<Edge> twice;
  if (opts.one_edge_twice) {
    auto es = base.edges();
    twice = es[static_cast<std::size_t>(pick(rng, static_cast<int>(es.size())))];
  }
  Graph out = shuffled(line_graph(subdivide(base, twice)), rng);
  if (out.order() <= opts.oracle_budget) {
    Isk4Options o;
    o.budget = opts.oracle_budget;
    auto report = verify_membership(out, o);
    if (report.verdict == Verdict::nonmember) throw GenerationError("membership oracle rejected a line graph of a subdivided cubic graph");
  }
  return out;
}

Graph gen_glue(std::uint64_t seed, const std::vector<Graph>& parts, GlueMode mode, int retries,
               std::size_t oracle_budget) {
  if (parts.empty()) return Graph{};
  Rng rng(seed);
  Graph cur = compact(parts.front());
  for (std::size_t p = 1; p < parts.size(); ++p) {
    const Graph part = compact(parts[p]);
    if (part.empty() || cur.empty()) throw ContractViolation("gen_glue: empty part");
    if (mode == GlueMode::edge && (part.size() == 0 || cur.size() == 0)) throw ContractViolation("gen_glue: edge mode needs edges");
    const VertexId offset = cur.ids().back() + 1;
    bool done = false;
    for (int attempt = 0; attempt < retries && !done; ++attempt) {
      std::vector<std::pair<VertexId, VertexId>> ident;  // part id -> cur id
      if (mode == GlueMode::vertex) {
        ident.push_back({part.id(pick(rng, static_cast<int>(part.order()))), cur.id(pick(rng, static_cast<int>(cur.order())))});
      } else {
        auto pe = part.edges()[static_cast<std::size_t>(pick(rng, static_cast<int>(part.size())))];
        auto ce = cur.edges()[static_cast<std::size_t>(pick(rng, static_cast<int>(cur.size())))];
        if (pick(rng, 2)) std::swap(pe.first, pe.second);
        ident.push_back({pe.first, ce.first});
        ident.push_back({pe.second, ce.second});
      }
      auto target = [&](VertexId v) {
        for (const auto& [from, to] : ident) {
          if (from == v) return to;
        }
        return v + offset;
      };
      std::vector<VertexId> ids(cur.ids().begin(), cur.ids().end());
      for (VertexId v : part.ids()) {
        if (target(v) >= offset) ids.push_back(target(v));
      }
      auto edges = cur.edges();
      for (const auto& [u, v] : part.edges()) edges.push_back({target(u), target(v)});
      Graph g = Graph::from_id_edges(std::move(ids), edges);
      if (find_diamond(g) || find_bowtie(g)) continue;
      if (g.order() <= oracle_budget) {
        Isk4Options o;
        o.budget = oracle_budget;
        if (find_isk4(g, o).status == Isk4Result::Status::found) continue;
      }
      cur = compact(g);
      done = true;
    }
    if (!done) throw GenerationError("gen_glue: every attempt created a forbidden pattern");
  }
  return cur;
}

Side prism_side() {
  return {on_range(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {1, 4}, {2, 5}}), 0, 3};
}

Side line_side(const Graph& cubic, Edge twice) {
  if (cubic.empty() || cubic.min_degree() != 3 || cubic.max_degree() != 3) throw ContractViolation("line_side needs a cubic graph");
  Graph h = subdivide(cubic, twice);
  auto es = h.edges();
  int u = -1;
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    const auto& [x, y] = es[static_cast<std::size_t>(i)];
    if (h.degree(*h.local(x)) == 2 && h.degree(*h.local(y)) == 2) u = i;
  }
  Graph l = line_graph(h);
  auto nb = l.neighbor_ids(u);
  std::vector<VertexId> keep;
  for (VertexId v : l.ids()) {
    if (v != u) keep.push_back(v);
  }
  Side out{compact(induced_subgraph(l, keep)), 0, 0};
  // compact shifts every id above u down by one
  out.a = nb[0] > u ? nb[0] - 1 : nb[0];
  out.b = nb[1] > u ? nb[1] - 1 : nb[1];
  return out;
}

Graph gen_hub(std::uint64_t seed, const std::vector<Side>& sides, int paths) {
  Rng rng(seed);
  const VertexId v = 0;
  const VertexId w = 1;
  std::vector<VertexId> ids{v, w};
  std::vector<Edge> edges;
  VertexId off = 2;
  for (const auto& side : sides) {
    if (side.g.empty()) throw ContractViolation("gen_hub: empty side");
    for (VertexId x : side.g.ids()) ids.push_back(x + off);
    for (const auto& [x, y] : side.g.edges()) edges.push_back({x + off, y + off});
    edges.push_back({v, side.a + off});
    edges.push_back({w, side.b + off});
    off += side.g.ids().back() + 1;
  }
  for (int i = 0; i < paths; ++i) {
    ids.push_back(off);
    edges.push_back({v, off});
    edges.push_back({off, w});
    ++off;
  }
  return shuffled(compact(Graph::from_id_edges(std::move(ids), edges)), rng);
}

Graph gen_nonmember(std::uint64_t seed, PatternKind kind, int padding) {
  Rng rng(seed);
  std::vector<Edge> edges;
  int n = 0;
  switch (kind) {
    case PatternKind::diamond:
      n = 4;
      edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      break;
    case PatternKind::bowtie:
      n = 5;
      edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
      break;
    case PatternKind::isk4: {
      n = 4;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          int prev = i;
          for (int k = pick(rng, 3); k > 0; --k) {
            edges.push_back({prev, n});
            prev = n++;
          }
          edges.push_back({prev, j});
        }
      }
      break;
    }
    default:
      throw ContractViolation("gen_nonmember plants diamond, bowtie or isk4 only");
  }
  for (int i = 0; i < padding; ++i) {
    edges.push_back({pick(rng, n), n});
    ++n;
  }
  return shuffled(on_range(n, edges), rng);
}

}  // namespace isk4col
