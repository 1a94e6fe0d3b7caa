#include "isk4col/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "isk4col/errors.hpp"

namespace isk4col {

using nlohmann::json;

Graph read_dimacs(std::istream& in) {
  std::string line;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw MalformedInput("DIMACS line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (n >= 0) fail("second problem line");
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0) fail("bad problem line");
    } else if (tag == "e") {
      long long u = 0;
      long long v = 0;
      if (n < 0) fail("edge before problem line");
      if (!(ls >> u >> v)) fail("bad edge line");
      if (u < 1 || v < 1 || u > n || v > n) fail("vertex out of range");
      edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
    } else {
      fail("unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (n < 0) throw MalformedInput("DIMACS input has no problem line");
  if (n > 100'000'000) throw MalformedInput("DIMACS vertex count too large");
  if (static_cast<long long>(edges.size()) != m) {
    throw MalformedInput("DIMACS header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return build_graph(edges, static_cast<VertexId>(n));
}

namespace {

void require_contiguous(const Graph& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.id(static_cast<int>(i)) != static_cast<VertexId>(i)) throw ContractViolation("graph ids must be 0..n-1 for export");
  }
}

}  // namespace

void write_dimacs(std::ostream& out, const Graph& g) {
  require_contiguous(g);
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph graph_from_json(const json& j) {
  try {
    const long long n = j.at("n").get<long long>();
    if (n < 0 || n > 100'000'000) throw MalformedInput("JSON graph: bad vertex count");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw MalformedInput("JSON graph: edge must be a pair");
      long long u = e[0].get<long long>();
      long long v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedInput("JSON graph: vertex out of range");
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    return build_graph(edges, static_cast<VertexId>(n));
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("JSON graph: ") + e.what());
  }
}

json graph_to_json(const Graph& g) {
  require_contiguous(g);
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

std::optional<GraphFormat> format_from_string(const std::string& name) {
  if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
  if (name == "json") return GraphFormat::json;
  return std::nullopt;
}

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  if (!format) {
    const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    format = is_json ? GraphFormat::json : GraphFormat::dimacs;
  }
  if (*format == GraphFormat::dimacs) return read_dimacs(in);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return graph_from_json(j);
}

json to_json(const VertexColoring& c) {
  json out = json::object();
  for (const auto& [v, col] : c) out[std::to_string(v)] = col;
  return out;
}

json to_json(const PatternWitness& w) {
  json out{{"kind", std::string(to_string(w.kind))}, {"vertices", w.vertices}};
  if (!w.corners.empty()) out["corners"] = w.corners;
  if (!w.branches.empty()) out["branches"] = w.branches;
  return out;
}

json to_json(const MembershipReport& r) {
  json out{{"verdict", std::string(to_string(r.verdict))}, {"mode", std::string(to_string(r.mode))}, {"budget", r.budget}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

json to_json(const BasicVerdict& v) {
  json out{{"branch", std::string(to_string(v.branch))}};
  if (v.bipartition) out["bipartition"] = {{"left", v.bipartition->left}, {"right", v.bipartition->right}};
  if (v.root) {
    json edge_of = json::object();
    for (const auto& [x, e] : v.root->edge_of) edge_of[std::to_string(x)] = {e.first, e.second};
    json edges = json::array();
    for (const auto& [x, y] : v.root->root.edges()) edges.push_back({x, y});
    std::vector<VertexId> ids(v.root->root.ids().begin(), v.root->root.ids().end());
    out["root"] = {{"vertices", ids}, {"edges", edges}, {"edge_of", edge_of}};
  }
  if (v.cutset) out["cutset"] = {{"a", v.cutset->a}, {"b", v.cutset->b}, {"x", v.cutset->x}, {"y", v.cutset->y}};
  return out;
}

namespace {

std::string kind_name(TreeNode::Kind k) {
  switch (k) {
    case TreeNode::Kind::internal: return "internal";
    case TreeNode::Kind::basic_leaf: return "basic_leaf";
    case TreeNode::Kind::empty_leaf: return "empty_leaf";
  }
  return "?";
}

}  // namespace

json to_json(const CliqueCutsetTree& t) {
  json nodes = json::array();
  for (const auto& node : t.nodes) {
    json peeled = json::array();
    for (const auto& r : node.peel) peeled.push_back({{"vertex", r.vertex}, {"neighbors", r.neighbors}});
    nodes.push_back({{"id", node.id},
                     {"parent", node.parent},
                     {"layer", node.layer},
                     {"kind", kind_name(node.kind)},
                     {"vertices", node.vertices},
                     {"peeled", peeled},
                     {"cutset", node.cutset},
                     {"children", node.children}});
  }
  return {{"layers", t.layers}, {"nodes", nodes}};
}

json to_json(const ColoringCertificate& c) {
  json leaves = json::array();
  for (const auto& leaf : c.leaves) {
    json steps = json::array();
    for (auto b : leaf.steps) steps.push_back(std::string(to_string(b)));
    leaves.push_back({{"node", leaf.node}, {"vertices", leaf.vertices}, {"steps", steps}, {"nested", leaf.nested}});
  }
  return {{"schema_version", c.schema_version},
          {"graph_hash", c.graph_hash},
          {"coloring", to_json(c.coloring)},
          {"tree", {{"node_count", c.tree.node_count}, {"layers", c.tree.layers}, {"cutsets", c.tree.cutsets}}},
          {"leaves", leaves},
          {"proper", c.proper},
          {"palette", c.palette},
          {"stats",
           {{"basic_leaves", c.stats.basic_leaves},
            {"proper2_steps", c.stats.proper2_steps},
            {"unclassified", c.stats.unclassified},
            {"fallbacks", c.stats.fallbacks},
            {"routes", c.stats.routes},
            {"branches", c.stats.branches}}}};
}

namespace {

Branch branch_from_string(const std::string& s) {
  for (auto b : {Branch::complete_bipartite, Branch::series_parallel, Branch::line_of_sparse, Branch::proper_2_cutset,
                 Branch::unclassified}) {
    if (to_string(b) == s) return b;
  }
  throw MalformedInput("certificate: unknown branch '" + s + "'");
}

}  // namespace

ColoringCertificate certificate_from_json(const json& j) {
  try {
    ColoringCertificate c;
    c.schema_version = j.at("schema_version").get<int>();
    if (c.schema_version != 1) throw MalformedInput("certificate: unsupported schema version");
    c.graph_hash = j.at("graph_hash").get<std::string>();
    for (const auto& [k, v] : j.at("coloring").items()) {
      std::size_t used = 0;
      long long id = std::stoll(k, &used);
      if (used != k.size()) throw MalformedInput("certificate: bad vertex key '" + k + "'");
      c.coloring[static_cast<VertexId>(id)] = v.get<int>();
    }
    const auto& tree = j.at("tree");
    c.tree.node_count = tree.at("node_count").get<int>();
    c.tree.layers = tree.at("layers").get<int>();
    c.tree.cutsets = tree.at("cutsets").get<std::vector<std::vector<VertexId>>>();
    for (const auto& leaf : j.at("leaves")) {
      LeafRecord r;
      r.node = leaf.at("node").get<int>();
      r.vertices = leaf.at("vertices").get<std::vector<VertexId>>();
      for (const auto& s : leaf.at("steps")) r.steps.push_back(branch_from_string(s.get<std::string>()));
      r.nested = leaf.at("nested").get<int>();
      c.leaves.push_back(std::move(r));
    }
    c.proper = j.at("proper").get<bool>();
    c.palette = j.at("palette").get<int>();
    const auto& s = j.at("stats");
    c.stats.basic_leaves = s.at("basic_leaves").get<int>();
    c.stats.proper2_steps = s.at("proper2_steps").get<int>();
    c.stats.unclassified = s.at("unclassified").get<int>();
    c.stats.fallbacks = s.at("fallbacks").get<int>();
    c.stats.routes = s.at("routes").get<std::map<std::string, int>>();
    c.stats.branches = s.at("branches").get<std::map<std::string, int>>();
    return c;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("certificate: ") + e.what());
  } catch (const std::logic_error& e) {  // stoll
    throw MalformedInput(std::string("certificate: ") + e.what());
  }
}

}  // namespace isk4col
