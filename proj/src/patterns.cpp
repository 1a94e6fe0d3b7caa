#include "isk4col/patterns.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "esu.hpp"
#include "isk4col/errors.hpp"

namespace isk4col {

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::diamond: return "diamond";
    case PatternKind::bowtie: return "bowtie";
    case PatternKind::prism: return "prism";
    case PatternKind::k33: return "k33";
    case PatternKind::k4: return "k4";
    case PatternKind::isk4: return "isk4";
  }
  return "?";
}

std::optional<PatternKind> pattern_from_string(std::string_view name) {
  for (auto k : {PatternKind::diamond, PatternKind::bowtie, PatternKind::prism, PatternKind::k33,
                 PatternKind::k4, PatternKind::isk4}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(SearchMode mode) { return mode == SearchMode::exact ? "exact" : "bounded"; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::nonmember: return "nonmember";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

struct InducedShape {
  std::vector<int> degree;  // induced degree, parallel to the sorted vertex list
  std::size_t edges = 0;
  bool has_triangle = false;
};

InducedShape shape_of(const Graph& g, std::span<const VertexId> s) {
  InducedShape out;
  out.degree.assign(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) continue;
      ++out.degree[i];
      ++out.degree[j];
      ++out.edges;
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        if (g.adjacent(s[i], s[k]) && g.adjacent(s[j], s[k])) out.has_triangle = true;
      }
    }
  }
  return out;
}

bool all_in_graph(const Graph& g, std::span<const VertexId> s) {
  std::set<VertexId> seen;
  for (VertexId v : s) {
    if (!g.contains(v) || !seen.insert(v).second) return false;
  }
  return true;
}

}  // namespace

std::optional<PatternWitness> k4_subdivision(const Graph& g, std::span<const VertexId> s) {
  std::vector<VertexId> set(s.begin(), s.end());
  std::sort(set.begin(), set.end());
  auto pos = [&](VertexId v) -> int {
    auto it = std::lower_bound(set.begin(), set.end(), v);
    return (it != set.end() && *it == v) ? static_cast<int>(it - set.begin()) : -1;
  };
  std::vector<std::vector<int>> adj(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (VertexId w : g.neighbor_ids(set[i])) {
      int j = pos(w);
      if (j >= 0) adj[i].push_back(j);
    }
  }
  std::vector<int> corners;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (adj[i].size() == 3) {
      corners.push_back(static_cast<int>(i));
    } else if (adj[i].size() != 2) {
      return std::nullopt;
    }
  }
  if (corners.size() != 4) return std::nullopt;

  std::vector<char> covered(set.size(), 0);
  std::map<std::pair<int, int>, std::vector<VertexId>> paths;
  for (int c : corners) {
    covered[static_cast<std::size_t>(c)] = 1;
    for (int first : adj[static_cast<std::size_t>(c)]) {
      std::vector<VertexId> path{set[static_cast<std::size_t>(c)]};
      int prev = c;
      int cur = first;
      while (adj[static_cast<std::size_t>(cur)].size() == 2) {
        path.push_back(set[static_cast<std::size_t>(cur)]);
        covered[static_cast<std::size_t>(cur)] = 1;
        const auto& nb = adj[static_cast<std::size_t>(cur)];
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        if (path.size() > set.size()) return std::nullopt;
      }
      if (cur == c) return std::nullopt;  // a loop at a corner
      path.push_back(set[static_cast<std::size_t>(cur)]);
      if (c < cur) {
        auto key = std::make_pair(c, cur);
        if (paths.count(key)) return std::nullopt;  // parallel branches
        paths.emplace(key, std::move(path));
      }
    }
  }
  if (paths.size() != 6) return std::nullopt;
  if (std::count(covered.begin(), covered.end(), 0) != 0) return std::nullopt;

  PatternWitness w{PatternKind::isk4, set, {}, {}};
  for (int c : corners) w.corners.push_back(set[static_cast<std::size_t>(c)]);
  for (auto& [key, path] : paths) w.branches.push_back(std::move(path));
  return w;
}

bool validate_witness(const Graph& g, const PatternWitness& w) {
  if (!all_in_graph(g, w.vertices)) return false;
  std::vector<VertexId> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  switch (w.kind) {
    case PatternKind::diamond: {
      if (sorted.size() != 4) return false;
      auto sh = shape_of(g, sorted);
      return sh.edges == 5;
    }
    case PatternKind::bowtie: {
      if (sorted.size() != 5) return false;
      auto sh = shape_of(g, sorted);
      auto deg = sh.degree;
      std::sort(deg.begin(), deg.end());
      return sh.edges == 6 && deg == std::vector<int>{2, 2, 2, 2, 4};
    }
    case PatternKind::prism:
    case PatternKind::k33: {
      if (sorted.size() != 6) return false;
      auto sh = shape_of(g, sorted);
      bool cubic = std::all_of(sh.degree.begin(), sh.degree.end(), [](int d) { return d == 3; });
      if (!cubic) return false;
      // the only two cubic graphs on six vertices; triangles tell them apart
      return w.kind == PatternKind::prism ? sh.has_triangle : !sh.has_triangle;
    }
    case PatternKind::k4: {
      if (sorted.size() != 4) return false;
      return shape_of(g, sorted).edges == 6;
    }
    case PatternKind::isk4: {
      auto sub = k4_subdivision(g, sorted);
      if (!sub) return false;
      std::vector<VertexId> claimed = w.corners;
      std::sort(claimed.begin(), claimed.end());
      std::vector<VertexId> found = sub->corners;
      std::sort(found.begin(), found.end());
      return w.corners.empty() || claimed == found;
    }
  }
  return false;
}

std::optional<PatternWitness> find_diamond(const Graph& g) {
  std::optional<std::vector<VertexId>> best;
  const int n = static_cast<int>(g.order());
  std::vector<int> common;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      common.clear();
      std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                            g.neighbors(v).end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (g.adjacent_local(common[i], common[j])) continue;
          std::vector<VertexId> cand{g.id(u), g.id(v), g.id(common[i]), g.id(common[j])};
          std::sort(cand.begin(), cand.end());
          if (!best || cand < *best) best = std::move(cand);
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return PatternWitness{PatternKind::diamond, std::move(*best), {}, {}};
}

std::optional<PatternWitness> find_bowtie(const Graph& g) {
  std::optional<std::vector<VertexId>> best;
  const int n = static_cast<int>(g.order());
  for (int c = 0; c < n; ++c) {
    auto nb = g.neighbors(c);
    std::vector<std::pair<int, int>> inner;  // edges inside N(c)
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent_local(nb[i], nb[j])) inner.emplace_back(nb[i], nb[j]);
      }
    }
    for (std::size_t i = 0; i < inner.size(); ++i) {
      for (std::size_t j = i + 1; j < inner.size(); ++j) {
        auto [x, y] = inner[i];
        auto [z, w] = inner[j];
        if (x == z || x == w || y == z || y == w) continue;
        if (g.adjacent_local(x, z) || g.adjacent_local(x, w) || g.adjacent_local(y, z) ||
            g.adjacent_local(y, w)) {
          continue;
        }
        std::vector<VertexId> cand{g.id(c), g.id(x), g.id(y), g.id(z), g.id(w)};
        std::sort(cand.begin(), cand.end());
        if (!best || cand < *best) best = std::move(cand);
      }
    }
  }
  if (!best) return std::nullopt;
  return PatternWitness{PatternKind::bowtie, std::move(*best), {}, {}};
}

namespace {

// Lexicographically least connected subset accepted by `accept`, searched root
// by root so the first root with a hit holds the answer.
template <class Accept>
std::optional<std::vector<VertexId>> least_connected_subset(const Graph& g, detail::EsuLimits limits,
                                                            Accept accept) {
  std::optional<std::vector<VertexId>> best;
  auto visit = [&](auto& esu) {
    if (!accept(esu)) return;
    std::vector<VertexId> ids;
    for (int u : esu.subset()) ids.push_back(g.id(u));
    std::sort(ids.begin(), ids.end());
    if (!best || ids < *best) best = std::move(ids);
  };
  detail::SubcubicEnumerator<decltype(visit)> esu(g, limits, visit);
  for (int root = 0; root < static_cast<int>(g.order()); ++root) {
    esu.run(root);
    if (best) break;
  }
  return best;
}

}  // namespace

std::optional<PatternWitness> find_fixed_pattern(const Graph& g, PatternKind kind) {
  if (kind != PatternKind::prism && kind != PatternKind::k33 && kind != PatternKind::k4) {
    throw ContractViolation("find_fixed_pattern handles prism, k33 and k4 only");
  }
  const std::size_t size = kind == PatternKind::k4 ? 4 : 6;
  detail::EsuLimits limits;
  limits.max_size = size;
  limits.max_degree = 3;
  limits.max_full_degree = static_cast<int>(size);
  auto found = least_connected_subset(g, limits, [&](const auto& esu) {
    if (esu.subset().size() != size) return false;
    for (int u : esu.subset()) {
      if (esu.induced_degree(u) != 3) return false;
    }
    if (kind == PatternKind::k4) return true;
    std::vector<VertexId> ids;
    for (int u : esu.subset()) ids.push_back(g.id(u));
    std::sort(ids.begin(), ids.end());
    bool tri = shape_of(g, ids).has_triangle;
    return kind == PatternKind::prism ? tri : !tri;
  });
  if (!found) return std::nullopt;
  return PatternWitness{kind, std::move(*found), {}, {}};
}

MembershipReport verify_membership(const Graph& g, const Isk4Options& opts) {
  MembershipReport report;
  report.budget = opts.budget;
  report.mode = g.order() <= opts.budget ? SearchMode::exact : SearchMode::bounded;
  if (auto w = find_diamond(g)) {
    report.verdict = Verdict::nonmember;
    report.witness = std::move(w);
    return report;
  }
  if (auto w = find_bowtie(g)) {
    report.verdict = Verdict::nonmember;
    report.witness = std::move(w);
    return report;
  }
  auto isk4 = find_isk4(g, opts);
  report.mode = isk4.mode;
  switch (isk4.status) {
    case Isk4Result::Status::found:
      report.verdict = Verdict::nonmember;
      report.witness = std::move(isk4.witness);
      break;
    case Isk4Result::Status::absent:
      report.verdict = Verdict::member;
      break;
    case Isk4Result::Status::unknown:
      report.verdict = Verdict::unknown;
      break;
  }
  return report;
}

}  // namespace isk4col
