#include <algorithm>
#include <numeric>
#include <set>

#include "isk4col/cutsets.hpp"

namespace isk4col {

namespace {

// G[c + {a,b}] is an induced a-b path.
bool is_ab_path(const Graph& g, const std::vector<int>& c, int a, int b) {
  std::vector<int> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  auto inside = [&](int w) { return std::binary_search(sorted.begin(), sorted.end(), w); };
  int a_deg = 0;
  int b_deg = 0;
  for (int w : g.neighbors(a)) a_deg += inside(w) ? 1 : 0;
  for (int w : g.neighbors(b)) b_deg += inside(w) ? 1 : 0;
  if (a_deg != 1 || b_deg != 1) return false;
  for (int u : sorted) {
    int d = 0;
    for (int w : g.neighbors(u)) d += (inside(w) || w == a || w == b) ? 1 : 0;
    if (d != 2) return false;
  }
  return true;
}

struct Grouping {
  std::vector<int> x;
  std::vector<int> y;
};

// Least small side over all valid groupings of the components of g - {a,b}.
// A side made of two or more components is never a path, so the optimum is
// one component or the two smallest ones.
std::optional<Grouping> best_grouping(const Graph& g, int a, int b) {
  const int n = static_cast<int>(g.order());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  label[static_cast<std::size_t>(a)] = label[static_cast<std::size_t>(b)] = -2;
  std::vector<std::vector<int>> comps;
  std::vector<int> stack;
  for (int r = 0; r < n; ++r) {
    if (label[static_cast<std::size_t>(r)] != -1) continue;
    comps.emplace_back();
    label[static_cast<std::size_t>(r)] = static_cast<int>(comps.size()) - 1;
    stack.push_back(r);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comps.back().push_back(u);
      for (int w : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = label[static_cast<std::size_t>(r)];
          stack.push_back(w);
        }
      }
    }
  }
  const std::size_t c = comps.size();
  if (c < 2) return std::nullopt;
  std::vector<char> path(c);
  for (std::size_t i = 0; i < c; ++i) path[i] = is_ab_path(g, comps[i], a, b) ? 1 : 0;

  std::vector<std::size_t> chosen;
  std::size_t best_size = SIZE_MAX;
  for (std::size_t i = 0; i < c; ++i) {
    if (path[i]) continue;
    if (c == 2 && path[1 - i]) continue;
    if (comps[i].size() < best_size) {
      best_size = comps[i].size();
      chosen = {i};
    }
  }
  if (c >= 3) {
    std::vector<std::size_t> by_size(c);
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](std::size_t p, std::size_t q) { return comps[p].size() < comps[q].size(); });
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = i + 1; j < c; ++j) {
        std::size_t p = by_size[i];
        std::size_t q = by_size[j];
        if (c == 3) {
          std::size_t rest = 3 - p - q;
          if (path[rest]) continue;
        }
        std::size_t sz = comps[p].size() + comps[q].size();
        if (sz < best_size) {
          best_size = sz;
          chosen = {std::min(p, q), std::max(p, q)};
        }
        if (c >= 4) break;  // the two smallest are always valid
      }
      if (c >= 4) break;
    }
  }
  if (chosen.empty()) return std::nullopt;
  Grouping out;
  for (std::size_t i = 0; i < c; ++i) {
    auto& side = std::find(chosen.begin(), chosen.end(), i) != chosen.end() ? out.x : out.y;
    side.insert(side.end(), comps[i].begin(), comps[i].end());
  }
  std::sort(out.x.begin(), out.x.end());
  std::sort(out.y.begin(), out.y.end());
  if (out.x.size() > out.y.size()) std::swap(out.x, out.y);
  return out;
}

std::vector<VertexId> ids_of(const Graph& g, const std::vector<int>& locals) {
  std::vector<VertexId> out;
  out.reserve(locals.size());
  for (int u : locals) out.push_back(g.id(u));
  return out;
}

}  // namespace

bool validate_proper_2_cutset(const Graph& g, const Proper2Cutset& t) {
  auto a = g.local(t.a);
  auto b = g.local(t.b);
  if (!a || !b || *a == *b || g.adjacent_local(*a, *b)) return false;
  if (t.x.empty() || t.y.empty()) return false;
  std::set<VertexId> seen{t.a, t.b};
  std::vector<int> x;
  std::vector<int> y;
  for (VertexId v : t.x) {
    auto u = g.local(v);
    if (!u || !seen.insert(v).second) return false;
    x.push_back(*u);
  }
  for (VertexId v : t.y) {
    auto u = g.local(v);
    if (!u || !seen.insert(v).second) return false;
    y.push_back(*u);
  }
  if (seen.size() != g.order()) return false;
  std::sort(y.begin(), y.end());
  for (int u : x) {
    for (int w : g.neighbors(u)) {
      if (std::binary_search(y.begin(), y.end(), w)) return false;
    }
  }
  // a side with several components cannot be a path; is_ab_path also
  // rejects those because some vertex would end up with the wrong degree
  auto side_is_path = [&](const std::vector<int>& side) {
    Graph sub = induced_by_local(g, side);
    return is_connected(sub) && is_ab_path(g, side, *a, *b);
  };
  return !side_is_path(x) && !side_is_path(y);
}

std::optional<Proper2Cutset> find_proper_2_cutset(const Graph& g, bool minimize_small_side) {
  const int n = static_cast<int>(g.order());
  std::optional<Proper2Cutset> best;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent_local(a, b)) continue;
      auto grouping = best_grouping(g, a, b);
      if (!grouping) continue;
      if (best && grouping->x.size() >= best->x.size()) continue;
      best = Proper2Cutset{g.id(a), g.id(b), ids_of(g, grouping->x), ids_of(g, grouping->y)};
      if (!minimize_small_side || best->x.size() == 1) return best;
    }
  }
  return best;
}

}  // namespace isk4col
