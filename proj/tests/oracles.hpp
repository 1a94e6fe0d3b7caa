// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph container and are written for
// obviousness, not speed.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "isk4col/graph.hpp"

namespace oracle {

using isk4col::Edge;
using isk4col::Graph;
using isk4col::VertexId;

// Adjacency matrix on local indices.
struct Matrix {
  int n = 0;
  std::vector<std::vector<char>> adj;
  explicit Matrix(const Graph& g) : n(static_cast<int>(g.order())), adj(g.order(), std::vector<char>(g.order(), 0)) {
    for (const auto& [u, v] : g.edges()) {
      int a = *g.local(u);
      int b = *g.local(v);
      adj[a][b] = adj[b][a] = 1;
    }
  }
};

inline bool connected_mask(const Matrix& m, std::uint32_t mask) {
  if (!mask) return true;
  int start = __builtin_ctz(mask);
  std::uint32_t seen = 1u << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < m.n; ++w) {
      if ((mask >> w & 1) && !(seen >> w & 1) && m.adj[u][w]) {
        seen |= 1u << w;
        stack.push_back(w);
      }
    }
  }
  return seen == mask;
}

// Induced subgraph on `mask` is a subdivision of K4: suppress degree-2
// vertices and look for the simple K4 on the four degree-3 vertices.
inline bool is_k4_subdivision(const Matrix& m, std::uint32_t mask) {
  std::vector<int> verts;
  for (int v = 0; v < m.n; ++v) {
    if (mask >> v & 1) verts.push_back(v);
  }
  auto deg = [&](int v) {
    int d = 0;
    for (int w : verts) d += m.adj[v][w];
    return d;
  };
  std::vector<int> corners;
  for (int v : verts) {
    int d = deg(v);
    if (d == 3) corners.push_back(v);
    else if (d != 2) return false;
  }
  if (corners.size() != 4 || !connected_mask(m, mask)) return false;
  std::set<std::pair<int, int>> pairs;
  int walks = 0;
  for (int c : corners) {
    for (int first : verts) {
      if (!m.adj[c][first]) continue;
      int prev = c;
      int cur = first;
      while (std::find(corners.begin(), corners.end(), cur) == corners.end()) {
        int next = -1;
        for (int w : verts) {
          if (m.adj[cur][w] && w != prev) next = w;
        }
        prev = cur;
        cur = next;
      }
      if (cur == c) return false;
      pairs.insert({std::min(c, cur), std::max(c, cur)});
      ++walks;
    }
  }
  return walks == 12 && pairs.size() == 6;
}

// Some vertex subset induces a K4 subdivision. Exponential: n <= 14.
inline bool has_isk4(const Graph& g) {
  Matrix m(g);
  for (std::uint32_t mask = 1; mask < (1u << m.n); ++mask) {
    if (__builtin_popcount(mask) >= 4 && is_k4_subdivision(m, mask)) return true;
  }
  return false;
}

inline bool induces(const Matrix& m, const std::vector<int>& vs, int edges, std::vector<int> degrees) {
  int e = 0;
  std::vector<int> d(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (m.adj[vs[i]][vs[j]]) {
        ++e;
        ++d[i];
        ++d[j];
      }
    }
  }
  std::sort(d.begin(), d.end());
  std::sort(degrees.begin(), degrees.end());
  return e == edges && d == degrees;
}

inline bool has_diamond(const Graph& g) {
  Matrix m(g);
  for (int a = 0; a < m.n; ++a)
    for (int b = a + 1; b < m.n; ++b)
      for (int c = b + 1; c < m.n; ++c)
        for (int d = c + 1; d < m.n; ++d)
          if (induces(m, {a, b, c, d}, 5, {2, 2, 3, 3})) return true;
  return false;
}

inline bool has_bowtie(const Graph& g) {
  Matrix m(g);
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int from) {
    if (pick.size() == 5) return induces(m, pick, 6, {2, 2, 2, 2, 4});
    for (int v = from; v < m.n; ++v) {
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

inline bool is_member(const Graph& g) { return !has_diamond(g) && !has_bowtie(g) && !has_isk4(g); }

// K4 minor: four disjoint connected branch sets, pairwise adjacent. Labels
// are introduced in order to skip relabelings. n <= 10.
inline bool has_k4_minor(const Graph& g) {
  Matrix m(g);
  std::vector<int> label(static_cast<std::size_t>(m.n), -1);
  std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
    if (v == m.n) {
      if (used < 4) return false;
      std::uint32_t sets[4] = {0, 0, 0, 0};
      for (int u = 0; u < m.n; ++u) {
        if (label[u] >= 0) sets[label[u]] |= 1u << u;
      }
      for (int i = 0; i < 4; ++i) {
        if (!connected_mask(m, sets[i])) return false;
      }
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          bool touch = false;
          for (int x = 0; x < m.n && !touch; ++x) {
            if (!(sets[i] >> x & 1)) continue;
            for (int y = 0; y < m.n && !touch; ++y) touch = (sets[j] >> y & 1) && m.adj[x][y];
          }
          if (!touch) return false;
        }
      }
      return true;
    }
    if (4 - used > m.n - v) return false;
    for (int l = -1; l <= std::min(used, 3); ++l) {
      label[v] = l;
      if (rec(v + 1, l == used ? used + 1 : used)) return true;
    }
    label[v] = -1;
    return false;
  };
  return rec(0, 0);
}

// Chromatic number by trying every assignment with k colors. n <= 11.
inline int chromatic_number(const Graph& g) {
  Matrix m(g);
  if (m.n == 0) return 0;
  std::vector<int> col(static_cast<std::size_t>(m.n), -1);
  for (int k = 1;; ++k) {
    std::function<bool(int)> rec = [&](int v) -> bool {
      if (v == m.n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = !(m.adj[u][v] && col[u] == c);
        if (!ok) continue;
        col[v] = c;
        if (rec(v + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return k;
  }
}

inline bool has_odd_cycle(const Graph& g) {
  Matrix m(g);
  std::vector<int> side(static_cast<std::size_t>(m.n), -1);
  for (int s = 0; s < m.n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < m.n; ++w) {
        if (!m.adj[u][w]) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

// All proper 3-edge-colorings, edges in h.edges() order.
inline std::vector<std::vector<int>> all_edge_colorings(const Graph& h, std::size_t limit = SIZE_MAX) {
  auto es = h.edges();
  std::vector<std::vector<int>> out;
  std::vector<int> col(es.size(), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == es.size()) {
      out.push_back(col);
      return;
    }
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        bool share = es[j].first == es[i].first || es[j].first == es[i].second || es[j].second == es[i].first ||
                     es[j].second == es[i].second;
        ok = !(share && col[j] == c);
      }
      if (!ok) continue;
      col[i] = c;
      rec(i + 1);
    }
    col[i] = -1;
  };
  rec(0);
  return out;
}

// Every proper 3-coloring of g as local-index vectors, by plain enumeration.
inline std::vector<std::vector<int>> all_vertex_colorings(const Graph& g) {
  Matrix m(g);
  std::vector<std::vector<int>> out;
  std::vector<int> col(static_cast<std::size_t>(m.n), 0);
  long long total = 1;
  for (int i = 0; i < m.n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long x = code;
    for (int i = 0; i < m.n; ++i) {
      col[i] = static_cast<int>(x % 3);
      x /= 3;
    }
    bool ok = true;
    for (int u = 0; u < m.n && ok; ++u)
      for (int w = u + 1; w < m.n && ok; ++w) ok = !(m.adj[u][w] && col[u] == col[w]);
    if (ok) out.push_back(col);
  }
  return out;
}

// Some clique separates g. Clique enumeration over all subsets: n <= 16.
inline bool has_clique_cutset(const Graph& g) {
  Matrix m(g);
  const std::uint32_t all = m.n >= 32 ? ~0u : ((1u << m.n) - 1);
  for (std::uint32_t s = 1; s < (1u << m.n); ++s) {
    bool clique = true;
    for (int u = 0; u < m.n && clique; ++u)
      for (int w = u + 1; w < m.n && clique; ++w)
        if ((s >> u & 1) && (s >> w & 1)) clique = m.adj[u][w];
    if (!clique) continue;
    std::uint32_t rest = all & ~s;
    if (rest && !connected_mask(m, rest)) return true;
  }
  return false;
}

// Least |X| over all proper 2-cutsets, or nothing. Every pair, every split of
// the components into two nonempty groups.
inline std::optional<std::size_t> least_proper_2_side(const Graph& g) {
  Matrix m(g);
  std::optional<std::size_t> best;
  auto is_path = [&](std::uint32_t side, int a, int b) {
    std::uint32_t all = side | (1u << a) | (1u << b);
    for (int u = 0; u < m.n; ++u) {
      if (!(all >> u & 1)) continue;
      int d = 0;
      for (int w = 0; w < m.n; ++w) d += (all >> w & 1) && m.adj[u][w];
      if ((u == a || u == b) ? d != 1 : d != 2) return false;
    }
    return connected_mask(m, all);
  };
  for (int a = 0; a < m.n; ++a) {
    for (int b = a + 1; b < m.n; ++b) {
      if (m.adj[a][b]) continue;
      std::vector<std::uint32_t> comps;
      std::uint32_t left = ((1u << m.n) - 1) & ~(1u << a) & ~(1u << b);
      while (left) {
        std::uint32_t comp = 1u << __builtin_ctz(left);
        for (bool grew = true; grew;) {
          grew = false;
          for (int u = 0; u < m.n; ++u) {
            if (!(comp >> u & 1)) continue;
            for (int w = 0; w < m.n; ++w) {
              if ((left >> w & 1) && !(comp >> w & 1) && m.adj[u][w]) {
                comp |= 1u << w;
                grew = true;
              }
            }
          }
        }
        comps.push_back(comp);
        left &= ~comp;
      }
      const std::size_t c = comps.size();
      for (std::uint32_t pick = 1; pick + 1 < (1u << c); ++pick) {
        std::uint32_t x = 0;
        std::uint32_t y = 0;
        for (std::size_t i = 0; i < c; ++i) (pick >> i & 1 ? x : y) |= comps[i];
        if (is_path(x, a, b) || is_path(y, a, b)) continue;
        std::size_t small = std::min(__builtin_popcount(x), __builtin_popcount(y));
        if (!best || small < *best) best = small;
      }
    }
  }
  return best;
}

// Random graph on n vertices with edge probability p.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return isk4col::build_graph(e, n);
}

}  // namespace oracle
