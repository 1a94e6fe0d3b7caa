// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "isk4col/coloring.hpp"
#include "isk4col/errors.hpp"
#include "isk4col/generators.hpp"
#include "isk4col/patterns.hpp"
#include "isk4col/pipeline.hpp"
#include "isk4col/recognition.hpp"
#include "oracles.hpp"

using namespace isk4col;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail, double seconds) {
  std::printf("criterion %d %s: %s (%.2fs)\n", n, ok ? "PASS" : "FAIL", detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool proper3(const Graph& g, const VertexColoring& c) {
  if (c.size() != g.order()) return false;
  for (VertexId v : g.ids()) {
    auto it = c.find(v);
    if (it == c.end() || it->second < 0 || it->second > 2) return false;
  }
  for (auto [u, v] : g.edges())
    if (c.at(u) == c.at(v)) return false;
  return true;
}

struct Member {
  Graph g;
  std::string family;
  bool constructive;  // line-of-subdivided-cubic or hub of prism / line sides
};

bool exact_member(const Graph& g) {
  Isk4Options o;
  o.budget = 24;
  auto r = verify_membership(g, o);
  if (r.mode != SearchMode::exact) return false;
  if (g.order() <= 14 && oracle::is_member(g) != (r.verdict == Verdict::member)) {
    std::printf("  oracle disagreement on %s\n", to_compact_json(g).c_str());
    return false;
  }
  return r.verdict == Verdict::member;
}

std::vector<Member> build_corpus(int& rejected) {
  std::vector<Member> out;
  auto add = [&](Graph g, const char* family, bool constructive) {
    if (g.order() > 24 || !exact_member(g)) {
      ++rejected;
      return;
    }
    out.push_back({std::move(g), family, constructive});
  };
  // series-parallel
  for (std::uint64_t s = 0; s < 240; ++s) add(gen_series_parallel(s, 6 + static_cast<int>(s % 19)), "sp", false);
  // line graphs of subdivided cubic graphs
  std::vector<Graph> bases;
  for (int n : {4, 6, 8}) {
    for (auto& g : cubic_graphs(n)) bases.push_back(g);
  }
  std::uint64_t seed = 1000;
  for (const Graph& base : bases) {
    for (int rep = 0; rep < 12; ++rep) {
      LineOfCubicOptions o;
      o.one_edge_twice = rep % 2 == 1;
      if (2 * base.size() + (o.one_edge_twice ? 1 : 0) > 24) continue;
      add(gen_line_of_subdivided_cubic(seed++, base, o), "line-cubic", true);
    }
  }
  // glued
  std::mt19937_64 rng(7);
  int glued = 0;
  for (std::uint64_t s = 0; glued < 200 && s < 2000; ++s) {
    std::vector<Graph> parts;
    int total = 0;
    const int want = 2 + static_cast<int>(s % 3);
    for (int i = 0; i < want; ++i) {
      Graph p;
      switch (rng() % 5) {
        case 0: p = prism_graph(); break;
        case 1: p = cycle_graph(5 + static_cast<int>(rng() % 3)); break;
        case 2: p = complete_bipartite(3, 3); break;
        case 3: p = gen_series_parallel(rng(), 4 + static_cast<int>(rng() % 5)); break;
        default: p = gen_line_of_subdivided_cubic(rng(), complete_graph(4)); break;
      }
      total += static_cast<int>(p.order());
      parts.push_back(std::move(p));
    }
    if (total > 24 + 2 * want) continue;
    try {
      Graph g = gen_glue(s, parts, s % 2 ? GlueMode::vertex : GlueMode::edge, 64, 24);
      if (g.order() > 24) continue;
      const std::size_t before = out.size();
      add(std::move(g), "glued", false);
      glued += out.size() > before ? 1 : 0;
    } catch (const GenerationError&) {
    }
  }
  // hubs of prism sides: proper 2-cutsets
  for (std::uint64_t s = 0; s < 30; ++s) add(gen_hub(s, {prism_side(), prism_side(), prism_side()}, static_cast<int>(s % 3)), "hub", true);
  return out;
}

void criterion1_3(const std::vector<Member>& corpus, int rejected) {
  auto t0 = Clock::now();
  int bad = 0;
  std::map<std::string, int> families;
  PipelineStats all;
  PipelineStats constructive;
  std::vector<ColoringCertificate> certs;
  for (const auto& m : corpus) {
    families[m.family]++;
    try {
      auto cert = color_class_member(m.g);
      const bool ok = verify_certificate(m.g, cert) && cert.palette <= 3 && proper3(m.g, cert.coloring);
      bad += ok ? 0 : 1;
      all += cert.stats;
      if (m.constructive) constructive += cert.stats;
    } catch (const Error& e) {
      ++bad;
      std::printf("  %s member failed: %s\n", m.family.c_str(), e.what());
    }
  }
  std::ostringstream d;
  d << corpus.size() << " members (";
  for (auto& [k, v] : families) d << k << '=' << v << ' ';
  d << "), " << rejected << " generated graphs rejected, " << bad << " failures";
  report(1, corpus.size() >= 500 && bad == 0 && families.size() >= 3, d.str(), since(t0));

  auto t1 = Clock::now();
  // the seven-vertex prism case through the dual colorings entry point
  Side s = prism_side();
  auto dual = dual_colorings_for_side(s.g, s.a, s.b);
  const bool fig14 = dual.route == DualRoute::prism7;
  bool verdicts_ok = all.unclassified == 0;
  for (auto& [branch, count] : all.branches) {
    if (branch != "complete_bipartite" && branch != "line_of_sparse" && branch != "proper_2_cutset") verdicts_ok = false;
  }
  std::ostringstream d3;
  d3 << all.basic_leaves << " basic leaves, verdicts {";
  for (auto& [k, v] : all.branches) d3 << k << '=' << v << ' ';
  d3 << "}, unclassified=" << all.unclassified << ", fallbacks on constructive corpus=" << constructive.fallbacks
     << " (whole corpus " << all.fallbacks << "), proper2 steps=" << all.proper2_steps
     << ", seven-vertex prism route=" << to_string(dual.route);
  report(3, verdicts_ok && constructive.fallbacks == 0 && fig14 && all.proper2_steps > 0, d3.str(), since(t1));
}

void criterion2(const std::vector<Member>& corpus) {
  auto t0 = Clock::now();
  int checked = 0;
  int bad = 0;
  std::map<int, int> seen;
  for (const auto& m : corpus) {
    if (m.g.order() > 18) continue;
    ++checked;
    auto r = chi_exact(m.g, 18);
    const int needed = oracle::has_odd_cycle(m.g) ? 3 : (m.g.size() > 0 ? 2 : (m.g.empty() ? 0 : 1));
    seen[r.chi]++;
    if (r.chi > 3 || r.chi != needed || !is_proper(m.g, r.witness)) ++bad;
    if (m.g.order() <= 10 && r.chi != oracle::chromatic_number(m.g)) ++bad;
  }
  std::ostringstream d;
  d << checked << " members with n <= 18, chi histogram {";
  for (auto& [k, v] : seen) d << k << ':' << v << ' ';
  d << "}, " << bad << " mismatches";
  report(2, checked >= 100 && bad == 0, d.str(), since(t0));
}

// The edge between the two new vertices and the edges next to it.
std::pair<Edge, Edge> lemma_edges(const Graph& h) {
  for (auto [y, z] : h.edges()) {
    if (h.degree(*h.local(y)) != 2 || h.degree(*h.local(z)) != 2) continue;
    auto ny = h.neighbor_ids(y);
    auto nz = h.neighbor_ids(z);
    VertexId py = ny[0] == z ? ny[1] : ny[0];
    VertexId pz = nz[0] == y ? nz[1] : nz[0];
    return {std::minmax(y, py), std::minmax(z, pz)};
  }
  throw ContractViolation("no edge between two degree-2 vertices");
}

bool proper_edges(const Graph& h, const EdgeColoring& c) {
  auto es = h.edges();
  if (c.size() != es.size()) return false;
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto it = c.find(es[i]);
    if (it == c.end() || it->second < 0 || it->second > 2) return false;
    for (std::size_t j = 0; j < i; ++j) {
      bool share = es[i].first == es[j].first || es[i].first == es[j].second || es[i].second == es[j].first ||
                   es[i].second == es[j].second;
      if (share && c.at(es[i]) == c.at(es[j])) return false;
    }
  }
  return true;
}

void criterion4() {
  auto t0 = Clock::now();
  int graphs = 0;
  int instances = 0;
  int exhaustive = 0;
  int bad = 0;
  for (int n : {4, 6, 8, 10}) {
    for (const Graph& cubic : cubic_graphs(n)) {
      ++graphs;
      for (auto e : cubic.edges()) {
        ++instances;
        Graph h = subdivide(cubic, e);
        auto [e1, e2] = lemma_edges(h);
        try {
          auto pair = lemma_dual_edge_colorings(h, e1, e2);
          bool ok = proper_edges(h, pair.same) && proper_edges(h, pair.differ) && pair.same.at(e1) == pair.same.at(e2) &&
                    pair.differ.at(e1) != pair.differ.at(e2);
          if (ok && h.size() <= 14) {
            ++exhaustive;
            auto es = h.edges();
            std::set<std::vector<int>> all;
            for (auto& c : oracle::all_edge_colorings(h)) all.insert(c);
            auto as_vec = [&](const EdgeColoring& c) {
              std::vector<int> v;
              for (auto& x : es) v.push_back(c.at(x));
              return v;
            };
            ok = all.count(as_vec(pair.same)) && all.count(as_vec(pair.differ));
          }
          bad += ok ? 0 : 1;
        } catch (const Error& ex) {
          ++bad;
          std::printf("  lemma failed on %s: %s\n", to_compact_json(h).c_str(), ex.what());
        }
      }
    }
  }
  std::ostringstream d;
  d << graphs << " connected cubic graphs, " << instances << " edge choices, " << exhaustive
    << " checked against full enumeration, " << bad << " failures";
  report(4, graphs >= 15 && bad == 0 && exhaustive > 0, d.str(), since(t0));
}

void criterion5() {
  auto t0 = Clock::now();
  Side s = prism_side();
  auto dual = dual_colorings_for_side(s.g, s.a, s.b);
  // G' = tx + u with u adjacent to a and b
  const VertexId u = 6;
  std::vector<Edge> e = s.g.edges();
  e.push_back(std::minmax(s.a, u));
  e.push_back(std::minmax(s.b, u));
  Graph g7 = build_graph(e, 7);
  int assignments = 0;
  std::set<std::vector<int>> proper;
  bool any_same = false;
  bool any_differ = false;
  std::vector<int> col(7, 0);
  for (int code = 0; code < 2187; ++code) {
    ++assignments;
    int x = code;
    for (int i = 0; i < 7; ++i, x /= 3) col[static_cast<std::size_t>(i)] = x % 3;
    bool ok = true;
    for (auto [p, q] : e) ok = ok && col[static_cast<std::size_t>(p)] != col[static_cast<std::size_t>(q)];
    if (!ok) continue;
    proper.insert(col);
    (col[static_cast<std::size_t>(s.a)] == col[static_cast<std::size_t>(s.b)] ? any_same : any_differ) = true;
  }
  auto extends = [&](const VertexColoring& c) {
    std::vector<int> v(7);
    for (auto& [id, k] : c) v[static_cast<std::size_t>(id)] = k;
    for (int k = 0; k < 3; ++k) {
      v[u] = k;
      if (proper.count(v)) return true;
    }
    return false;
  };
  const bool ok = g7.order() == 7 && any_same && any_differ && dual.route == DualRoute::prism7 &&
                  dual.same.at(s.a) == dual.same.at(s.b) && dual.differ.at(s.a) != dual.differ.at(s.b) &&
                  proper3(s.g, dual.same) && proper3(s.g, dual.differ) && extends(dual.same) && extends(dual.differ);
  std::ostringstream d;
  d << "order " << g7.order() << ", " << assignments << " assignments, " << proper.size()
    << " proper 3-colorings, same pair " << (any_same ? "exists" : "missing") << ", different pair "
    << (any_differ ? "exists" : "missing") << ", route " << to_string(dual.route);
  report(5, ok, d.str(), since(t0));
}

void criterion6() {
  auto t0 = Clock::now();
  int total = 0;
  int bad = 0;
  std::map<std::string, int> kinds;
  for (auto kind : {PatternKind::diamond, PatternKind::bowtie, PatternKind::isk4}) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      Graph g = gen_nonmember(s, kind, static_cast<int>(s % 11));
      ++total;
      auto r = verify_membership(g);
      bool ok = r.verdict == Verdict::nonmember && r.witness && validate_witness(g, *r.witness);
      if (ok) {
        kinds[std::string(to_string(r.witness->kind))]++;
        // independent check of the witness on the induced vertex set
        Graph w = induced_subgraph(g, r.witness->vertices);
        oracle::Matrix mw(w);
        const std::uint32_t all = (1u << w.order()) - 1;
        if (r.witness->kind == PatternKind::isk4) ok = w.order() < 32 && oracle::is_k4_subdivision(mw, all);
        if (r.witness->kind == PatternKind::diamond) ok = w.order() == 4 && oracle::has_diamond(w);
        if (r.witness->kind == PatternKind::bowtie) ok = w.order() == 5 && oracle::has_bowtie(w);
      }
      if (ok && g.order() <= 14) ok = !oracle::is_member(g);
      bad += ok ? 0 : 1;
    }
  }
  std::ostringstream d;
  d << total << " planted non-members, witnesses {";
  for (auto& [k, v] : kinds) d << k << ':' << v << ' ';
  d << "}, " << bad << " failures";
  report(6, total >= 100 && bad == 0, d.str(), since(t0));
}

void criterion7() {
  auto t0 = Clock::now();
  auto timed = [](int n) {
    Graph g = gen_series_parallel(n, n);
    int reps = n <= 2000 ? 15 : (n <= 20000 ? 5 : 1);
    std::vector<double> ts;
    for (int r = 0; r < reps; ++r) {
      auto a = Clock::now();
      auto tree = build_clique_tree(g);
      auto cert = color_class_member(g);
      double t = since(a);
      if (!cert.proper || tree.nodes.empty()) t = 1e9;
      ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    return std::make_tuple(ts[ts.size() / 2], static_cast<double>(g.order()), static_cast<double>(g.size()));
  };
  bool ok = true;
  std::ostringstream d;
  double t_max = 0;
  for (int n : {1000, 10000, 50000}) {
    auto [t1, n1, m1] = timed(n);
    auto [t2, n2, m2] = timed(2 * n);
    const double bound = 2.0 * (n2 * m2) / (n1 * m1);
    const double ratio = t2 / std::max(t1, 1e-6);
    ok = ok && ratio <= bound;
    t_max = std::max(t_max, t2);
    d << "n=" << n << "->" << 2 * n << " t=" << t1 << "s->" << t2 << "s ratio " << ratio << " (bound " << bound << "); ";
  }
  auto [t100k, n100k, m100k] = timed(100000);
  (void)n100k;
  (void)m100k;
  ok = ok && t100k < 30.0;
  d << "n=100000 t=" << t100k << "s";
  report(7, ok, d.str(), since(t0));
}

void criterion8(const std::vector<Member>& corpus) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(88);
  int members = 0;
  int subgraphs = 0;
  int bad = 0;
  std::vector<const Member*> pool;
  for (const auto& m : corpus)
    if (m.g.order() >= 6 && m.g.order() <= 22) pool.push_back(&m);
  // spread the picks over every family
  const std::size_t stride = std::max<std::size_t>(1, pool.size() / 50);
  std::map<std::string, int> families;
  for (std::size_t i = 0; i < pool.size() && members < 50; i += stride) {
    const Member& m = *pool[i];
    families[m.family]++;
    ++members;
    for (int k = 0; k < 10; ++k) {
      std::vector<VertexId> keep;
      std::bernoulli_distribution coin(0.4 + 0.05 * k);
      for (VertexId v : m.g.ids())
        if (coin(rng)) keep.push_back(v);
      Graph h = induced_subgraph(m.g, keep);
      ++subgraphs;
      Isk4Options o;
      o.budget = 22;
      auto r = verify_membership(h, o);
      bool ok = r.verdict == Verdict::member && r.mode == SearchMode::exact;
      if (h.order() <= 14) ok = ok && oracle::is_member(h);
      bad += ok ? 0 : 1;
    }
  }
  std::ostringstream d;
  d << members << " members {";
  for (auto& [k, v] : families) d << k << ':' << v << ' ';
  d << "}, " << subgraphs << " induced subgraphs, " << bad << " failures";
  report(8, members >= 50 && subgraphs >= 500 && bad == 0, d.str(), since(t0));
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  int rejected = 0;
  auto corpus = build_corpus(rejected);
  std::printf("corpus built: %zu members in %.2fs\n", corpus.size(), since(t0));
  criterion1_3(corpus, rejected);
  criterion2(corpus);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(corpus);
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
