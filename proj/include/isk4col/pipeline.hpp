#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isk4col/coloring.hpp"
#include "isk4col/cutsets.hpp"
#include "isk4col/graph.hpp"
#include "isk4col/recognition.hpp"

namespace isk4col {

/// FNV-1a 64 over the canonical id and edge lists, as 16 hex digits.
std::string graph_hash(const Graph& g);

struct TreeSummary {
  int node_count = 0;
  int layers = 0;
  std::vector<std::vector<VertexId>> cutsets;  // in node order, internal nodes only
};

/// What happened to one basic leaf of the top-level tree.
struct LeafRecord {
  int node = 0;
  std::vector<VertexId> vertices;  // residual of the leaf
  std::vector<Branch> steps;       // classify_basic verdicts along the proper 2-cutset loop
  int nested = 0;                  // recursive pipeline calls for non-basic T_Y
};

struct PipelineStats {
  int basic_leaves = 0;      // including leaves of nested runs
  int proper2_steps = 0;
  int unclassified = 0;
  int fallbacks = 0;         // exhaustive dual searches
  std::map<std::string, int> routes;
  std::map<std::string, int> branches;

  PipelineStats& operator+=(const PipelineStats& o);
};

struct ColoringCertificate {
  int schema_version = 1;
  std::string graph_hash;
  VertexColoring coloring;
  TreeSummary tree;
  std::vector<LeafRecord> leaves;
  bool proper = false;
  int palette = 0;
  PipelineStats stats;
};

struct PipelineOptions {
  int jobs = 1;
  DualOptions dual;
};

/// Decompose, classify, color and recombine. Raises ClassificationFailure
/// (carrying the offending subgraph) when the structure assumptions fail.
ColoringCertificate color_class_member(const Graph& g, const PipelineOptions& opts = {});

/// Recomputes the hash, totality, properness and the palette bound.
bool verify_certificate(const Graph& g, const ColoringCertificate& cert);

}  // namespace isk4col
