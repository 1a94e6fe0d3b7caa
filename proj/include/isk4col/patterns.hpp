#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "isk4col/graph.hpp"

namespace isk4col {

enum class PatternKind { diamond, bowtie, prism, k33, k4, isk4 };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> pattern_from_string(std::string_view name);

/// An induced copy of a forbidden configuration.
struct PatternWitness {
  PatternKind kind;
  std::vector<VertexId> vertices;  // sorted
  // isk4 only: the four corners and the six corner-to-corner branch paths
  std::vector<VertexId> corners;
  std::vector<std::vector<VertexId>> branches;
};

/// Re-checks the induced structure claimed by a witness from scratch.
bool validate_witness(const Graph& g, const PatternWitness& w);

/// Corners and branch paths if `s` induces a subdivision of K4, else nothing.
std::optional<PatternWitness> k4_subdivision(const Graph& g, std::span<const VertexId> s);

std::optional<PatternWitness> find_diamond(const Graph& g);
std::optional<PatternWitness> find_bowtie(const Graph& g);
std::optional<PatternWitness> find_fixed_pattern(const Graph& g, PatternKind kind);

enum class SearchMode { exact, bounded };
std::string_view to_string(SearchMode mode);

struct Isk4Options {
  /// Graphs with at most this many vertices are searched exhaustively.
  std::size_t budget = 22;
  /// Bounded mode: expansion steps before giving up, and largest subset tried.
  std::uint64_t bounded_steps = 5'000'000;
  std::size_t bounded_max_subset = 48;
  std::uint64_t seed = 0;
  bool parallel = true;
};

struct Isk4Result {
  enum class Status { found, absent, unknown };
  Status status = Status::absent;
  std::optional<PatternWitness> witness;
  SearchMode mode = SearchMode::exact;
};

/// Induced K4-subdivision search. Exact (lexicographically least witness)
/// when the graph fits the budget; otherwise a seeded bounded search that
/// answers `unknown` unless it finds a witness or happens to finish.
Isk4Result find_isk4(const Graph& g, const Isk4Options& opts = {});

/// Single-threaded exact search, kept as the reference for the parallel one.
Isk4Result find_isk4_serial(const Graph& g);

enum class Verdict { member, nonmember, unknown };
std::string_view to_string(Verdict v);

struct MembershipReport {
  Verdict verdict = Verdict::unknown;
  std::optional<PatternWitness> witness;
  SearchMode mode = SearchMode::exact;
  std::size_t budget = 0;
};

/// {ISK4, diamond, bowtie}-freeness check.
MembershipReport verify_membership(const Graph& g, const Isk4Options& opts = {});

}  // namespace isk4col
