#pragma once

#include <optional>

#include "isk4col/coloring.hpp"

namespace isk4col::detail {

inline Edge norm(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

// Kempe swaps around the middle edge u between e1 and e2 (u shares one end
// with each). Returns nothing if the swaps do not reach both constraints.
std::optional<EdgeColoringPair> kempe_dual(const Graph& h, Edge e1, Edge e2, Edge u, const EdgeColoring& base);

}  // namespace isk4col::detail
