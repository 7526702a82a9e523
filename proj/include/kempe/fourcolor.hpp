#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/torus_graph.hpp"

namespace kempe {

struct FourColorVerdict {
  bool colorable = false;
  /// 1..5: which family of non-4-colorable graphs matched.
  std::optional<int> exception_case;
  std::optional<Coloring> witness;
};

/// The sporadic non-4-colorable circulants C_n[1,r,r+1], as (r, n).
inline constexpr std::array<std::pair<int, int>, 16> kSporadicExceptions{{
    {3, 13}, {3, 17}, {3, 18}, {3, 25}, {4, 17}, {6, 17}, {6, 25}, {6, 33},
    {7, 19}, {7, 25}, {7, 26}, {9, 25}, {10, 25}, {10, 26}, {10, 37}, {14, 33},
}};

/// The shifted grids T[a x b, c] that are not 4-colorable, as (a, b, c).
inline constexpr std::array<GridTriple, 6> kGridExceptions{{
    {3, 3, 2}, {3, 3, 3}, {5, 3, 2}, {5, 3, 3}, {5, 5, 3}, {5, 5, 4},
}};

/// Classification of 4-colorability. Parameters listed in an exception
/// family report that family; other simple graphs are matched against the
/// families up to isomorphism (canonical forms), lowest index first.
/// Colorable verdicts carry a witness. Throws SimpleGraphViolation for
/// multigraph parameters outside the families.
FourColorVerdict classify(const GraphParams& params);

/// Exact search for a proper 4-coloring; nullopt if none exists. Throws
/// CapExceeded after `node_cap` nodes.
std::optional<Coloring> solve_4coloring(const Graph& g, long long node_cap = 100'000'000);

/// Graph on the given parameters with loops dropped and parallel edges
/// merged; defined even where TorusGraph construction refuses.
Graph underlying_simple_graph(const GraphParams& params);

}  // namespace kempe
