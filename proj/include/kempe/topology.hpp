#pragma once

#include <span>
#include <vector>

#include "kempe/torus_graph.hpp"

namespace kempe {

using HomologyClass = Voltage;

/// Net voltage of a closed walk given as v0, v1, ..., v0. Throws NotAWalk if
/// two consecutive vertices are not adjacent, NotClosed if first != last.
HomologyClass walk_class(const TorusGraph& g, std::span<const Vertex> walk);

struct EdgeWidth {
  int length = 0;
  /// Cycle as an open vertex list; the closing edge returns to the front.
  std::vector<Vertex> witness;
};

/// Shortest non-contractible cycle through `base`, found by breadth-first
/// search in the universal cover from a lift of `base` to the nearest other
/// lift. The graphs are vertex-transitive, so any base gives the edge-width.
EdgeWidth edge_width(const TorusGraph& g, Vertex base = 0);

/// Every non-contractible cycle of exactly `length` edges, each listed once
/// as an open vertex list starting at its smallest vertex.
std::vector<std::vector<Vertex>> noncontractible_cycles(const TorusGraph& g, int length);

}  // namespace kempe
