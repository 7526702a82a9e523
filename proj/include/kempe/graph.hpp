#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kempe {

using Vertex = std::int32_t;

/// Simple undirected graph in compressed adjacency form. Neighbor order is
/// preserved as given, which lets TorusGraph store its rotation system here.
class Graph {
 public:
  Graph() = default;

  /// Builds from per-vertex neighbor lists. Lists must be symmetric and free
  /// of loops and duplicates; this is not re-checked.
  explicit Graph(const std::vector<std::vector<Vertex>>& adjacency);

  /// Builds from an edge list, collapsing duplicates. Neighbors are sorted.
  static Graph from_edges(int vertex_count,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  int vertex_count() const noexcept { return static_cast<int>(offsets_.size()) - 1; }
  int edge_count() const noexcept { return static_cast<int>(targets_.size()) / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const noexcept;

  /// Edges (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Breadth-first distances from `source`; unreachable vertices get -1.
  std::vector<int> distances_from(Vertex source) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 protected:
  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Connected-ness of the subgraph induced by vertices with keep[v] == true.
bool induced_connected(const Graph& g, const std::vector<bool>& keep);

}  // namespace kempe

namespace kempe {

/// DIMACS edge format: "p edge n m" then one "e u v" line per edge, 1-based,
/// u < v, sorted lexicographically.
std::string to_dimacs(const Graph& g);

/// Inverse of to_dimacs; throws Error(ParseError).
Graph from_dimacs(std::string_view text);

}  // namespace kempe
