#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/rng.hpp"
#include "kempe/torus_graph.hpp"

namespace kempe {

/// Disjoint independent vertex sets, each to be identified to one vertex.
struct Template {
  std::vector<std::vector<Vertex>> colors;

  bool monochromatic() const noexcept { return colors.size() == 1; }
  /// All template vertices, color by color.
  std::vector<Vertex> vertices() const;
  friend bool operator==(const Template&, const Template&) = default;
};

/// Throws Overlap, NotIndependent, or InvalidArgument (empty color or
/// out-of-range vertex).
void validate_template(const Graph& g, const Template& t);

/// Whether every color of `t` is monochromatic under phi.
bool contains_template(const Coloring& phi, const Template& t);

/// G_T. Ids: the uncontracted vertices in increasing original order, then one
/// id per template color in template order.
struct QuotientGraph {
  Graph graph;
  std::vector<Vertex> to_quotient;
  std::vector<std::vector<Vertex>> members;
  int template_offset = 0;

  int vertex_count() const noexcept { return graph.vertex_count(); }
  int degree(Vertex q) const noexcept { return graph.degree(q); }
  bool is_template(Vertex q) const noexcept { return q >= template_offset; }
};

QuotientGraph contract(const Graph& g, const Template& t);

using DegeneracyOrder = std::vector<Vertex>;

/// Whether each vertex of `order` has at least d(v) - 4 neighbors earlier in
/// it, with d the degree in `qg`.
bool is_degeneracy_prefix(const QuotientGraph& qg, std::span<const Vertex> order);

/// Extends `prefix` to a full 4-degeneracy order of the quotient, placing the
/// template vertices last. Vertices are appended breadth-first as soon as
/// they have enough earlier neighbors; the reachable set does not depend on
/// the choice order, so nullopt means no such order exists. Throws
/// InvalidPrefix if the prefix is not a 4-degeneracy prefix of non-template
/// vertices.
std::optional<DegeneracyOrder> degeneracy_order(const QuotientGraph& qg,
                                                std::span<const Vertex> prefix = {});

/// Whether the graph is 4-degenerate, with no constraint on placement.
bool is_four_degenerate(const Graph& g);

/// Witness order on contract(g, t), template vertices last, or nullopt.
std::optional<DegeneracyOrder> is_good(const Graph& g, const Template& t);

struct WellBehavedReport {
  bool locally_connected = false;
  bool complement_connected = false;
  /// True when locality was decided by the excluded-vertex criterion rather
  /// than by checking every distance-two pair.
  bool used_criterion = false;
  /// With six-cycle augmentation: the missing vertex of every
  /// non-contractible 6-cycle that meets H in exactly five vertices.
  std::vector<Vertex> six_cycle_completions;

  explicit operator bool() const noexcept { return locally_connected && complement_connected; }
};

/// Every pair of H at distance two in G is at distance two inside G[H].
bool is_locally_connected(const Graph& g, std::span<const Vertex> h);

/// Some vertex outside H has at least four neighbors in H.
std::optional<Vertex> excluded_hub(const Graph& g, std::span<const Vertex> h);

/// Well-behavedness of the induced subgraph G[H]. When G[H] has diameter at
/// most 4 and the edge-width is at least 7, locality is decided by the
/// absence of an excluded hub.
WellBehavedReport is_well_behaved(const TorusGraph& g, std::span<const Vertex> h,
                                  bool augment_six_cycles = false);

/// Extends a coloring that is fixed on the template vertices (and contains
/// the template) to all of G by coloring the rest in reverse degeneracy
/// order. Colors are chosen uniformly from the free ones when `rng` is given,
/// else the smallest free color. Requires k >= 5.
Coloring extend_coloring(const Graph& g, const QuotientGraph& qg, const DegeneracyOrder& order,
                         const Coloring& partial, Rng* rng = nullptr);

}  // namespace kempe
