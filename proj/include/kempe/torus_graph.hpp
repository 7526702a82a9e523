#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/lattice.hpp"

namespace kempe {

/// T[a x b, c]: a rows, b columns, edges from column b to column 1 shifted by c.
struct ShiftedGridParams {
  int a = 0;
  int b = 0;
  int c = 1;
  friend auto operator<=>(const ShiftedGridParams&, const ShiftedGridParams&) = default;
};

/// C_n[1, r, r+1].
struct CirculantParams {
  int n = 0;
  int r = 0;
  friend auto operator<=>(const CirculantParams&, const CirculantParams&) = default;
};

using GraphParams = std::variant<ShiftedGridParams, CirculantParams>;

/// (a, b, c) with 1 <= c <= a.
using GridTriple = std::array<int, 3>;

inline constexpr int kDegree = 6;

/// Immutable 6-regular toroidal triangulation. The neighbor list of every
/// vertex is its rotation (cyclic order around the vertex), and every
/// directed edge carries its displacement in the universal cover.
///
/// Vertex ids are 0-based. For T[a x b, c] the grid vertex (i, j) (1-based)
/// has id (i-1)*b + (j-1); for C_n[1,r,r+1] vertex i has id i-1.
class TorusGraph : public Graph {
 public:
  /// Throws Error(SimpleGraphViolation) for loops or parallel edges.
  static TorusGraph shifted_grid(int a, int b, int c);
  static TorusGraph circulant(int n, int r);
  static TorusGraph from_params(const GraphParams& params);

  const GraphParams& params() const noexcept { return params_; }

  std::span<const Vertex> rotation(Vertex v) const noexcept { return neighbors(v); }
  Vertex neighbor(Vertex v, int slot) const noexcept {
    return targets_[offsets_[v] + ((slot % kDegree) + kDegree) % kDegree];
  }
  const Voltage& voltage(Vertex v, int slot) const noexcept {
    return voltages_[offsets_[v] + ((slot % kDegree) + kDegree) % kDegree];
  }
  /// Slot of `u` in the rotation of `v`, or -1.
  int slot_of(Vertex v, Vertex u) const noexcept;

  /// Voltage of the directed edge v -> u; u must be adjacent to v.
  const Voltage& voltage_to(Vertex v, Vertex u) const;

  const DeckLattice& deck_lattice() const noexcept { return lattice_; }

  /// FNV-1a 64 of the DIMACS export, as 16 lowercase hex digits.
  std::string fingerprint() const;

  /// Human-readable family name, e.g. "T[5x7,1]" or "C37[1,10,11]".
  std::string name() const;

 private:
  TorusGraph(GraphParams params, std::vector<std::array<Vertex, kDegree>> rotation,
             std::vector<std::array<Voltage, kDegree>> voltages, DeckLattice lattice);

  GraphParams params_;
  std::vector<Voltage> voltages_;
  DeckLattice lattice_;
};

/// Vertex reached by walking straight: arrive at `v` from `prev`, leave
/// through the opposite slot (3 later in the rotation of `v`).
Vertex straight_successor(const TorusGraph& g, Vertex prev, Vertex v);

/// Walks `steps` straight steps from `start`, leaving through `slot`.
Vertex walk_straight(const TorusGraph& g, Vertex start, int slot, int steps);

/// Local lattice frame at a vertex: the x-axis leaves through `base_slot`,
/// the y-axis through `base_slot + orientation` (orientation is +1 or -1).
struct Frame {
  Vertex origin = 0;
  int base_slot = 0;
  int orientation = 1;
};

/// Vertex at lattice offset x*e_x + y*e_y from the frame origin, found by
/// walking straight along e_x and then along the transported e_y. Works on
/// any consistently oriented rotation system.
Vertex frame_offset(const TorusGraph& g, const Frame& frame, int x, int y);

/// All parameter triples (a, b, c), c <= a, realizing `g` as T[a x b, c].
/// Sorted and duplicate-free; at most 6 entries. Throws MalformedRotation if a
/// straight walk fails to close consistently.
std::vector<GridTriple> canonical_forms(const TorusGraph& g);

/// Graph isomorphism through a shared canonical form: returns phi with
/// phi[v in g] = vertex of h, or nullopt when the forms are disjoint.
std::optional<std::vector<Vertex>> torus_isomorphism(const TorusGraph& g, const TorusGraph& h);

/// Every simple 6-regular toroidal graph on n vertices up to isomorphism,
/// one representative per class, in order of first parameterization
/// (a ascending, then c ascending).
std::vector<TorusGraph> enumerate_graphs(int n);

/// All (a, b, c) with a*b = n and 1 <= c <= a, simple or not.
std::vector<GridTriple> raw_parameterizations(int n);

enum class SamplingMode { UniformClass, UniformTriple };

/// Uniform draw from enumerate_graphs(n) (or from the simple raw triples in
/// UniformTriple mode). Throws NoValidGraph when nothing qualifies.
TorusGraph sample_uniform(int n, std::uint64_t seed, SamplingMode mode = SamplingMode::UniformClass);

}  // namespace kempe
