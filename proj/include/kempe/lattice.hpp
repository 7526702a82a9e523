#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <functional>

namespace kempe {

/// Displacement in the universal cover of the torus (homology voltage).
using Voltage = Eigen::Vector2i;

/// Deck-transformation lattice; the columns are the two generators.
using DeckLattice = Eigen::Matrix2i;

/// Index of the lattice in Z^2, i.e. |det|. Equals the vertex count for the
/// lattices produced by TorusGraph.
inline int lattice_index(const DeckLattice& lattice) {
  return std::abs(lattice(0, 0) * lattice(1, 1) - lattice(0, 1) * lattice(1, 0));
}

/// True iff `v` is an integer combination of the lattice generators.
inline bool in_lattice(const DeckLattice& lattice, const Voltage& v) {
  const long det = static_cast<long>(lattice(0, 0)) * lattice(1, 1) -
                   static_cast<long>(lattice(0, 1)) * lattice(1, 0);
  // adj(L) * v must be divisible by det.
  const long x = static_cast<long>(lattice(1, 1)) * v.x() - static_cast<long>(lattice(0, 1)) * v.y();
  const long y = -static_cast<long>(lattice(1, 0)) * v.x() + static_cast<long>(lattice(0, 0)) * v.y();
  return det != 0 && x % det == 0 && y % det == 0;
}

struct VoltageHash {
  std::size_t operator()(const Voltage& v) const noexcept {
    const auto x = static_cast<std::uint32_t>(v.x());
    const auto y = static_cast<std::uint32_t>(v.y());
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(x) << 32) | y);
  }
};

}  // namespace kempe
