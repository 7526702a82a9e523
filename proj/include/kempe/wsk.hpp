#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/reconfig.hpp"
#include "kempe/rng.hpp"

namespace kempe {

/// Label of the proposal kernel, reported with every chain.
inline constexpr std::string_view kWskKernel = "uniform-vertex-uniform-color";

/// One zero-temperature WSK step in place: uniform vertex v, uniform color
/// beta != phi(v), swap the (phi(v), beta) component of v. Returns the move.
KempeMove wsk_step(const Graph& g, Coloring& phi, Rng& rng, KempeWorkspace& ws);

struct ChainStats {
  long long steps = 0;
  long long accepted = 0;
  long long rejected = 0;
  long long distinct_colorings = 0;
  /// Visits per class (initial coloring included) when a report was given.
  std::optional<std::vector<long long>> class_visits;
  bool contains_triple_seen = false;
  Coloring initial;
  Coloring final_coloring;
};

struct ChainOptions {
  /// Start from this coloring instead of random_proper(g, k, seed).
  std::optional<Coloring> start;
  const ClassIndex* classes = nullptr;
  /// Track whether any visited coloring contains a triple (TorusGraph only).
  const TorusGraph* track_triples = nullptr;
};

ChainStats run_chain(const Graph& g, int k, long long steps, std::uint64_t seed,
                     const ChainOptions& options = {});

}  // namespace kempe
