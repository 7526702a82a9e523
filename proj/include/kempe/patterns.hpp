#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/degeneracy.hpp"
#include "kempe/torus_graph.hpp"

namespace kempe {

enum class PatternKind { Pair, Triple, ParallelPairs, CrossingPairs };

std::string_view to_string(PatternKind kind);

/// A colored motif. Witness layouts:
///   pair:            x, y, then their two common neighbors (ascending);
///   triple:          the three same-colored neighbors of `center`, in rotation order;
///   parallel pairs:  x1, x2, y1, y2 with x1/x2 flanking one neighbor of
///                    `center` and y1/y2 flanking the opposite one;
///   crossing pairs:  four consecutive neighbors of `center`, colored x, y, x, y.
struct Pattern {
  PatternKind kind = PatternKind::Pair;
  Vertex center = -1;
  std::vector<Vertex> witness;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Every motif instance, grouped by kind (triples, parallel pairs, crossing
/// pairs, pairs), each group in increasing center / vertex order.
std::vector<Pattern> find_patterns(const TorusGraph& g, const Coloring& phi);

std::vector<Pattern> find_triples(const TorusGraph& g, const Coloring& phi);
std::vector<Pattern> find_parallel_pairs(const TorusGraph& g, const Coloring& phi);
std::vector<Pattern> find_crossing_pairs(const TorusGraph& g, const Coloring& phi);
std::vector<Pattern> find_pairs(const Graph& g, const Coloring& phi);

/// The monochromatic 4-templates formed by a triple and one more vertex in
/// the two standard positions, under the six symmetries of the triple; only
/// the good ones are returned.
std::vector<Template> triple_templates(const TorusGraph& g, const Pattern& triple);

/// Candidate 4th vertices for triple_templates, before the goodness filter.
std::vector<Vertex> triple_extension_vertices(const TorusGraph& g, const Pattern& triple);

/// Vertices v outside H and T such that T plus the singleton color {v} is
/// still good, each with the augmented template.
std::vector<std::pair<Vertex, Template>> bonus_vertices(const Graph& g, const Template& t,
                                                        std::span<const Vertex> h);

}  // namespace kempe
