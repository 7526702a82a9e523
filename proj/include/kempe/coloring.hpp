#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

using Color = std::uint8_t;

/// Total assignment of colors 1..k to the vertices, in vertex-id order.
struct Coloring {
  int k = 0;
  std::vector<Color> colors;

  Color operator[](Vertex v) const noexcept { return colors[v]; }
  Color& operator[](Vertex v) noexcept { return colors[v]; }
  int size() const noexcept { return static_cast<int>(colors.size()); }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// FNV-1a 64 over the color bytes.
std::uint64_t coloring_hash(const Coloring& phi) noexcept;

/// Recolor the (alpha, beta) Kempe component containing `anchor`.
struct KempeMove {
  Vertex anchor = 0;
  int alpha = 1;
  int beta = 2;
  friend bool operator==(const KempeMove&, const KempeMove&) = default;
};

struct Certificate {
  /// Fingerprint of the graph (see TorusGraph::fingerprint); empty skips the check.
  std::string graph;
  std::uint64_t start_hash = 0;
  std::uint64_t end_hash = 0;
  std::vector<KempeMove> moves;
};

/// Throws LengthMismatch when the color array does not cover the graph.
bool is_proper(const Graph& g, const Coloring& phi);

/// Component of `v` in the subgraph induced by colors alpha and beta, in
/// breadth-first order. Throws AnchorColorMismatch if phi(v) is neither.
std::vector<Vertex> kempe_component(const Graph& g, const Coloring& phi, Vertex v, int alpha,
                                    int beta);

/// Returns phi with alpha and beta interchanged on the move's component.
Coloring apply_move(const Graph& g, const Coloring& phi, const KempeMove& move);

/// Reusable scratch space for repeated component searches on one graph.
class KempeWorkspace {
 public:
  explicit KempeWorkspace(int vertex_count);

  /// Component as in kempe_component; valid until the next call.
  std::span<const Vertex> component(const Graph& g, const Coloring& phi, Vertex v, int alpha,
                                    int beta);

  /// Applies the move in place and returns the component size.
  int apply(const Graph& g, Coloring& phi, const KempeMove& move);

  /// Whether `v` was in the most recent component.
  bool in_component(Vertex v) const noexcept { return stamp_[v] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> queue_;
};

/// Moves that interchange alpha and beta everywhere: one per component.
std::vector<KempeMove> transposition_moves(const Graph& g, const Coloring& phi, int alpha,
                                           int beta);

struct VerifyResult {
  bool ok = false;
  /// Index of the first move that failed, if a move was at fault.
  std::optional<std::size_t> failed_move;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Replays the certificate from phi_start, checking the graph fingerprint
/// (when given), both hash anchors, each move's validity, and properness of
/// every intermediate coloring.
VerifyResult verify_certificate(const Graph& g, const Coloring& phi_start, const Certificate& cert);

/// The same swaps in reverse order, with the hash anchors exchanged.
Certificate reversed(const Certificate& cert);

/// Appends `tail` to `head`; head.end_hash must equal tail.start_hash.
Certificate concatenate(const Certificate& head, const Certificate& tail);

/// Builds a certificate by replaying `moves` from phi; returns the final
/// coloring through `end` when non-null.
Certificate make_certificate(const Graph& g, const Coloring& phi, std::vector<KempeMove> moves,
                             std::string fingerprint = {}, Coloring* end = nullptr);

/// Proper k-coloring: greedy over a random vertex order with a uniform free
/// color, falling back to seeded exact search. Throws Unsatisfiable when
/// none exists.
Coloring random_proper(const Graph& g, int k, std::uint64_t seed);

/// Exact backtracking search for a proper k-coloring. Variables are chosen by
/// saturation, then degree, then lowest id; colors ascending, with unused
/// colors treated as interchangeable. With a seed, ties and color order are
/// randomized. Returns nullopt when exhausted; throws CapExceeded after
/// `node_cap` search nodes.
std::optional<Coloring> solve_coloring(const Graph& g, int k, long long node_cap,
                                       std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace kempe
