#include "kempe/wsk.hpp"

#include <unordered_set>

#include "kempe/error.hpp"
#include "kempe/patterns.hpp"

namespace kempe {

KempeMove wsk_step(const Graph& g, Coloring& phi, Rng& rng, KempeWorkspace& ws) {
  const auto v = static_cast<Vertex>(rng.bounded(static_cast<std::uint64_t>(g.vertex_count())));
  const int alpha = phi[v];
  int beta = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(phi.k - 1)));
  if (beta >= alpha) ++beta;
  const KempeMove move{v, alpha, beta};
  ws.apply(g, phi, move);
  return move;
}

ChainStats run_chain(const Graph& g, int k, long long steps, std::uint64_t seed,
                     const ChainOptions& options) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
  if (steps < 0) throw Error(ErrorKind::InvalidArgument, "steps must be non-negative");
  Rng rng(seed);
  Coloring phi;
  if (options.start) {
    phi = *options.start;
    if (phi.k != k || !is_proper(g, phi)) {
      throw Error(ErrorKind::PreconditionViolated, "chain start is not a proper " + std::to_string(k) +
                                            "-coloring");
    }
  } else {
    phi = random_proper(g, k, rng.next());
  }

  ChainStats stats;
  stats.initial = phi;
  std::unordered_set<std::uint64_t> seen;
  auto visit = [&] {
    seen.insert(coloring_hash(phi));
    if (options.classes) {
      const auto id = options.classes->class_of(phi);
      if (!id) throw Error(ErrorKind::PreconditionViolated, "chain left the proper colorings");
      ++(*stats.class_visits)[*id];
    }
    if (options.track_triples && !stats.contains_triple_seen) {
      stats.contains_triple_seen = !find_triples(*options.track_triples, phi).empty();
    }
  };
  if (options.classes) stats.class_visits.emplace(options.classes->class_count(), 0);
  visit();

  KempeWorkspace ws(g.vertex_count());
  for (long long s = 0; s < steps; ++s) {
    wsk_step(g, phi, rng, ws);
    ++stats.steps;
    ++stats.accepted;
    visit();
  }
  stats.distinct_colorings = static_cast<long long>(seen.size());
  stats.final_coloring = std::move(phi);
  return stats;
}

}  // namespace kempe
