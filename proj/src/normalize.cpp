#include <algorithm>
#include <queue>
#include <unordered_set>

#include "kempe/error.hpp"
#include "kempe/patterns.hpp"
#include "kempe/reconfig.hpp"
#include "kempe/rng.hpp"
#include "kempe/topology.hpp"

namespace kempe {
namespace {

bool is_six_by_b(const TorusGraph& g) {
  for (const auto& f : canonical_forms(g))
    if (f[2] == 1 && (f[0] == 6 || f[1] == 6)) return true;
  return false;
}

struct Extension {
  Vertex x;
  Template tmpl;
};

// Per-graph tables: for each (center, parity) the good triple extensions.
class LadderTables {
 public:
  explicit LadderTables(const TorusGraph& g) : g_(g), ext_(2 * g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (int p = 0; p < 2; ++p) {
        Pattern triple{PatternKind::Triple, v,
                       {g.neighbor(v, p), g.neighbor(v, p + 2), g.neighbor(v, p + 4)}};
        for (auto& t : triple_templates(g, triple)) {
          Vertex x = t.colors[0].back();
          ext_[2 * v + p].push_back({x, std::move(t)});
        }
      }
    }
  }

  const std::vector<Extension>& extensions(Vertex center, int parity) const {
    return ext_[2 * center + parity];
  }

 private:
  const TorusGraph& g_;
  std::vector<std::vector<Extension>> ext_;
};

struct Evaluation {
  int rank = 0;
  int potential = -7;
  std::vector<Vertex> focus;
  std::optional<Template> good;
};

int conflicts(const Graph& g, const Coloring& phi, Vertex u, int color) {
  int count = 0;
  for (Vertex w : g.neighbors(u)) count += phi[w] == color;
  return count;
}

Evaluation evaluate(const TorusGraph& g, const LadderTables& tables, const Coloring& phi) {
  Evaluation best;
  bool have_triple = false;
  int best_ext = 7;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int p = 0; p < 2; ++p) {
      Vertex a = g.neighbor(v, p), b = g.neighbor(v, p + 2), c = g.neighbor(v, p + 4);
      if (phi[a] == phi[b] && phi[b] == phi[c]) {
        const int color = phi[a];
        for (const auto& e : tables.extensions(v, p)) {
          if (phi[e.x] == color) {
            Evaluation done;
            done.rank = 4;
            done.potential = 0;
            done.focus = {a, b, c, v, e.x};
            done.good = e.tmpl;
            return done;
          }
          int k = conflicts(g, phi, e.x, color);
          if (!have_triple || k < best_ext) {
            best_ext = k;
            best.focus = {a, b, c, v, e.x};
          }
          have_triple = true;
        }
        if (!have_triple) {
          have_triple = true;
          best_ext = 7;
          best.focus = {a, b, c, v};
        }
      }
    }
  }
  if (have_triple) {
    best.rank = 3;
    best.potential = -best_ext;
    return best;
  }
  // Closeness to a triple: two alternate neighbors agree, the third is blocked
  // by as few neighbors as possible.
  int best_near = 7;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int p = 0; p < 2; ++p) {
      Vertex t[3] = {g.neighbor(v, p), g.neighbor(v, p + 2), g.neighbor(v, p + 4)};
      for (int i = 0; i < 3; ++i) {
        Vertex a = t[i], b = t[(i + 1) % 3], u = t[(i + 2) % 3];
        if (phi[a] != phi[b]) continue;
        int k = conflicts(g, phi, u, phi[a]);
        if (k < best_near) {
          best_near = k;
          best.focus = {a, b, u, v};
        }
      }
    }
  }
  best.potential = -best_near;
  if (!find_parallel_pairs(g, phi).empty() || !find_crossing_pairs(g, phi).empty()) best.rank = 2;
  else if (!find_pairs(g, phi).empty()) best.rank = 1;
  if (best.focus.empty()) best.focus = {0};
  return best;
}

std::vector<Vertex> ball(const Graph& g, std::span<const Vertex> centers, int radius) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> out;
  for (Vertex v : centers) {
    if (dist[v] < 0) {
      dist[v] = 0;
      out.push_back(v);
    }
  }
  for (std::size_t head = 0; head < out.size(); ++head) {
    Vertex u = out[head];
    if (dist[u] == radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SearchNode {
  Coloring phi;
  int parent;
  KempeMove move;
  int depth;
  int rank;
  int potential;
};

// Best-first search for a coloring of higher ladder rank than the root, using
// only moves anchored in `region` (every vertex when empty).
std::optional<std::vector<KempeMove>> upgrade(const TorusGraph& g, const LadderTables& tables,
                                              const Coloring& root, int root_rank,
                                              std::span<const Vertex> region,
                                              const NormalizeOptions& options,
                                              long long budget) {
  std::vector<SearchNode> nodes;
  Evaluation e0 = evaluate(g, tables, root);
  nodes.push_back({root, -1, {}, 0, e0.rank, e0.potential});
  auto worse = [&](int a, int b) {
    const auto& x = nodes[a];
    const auto& y = nodes[b];
    if (x.rank != y.rank) return x.rank < y.rank;
    if (x.potential != y.potential) return x.potential < y.potential;
    if (x.depth != y.depth) return x.depth > y.depth;
    return a > b;
  };
  std::priority_queue<int, std::vector<int>, decltype(worse)> frontier(worse);
  std::unordered_set<std::uint64_t> seen{coloring_hash(root)};
  frontier.push(0);
  KempeWorkspace ws(g.vertex_count());
  std::vector<Vertex> all;
  if (region.empty()) {
    all.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    region = all;
  }
  long long expanded = 0;
  while (!frontier.empty() && expanded < budget) {
    const int cur = frontier.top();
    frontier.pop();
    ++expanded;
    if (nodes[cur].depth >= options.depth_limit) continue;
    for (Vertex v : region) {
      for (int beta = 1; beta <= 5; ++beta) {
        const Coloring& base = nodes[cur].phi;
        if (beta == base[v]) continue;
        KempeMove mv{v, base[v], beta};
        Coloring next = base;
        ws.apply(g, next, mv);
        if (!seen.insert(coloring_hash(next)).second) continue;
        Evaluation e = evaluate(g, tables, next);
        nodes.push_back({std::move(next), cur, mv, nodes[cur].depth + 1, e.rank, e.potential});
        const int id = static_cast<int>(nodes.size()) - 1;
        if (e.rank > root_rank) {
          std::vector<KempeMove> path;
          for (int i = id; nodes[i].parent >= 0; i = nodes[i].parent) path.push_back(nodes[i].move);
          std::reverse(path.begin(), path.end());
          return path;
        }
        frontier.push(id);
      }
    }
  }
  return std::nullopt;
}

// Witness regions tried in turn: every triple / near-triple focus of the root.
std::vector<std::vector<Vertex>> candidate_focuses(const TorusGraph& g, const Coloring& phi,
                                                   const Evaluation& e, Rng& rng) {
  std::vector<std::vector<Vertex>> out{e.focus};
  std::vector<std::vector<Vertex>> others;
  for (const auto& p : find_triples(g, phi)) {
    auto f = p.witness;
    f.push_back(p.center);
    others.push_back(f);
  }
  for (const auto& p : find_parallel_pairs(g, phi)) others.push_back(p.witness);
  for (const auto& p : find_crossing_pairs(g, phi)) others.push_back(p.witness);
  for (const auto& p : find_pairs(g, phi)) others.push_back(p.witness);
  shuffle(others.begin(), others.end(), rng);
  if (others.size() > 8) others.resize(8);
  out.insert(out.end(), others.begin(), others.end());
  return out;
}

}  // namespace

int ladder_rank(const TorusGraph& g, const Coloring& phi) {
  return evaluate(g, LadderTables(g), phi).rank;
}

struct Normalizer::Tables : LadderTables {
  using LadderTables::LadderTables;
};

Normalizer::Normalizer(const TorusGraph& g, const NormalizeOptions& options)
    : g_(g), options_(options) {
  const int ew = edge_width(g).length;
  if (ew < 7 && !(ew == 6 && options.six_cycle_augmentation && is_six_by_b(g))) {
    throw Error(ErrorKind::PreconditionViolated,
                "edge-width " + std::to_string(ew) + " is below 7" +
                    (ew == 6 && is_six_by_b(g) ? " (six-cycle augmentation admits this T[6xb])" : ""));
  }
  tables_ = std::make_unique<Tables>(g);
}

Normalizer::~Normalizer() = default;

NormalizeResult Normalizer::run(const Coloring& phi) const {
  if (phi.k != 5 || !is_proper(g_, phi)) {
    throw Error(ErrorKind::PreconditionViolated, "input is not a proper 5-coloring");
  }
  Rng rng(options_.seed);
  Coloring cur = phi;
  std::vector<KempeMove> moves;
  KempeWorkspace ws(g_.vertex_count());
  for (;;) {
    Evaluation e = evaluate(g_, *tables_, cur);
    if (e.rank == 4) {
      NormalizeResult result;
      result.certificate = make_certificate(g_, phi, std::move(moves), g_.fingerprint(),
                                            &result.final_coloring);
      result.good_template = *e.good;
      return result;
    }
    std::optional<std::vector<KempeMove>> path;
    for (const auto& focus : candidate_focuses(g_, cur, e, rng)) {
      auto region = ball(g_, focus, options_.locality_radius);
      path = upgrade(g_, *tables_, cur, e.rank, region, options_, options_.node_budget);
      if (path) break;
    }
    if (!path) path = upgrade(g_, *tables_, cur, e.rank, {}, options_, 5 * options_.node_budget);
    if (!path) {
      throw Error(ErrorKind::SearchExhausted,
                  "no upgrade found from ladder rank " + std::to_string(e.rank));
    }
    for (const auto& mv : *path) ws.apply(g_, cur, mv);
    moves.insert(moves.end(), path->begin(), path->end());
  }
}

NormalizeResult normalize(const TorusGraph& g, const Coloring& phi,
                          const NormalizeOptions& options) {
  return Normalizer(g, options).run(phi);
}

}  // namespace kempe
