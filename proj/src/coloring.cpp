#include "kempe/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "kempe/error.hpp"
#include "kempe/hash.hpp"
#include "kempe/rng.hpp"

namespace kempe {

std::uint64_t coloring_hash(const Coloring& phi) noexcept {
  return fnv1a64(std::span<const std::uint8_t>(phi.colors));
}

bool is_proper(const Graph& g, const Coloring& phi) {
  if (phi.size() != g.vertex_count()) {
    throw Error(ErrorKind::LengthMismatch, "coloring has " + std::to_string(phi.size()) +
                                               " entries for " + std::to_string(g.vertex_count()) +
                                               " vertices");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (phi[v] < 1 || phi[v] > phi.k) return false;
    for (Vertex u : g.neighbors(v))
      if (phi[u] == phi[v]) return false;
  }
  return true;
}

KempeWorkspace::KempeWorkspace(int vertex_count) : stamp_(vertex_count, 0) {
  queue_.reserve(vertex_count);
}

std::span<const Vertex> KempeWorkspace::component(const Graph& g, const Coloring& phi, Vertex v,
                                                  int alpha, int beta) {
  if (phi[v] != alpha && phi[v] != beta) {
    throw Error(ErrorKind::AnchorColorMismatch,
                "vertex " + std::to_string(v) + " has color " + std::to_string(phi[v]) +
                    ", not " + std::to_string(alpha) + " or " + std::to_string(beta));
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  queue_.push_back(v);
  stamp_[v] = epoch_;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Vertex u = queue_[head];
    for (Vertex w : g.neighbors(u)) {
      if (stamp_[w] != epoch_ && (phi[w] == alpha || phi[w] == beta)) {
        stamp_[w] = epoch_;
        queue_.push_back(w);
      }
    }
  }
  return queue_;
}

int KempeWorkspace::apply(const Graph& g, Coloring& phi, const KempeMove& move) {
  auto comp = component(g, phi, move.anchor, move.alpha, move.beta);
  const auto a = static_cast<Color>(move.alpha);
  const auto b = static_cast<Color>(move.beta);
  for (Vertex u : comp) phi[u] = phi[u] == a ? b : a;
  return static_cast<int>(comp.size());
}

std::vector<Vertex> kempe_component(const Graph& g, const Coloring& phi, Vertex v, int alpha,
                                    int beta) {
  KempeWorkspace ws(g.vertex_count());
  auto comp = ws.component(g, phi, v, alpha, beta);
  return {comp.begin(), comp.end()};
}

Coloring apply_move(const Graph& g, const Coloring& phi, const KempeMove& move) {
  Coloring out = phi;
  KempeWorkspace ws(g.vertex_count());
  ws.apply(g, out, move);
  return out;
}

std::vector<KempeMove> transposition_moves(const Graph& g, const Coloring& phi, int alpha,
                                           int beta) {
  std::vector<KempeMove> moves;
  std::vector<bool> done(g.vertex_count(), false);
  KempeWorkspace ws(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (done[v] || (phi[v] != alpha && phi[v] != beta)) continue;
    for (Vertex u : ws.component(g, phi, v, alpha, beta)) done[u] = true;
    moves.push_back({v, alpha, beta});
  }
  return moves;
}

VerifyResult verify_certificate(const Graph& g, const Coloring& phi_start, const Certificate& cert) {
  auto fail = [](std::string reason, std::optional<std::size_t> index = std::nullopt) {
    return VerifyResult{false, index, std::move(reason)};
  };
  if (!cert.graph.empty() && cert.graph != to_hex(fnv1a64(to_dimacs(g)))) {
    return fail("graph fingerprint mismatch");
  }
  if (phi_start.size() != g.vertex_count()) return fail("start coloring has wrong length");
  if (phi_start.k < 1 || phi_start.k > 255) return fail("palette size out of range");
  if (coloring_hash(phi_start) != cert.start_hash) return fail("start hash mismatch");
  if (!is_proper(g, phi_start)) return fail("start coloring is not proper");

  Coloring phi = phi_start;
  KempeWorkspace ws(g.vertex_count());
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    const KempeMove& m = cert.moves[i];
    if (m.anchor < 0 || m.anchor >= g.vertex_count()) return fail("anchor out of range", i);
    if (m.alpha < 1 || m.alpha > phi.k || m.beta < 1 || m.beta > phi.k)
      return fail("color out of range", i);
    if (m.alpha == m.beta) return fail("alpha equals beta", i);
    if (phi[m.anchor] != m.alpha && phi[m.anchor] != m.beta)
      return fail("anchor color not in the move's pair", i);
    ws.apply(g, phi, m);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!ws.in_component(v)) continue;
      for (Vertex u : g.neighbors(v))
        if (phi[u] == phi[v]) return fail("intermediate coloring is not proper", i);
    }
  }
  if (coloring_hash(phi) != cert.end_hash) return fail("end hash mismatch");
  return {true, std::nullopt, {}};
}

Certificate reversed(const Certificate& cert) {
  Certificate out{cert.graph, cert.end_hash, cert.start_hash, cert.moves};
  std::reverse(out.moves.begin(), out.moves.end());
  return out;
}

Certificate concatenate(const Certificate& head, const Certificate& tail) {
  if (head.end_hash != tail.start_hash) {
    throw Error(ErrorKind::InvalidArgument, "certificates do not meet: end " +
                                                to_hex(head.end_hash) + " vs start " +
                                                to_hex(tail.start_hash));
  }
  Certificate out{head.graph.empty() ? tail.graph : head.graph, head.start_hash, tail.end_hash,
                  head.moves};
  out.moves.insert(out.moves.end(), tail.moves.begin(), tail.moves.end());
  return out;
}

Certificate make_certificate(const Graph& g, const Coloring& phi, std::vector<KempeMove> moves,
                             std::string fingerprint, Coloring* end) {
  Coloring cur = phi;
  KempeWorkspace ws(g.vertex_count());
  for (const auto& m : moves) ws.apply(g, cur, m);
  Certificate cert{std::move(fingerprint), coloring_hash(phi), coloring_hash(cur), std::move(moves)};
  if (end != nullptr) *end = std::move(cur);
  return cert;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, long long node_cap, std::optional<std::uint64_t> seed)
      : g_(g),
        k_(k),
        n_(g.vertex_count()),
        cap_(node_cap),
        color_(n_, 0),
        count_(static_cast<std::size_t>(n_) * (k + 1), 0),
        sat_(n_, 0),
        used_(k + 1, 0),
        priority_(n_) {
    std::iota(priority_.begin(), priority_.end(), 0);
    if (seed) {
      rng_.emplace(*seed);
      shuffle(priority_.begin(), priority_.end(), *rng_);
    }
  }

  std::optional<Coloring> run() {
    if (k_ < 1) return std::nullopt;
    if (!search(0)) return std::nullopt;
    Coloring out{k_, std::vector<Color>(n_)};
    for (Vertex v = 0; v < n_; ++v) out[v] = static_cast<Color>(color_[v]);
    return out;
  }

 private:
  int& count(Vertex v, int c) { return count_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  void assign(Vertex v, int c) {
    color_[v] = c;
    ++used_[c];
    for (Vertex u : g_.neighbors(v))
      if (count(u, c)++ == 0) ++sat_[u];
  }

  void unassign(Vertex v) {
    int c = color_[v];
    color_[v] = 0;
    --used_[c];
    for (Vertex u : g_.neighbors(v))
      if (--count(u, c) == 0) --sat_[u];
  }

  Vertex select() const {
    Vertex best = -1;
    int best_sat = -1, best_deg = -1, best_pri = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      int deg = 0;
      for (Vertex u : g_.neighbors(v)) deg += color_[u] == 0;
      if (sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg) ||
          (sat_[v] == best_sat && deg == best_deg && priority_[v] < best_pri)) {
        best = v;
        best_sat = sat_[v];
        best_deg = deg;
        best_pri = priority_[v];
      }
    }
    return best;
  }

  bool search(int colored) {
    if (colored == n_) return true;
    if (++nodes_ > cap_) {
      throw Error(ErrorKind::CapExceeded,
                  "coloring search exceeded " + std::to_string(cap_) + " nodes");
    }
    Vertex v = select();
    std::vector<int> order;
    order.reserve(k_);
    bool tried_unused = false;
    for (int c = 1; c <= k_; ++c) {
      if (count(v, c) != 0) continue;
      if (used_[c] == 0) {
        if (tried_unused) continue;
        tried_unused = true;
      }
      order.push_back(c);
    }
    if (rng_) shuffle(order.begin(), order.end(), *rng_);
    for (int c : order) {
      assign(v, c);
      if (search(colored + 1)) return true;
      unassign(v);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int n_;
  long long cap_;
  long long nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> sat_;
  std::vector<int> used_;
  std::vector<int> priority_;
  std::optional<Rng> rng_;
};

}  // namespace

std::optional<Coloring> solve_coloring(const Graph& g, int k, long long node_cap,
                                       std::optional<std::uint64_t> seed) {
  return ColoringSearch(g, k, node_cap, seed).run();
}

Coloring random_proper(const Graph& g, int k, std::uint64_t seed) {
  const int n = g.vertex_count();
  Rng rng(seed);
  std::vector<Vertex> order(n);
  std::vector<int> free;
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::iota(order.begin(), order.end(), 0);
    shuffle(order.begin(), order.end(), rng);
    Coloring phi{k, std::vector<Color>(n, 0)};
    bool stuck = false;
    for (Vertex v : order) {
      std::vector<bool> used(k + 1, false);
      for (Vertex u : g.neighbors(v)) used[phi[u]] = true;
      free.clear();
      for (int c = 1; c <= k; ++c)
        if (!used[c]) free.push_back(c);
      if (free.empty()) {
        stuck = true;
        break;
      }
      phi[v] = static_cast<Color>(free[rng.bounded(free.size())]);
    }
    if (!stuck) return phi;
  }
  // Greedy keeps failing: fall back to exhaustive randomized backtracking.
  auto phi = solve_coloring(g, k, 100'000'000, rng.next());
  if (!phi) {
    throw Error(ErrorKind::Unsatisfiable, "no proper " + std::to_string(k) + "-coloring exists");
  }
  return *phi;
}

}  // namespace kempe
