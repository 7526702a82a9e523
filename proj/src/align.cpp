#include <algorithm>
#include <numeric>

#include "kempe/error.hpp"
#include "kempe/reconfig.hpp"

namespace kempe {
namespace {

// Kempe component restricted to the active vertices.
void active_component(const Graph& g, const Coloring& phi, const std::vector<bool>& active,
                      Vertex v, int alpha, int beta, std::vector<Vertex>& out,
                      std::vector<bool>& mark) {
  out.assign(1, v);
  mark[v] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex u : g.neighbors(out[head])) {
      if (active[u] && !mark[u] && (phi[u] == alpha || phi[u] == beta)) {
        mark[u] = true;
        out.push_back(u);
      }
    }
  }
}

void swap_colors(Coloring& phi, std::span<const Vertex> comp, int alpha, int beta) {
  for (Vertex u : comp) phi[u] = static_cast<Color>(phi[u] == alpha ? beta : alpha);
}

// Moves on the quotient from q1 to q2, built by peeling the first vertex of
// the degeneracy order and lifting the moves for the rest.
std::vector<KempeMove> align_degenerate(const Graph& q, const Coloring& q1, const Coloring& q2,
                                        const DegeneracyOrder& order) {
  const int m = static_cast<int>(order.size());
  std::vector<KempeMove> seq;
  if (m == 0) return seq;
  std::vector<bool> active(q.vertex_count(), false);
  std::vector<bool> mark(q.vertex_count(), false);
  std::vector<Vertex> comp;
  const Vertex last = order[m - 1];
  active[last] = true;
  if (q1[last] != q2[last]) seq.push_back({last, q1[last], q2[last]});
  for (int i = m - 2; i >= 0; --i) {
    const Vertex w = order[i];
    active[w] = true;
    Coloring psi = q1;
    std::vector<KempeMove> lifted;
    lifted.reserve(seq.size() + 1);
    for (const KempeMove& mv : seq) {
      active_component(q, psi, active, mv.anchor, mv.alpha, mv.beta, comp, mark);
      int inside = 0;
      if (mark[w])
        for (Vertex u : q.neighbors(w)) inside += active[u] && mark[u];
      for (Vertex u : comp) mark[u] = false;
      if (inside >= 2) {
        std::vector<bool> used(psi.k + 1, false);
        used[psi[w]] = true;
        for (Vertex u : q.neighbors(w))
          if (active[u]) used[psi[u]] = true;
        int gamma = 1;
        while (gamma <= psi.k && used[gamma]) ++gamma;
        if (gamma > psi.k) {
          throw Error(ErrorKind::NotGood, "no free color at quotient vertex " + std::to_string(w));
        }
        lifted.push_back({w, psi[w], gamma});
        psi[w] = static_cast<Color>(gamma);
        active_component(q, psi, active, mv.anchor, mv.alpha, mv.beta, comp, mark);
        for (Vertex u : comp) mark[u] = false;
      }
      swap_colors(psi, comp, mv.alpha, mv.beta);
      lifted.push_back(mv);
    }
    if (psi[w] != q2[w]) lifted.push_back({w, psi[w], q2[w]});
    seq = std::move(lifted);
  }
  return seq;
}

}  // namespace

Certificate align_on_template(const Graph& g, const Coloring& phi1, const Coloring& phi2,
                              const Template& t) {
  if (!contains_template(phi1, t) || !contains_template(phi2, t)) {
    throw Error(ErrorKind::TemplateNotContained, "a coloring does not contain the template");
  }
  if (phi1.k != phi2.k || phi1.size() != phi2.size()) {
    throw Error(ErrorKind::LengthMismatch, "colorings differ in size or palette");
  }
  const QuotientGraph qg = contract(g, t);
  const auto order = degeneracy_order(qg);
  if (!order) throw Error(ErrorKind::NotGood, "template is not good");

  auto project = [&](const Coloring& phi) {
    Coloring q{phi.k, std::vector<Color>(qg.vertex_count())};
    for (Vertex v = 0; v < qg.vertex_count(); ++v) q[v] = phi[qg.members[v].front()];
    return q;
  };
  Coloring qphi = project(phi1);
  const auto quotient_moves = align_degenerate(qg.graph, qphi, project(phi2), *order);

  // Each quotient swap becomes one swap per component of its preimage.
  Coloring phi = phi1;
  KempeWorkspace qws(qg.vertex_count());
  KempeWorkspace gws(g.vertex_count());
  std::vector<KempeMove> moves;
  std::vector<bool> done(g.vertex_count(), false);
  std::vector<Vertex> preimage;
  for (const KempeMove& mv : quotient_moves) {
    preimage.clear();
    auto qcomp = qws.component(qg.graph, qphi, mv.anchor, mv.alpha, mv.beta);
    for (Vertex qv : qcomp)
      preimage.insert(preimage.end(), qg.members[qv].begin(), qg.members[qv].end());
    std::sort(preimage.begin(), preimage.end());
    for (Vertex x : preimage) {
      if (done[x]) continue;
      KempeMove gm{x, mv.alpha, mv.beta};
      for (Vertex u : gws.component(g, phi, x, mv.alpha, mv.beta)) done[u] = true;
      gws.apply(g, phi, gm);
      moves.push_back(gm);
    }
    for (Vertex x : preimage) done[x] = false;
    qws.apply(qg.graph, qphi, mv);
  }
  return make_certificate(g, phi1, std::move(moves));
}

std::optional<std::vector<KempeMove>> permutation_moves(const Graph& g, const Coloring& phi,
                                                        const Coloring& phi2) {
  if (phi.k != phi2.k || phi.size() != phi2.size()) return std::nullopt;
  std::vector<int> pi(phi.k + 1, 0);
  std::vector<int> inverse(phi.k + 1, 0);
  for (Vertex v = 0; v < phi.size(); ++v) {
    int a = phi[v], b = phi2[v];
    if ((pi[a] != 0 && pi[a] != b) || (inverse[b] != 0 && inverse[b] != a)) return std::nullopt;
    pi[a] = b;
    inverse[b] = a;
  }
  // Unused colors complete the permutation in order.
  int spare = 1;
  for (int a = 1; a <= phi.k; ++a) {
    if (pi[a] != 0) continue;
    while (inverse[spare] != 0) ++spare;
    pi[a] = spare;
    inverse[spare] = a;
  }
  // now[c]: color currently carried by the vertices that had color c.
  std::vector<int> now(phi.k + 1);
  std::iota(now.begin(), now.end(), 0);
  std::vector<KempeMove> moves;
  Coloring cur = phi;
  KempeWorkspace ws(g.vertex_count());
  for (int a = 1; a <= phi.k; ++a) {
    const int from = now[a], to = pi[a];
    if (from == to) continue;
    auto step = transposition_moves(g, cur, from, to);
    for (const auto& mv : step) ws.apply(g, cur, mv);
    moves.insert(moves.end(), step.begin(), step.end());
    for (int c = 1; c <= phi.k; ++c) {
      if (now[c] == from) now[c] = to;
      else if (now[c] == to) now[c] = from;
    }
  }
  if (cur != phi2) return std::nullopt;
  return moves;
}

}  // namespace kempe
