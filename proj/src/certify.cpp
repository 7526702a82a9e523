#include <algorithm>
#include <stdexcept>

#include "kempe/error.hpp"
#include "kempe/fourcolor.hpp"
#include "kempe/reconfig.hpp"

namespace kempe {

std::string_view to_string(Route route) {
  switch (route) {
    case Route::Identity: return "identity";
    case Route::Permutation: return "permutation";
    case Route::FourColoring: return "four_coloring";
    case Route::Rotation: return "rotation";
  }
  return "unknown";
}

Coloring c37_rotation(int t) {
  Coloring phi{5, std::vector<Color>(37)};
  for (int v = 0; v < 37; ++v) {
    const int u = ((v - t) % 37 + 37) % 37;
    phi[v] = static_cast<Color>(u == 36 ? 5 : (u + 1) % 4 + 1);
  }
  return phi;
}

namespace {

constexpr int kGreen = 5;

void append(std::vector<KempeMove>& out, const std::vector<KempeMove>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::vector<KempeMove> reversed_moves(std::vector<KempeMove> moves) {
  std::reverse(moves.begin(), moves.end());
  return moves;
}

Coloring with_template_color(Coloring phi, const Template& t, int color) {
  for (Vertex v : t.vertices()) phi[v] = static_cast<Color>(color);
  return phi;
}

// Singleton recolorings of the template vertices from `from` to `to` colors.
std::vector<KempeMove> recolor_template(const Template& t, const Coloring& from,
                                        const Coloring& to) {
  std::vector<KempeMove> moves;
  for (Vertex v : t.vertices())
    if (from[v] != to[v]) moves.push_back({v, from[v], to[v]});
  return moves;
}

// psi (containing t) -> phi0, where phi0 avoids green: align with phi0 whose
// template is green, then drop the template vertices to their phi0 colors.
std::vector<KempeMove> route_to_four_coloring(const Graph& g, const Coloring& psi,
                                              const Template& t, const Coloring& phi0) {
  const Coloring marked = with_template_color(phi0, t, kGreen);
  auto moves = align_on_template(g, psi, marked, t).moves;
  append(moves, recolor_template(t, marked, phi0));
  return moves;
}

Template translate(const Template& t, int d, int n) {
  Template out = t;
  for (auto& color : out.colors)
    for (auto& v : color) v = (v + d) % n;
  return out;
}

bool shift_valid(const Graph& h, const Template& t, int s) {
  const Vertex green = (s + 36) % 37;
  for (Vertex v : t.vertices()) {
    if (v == green || h.adjacent(v, green)) return false;
  }
  return true;
}

int first_valid_shift(const Graph& h, const Template& t) {
  for (int s = 0; s < 37; ++s)
    if (shift_valid(h, t, s)) return s;
  throw Error(ErrorKind::NotGood, "no rotation avoids the template's closed neighborhood");
}

// psi (containing t) -> rotation s, on C37[1,10,11].
std::vector<KempeMove> route_to_rotation(const Graph& h, const Coloring& psi, const Template& t,
                                         int s) {
  return route_to_four_coloring(h, psi, t, c37_rotation(s));
}

// Rotation s1 -> rotation s2 via translates of t.
std::vector<KempeMove> connect_rotations(const Graph& h, const Template& t, int s1, int s2) {
  std::vector<int> parent(37, -1), via(37, -1);
  std::vector<int> queue{s1};
  parent[s1] = s1;
  for (std::size_t head = 0; head < queue.size() && parent[s2] < 0; ++head) {
    const int s = queue[head];
    for (int d = 0; d < 37; ++d) {
      const Template td = translate(t, d, 37);
      if (!shift_valid(h, td, s)) continue;
      for (int s_next = 0; s_next < 37; ++s_next) {
        if (parent[s_next] >= 0 || !shift_valid(h, td, s_next)) continue;
        parent[s_next] = s;
        via[s_next] = d;
        queue.push_back(s_next);
      }
    }
  }
  if (parent[s2] < 0) throw Error(ErrorKind::SearchExhausted, "rotations are not connected");
  std::vector<int> path;
  for (int s = s2; s != s1; s = parent[s]) path.push_back(s);
  std::reverse(path.begin(), path.end());
  std::vector<KempeMove> moves;
  int cur = s1;
  for (int next : path) {
    const Template td = translate(t, via[next], 37);
    const Coloring from = c37_rotation(cur);
    const Coloring to = c37_rotation(next);
    const Coloring from_marked = with_template_color(from, td, kGreen);
    const Coloring to_marked = with_template_color(to, td, kGreen);
    append(moves, recolor_template(td, from, from_marked));
    append(moves, align_on_template(h, from_marked, to_marked, td).moves);
    append(moves, recolor_template(td, to_marked, to));
    cur = next;
  }
  return moves;
}

Template map_template(const Template& t, const std::vector<Vertex>& phi) {
  Template out = t;
  for (auto& color : out.colors)
    for (auto& v : color) v = phi[v];
  return out;
}

Coloring map_coloring(const Coloring& c, const std::vector<Vertex>& phi) {
  Coloring out = c;
  for (Vertex v = 0; v < c.size(); ++v) out[phi[v]] = c[v];
  return out;
}

}  // namespace

EquivalenceResult certify_equivalence(const Normalizer& normalizer, const Coloring& phi1,
                                      const Coloring& phi2) {
  const TorusGraph& g = normalizer.graph();
  for (const Coloring* phi : {&phi1, &phi2}) {
    if (phi->k != 5 || !is_proper(g, *phi))
      throw Error(ErrorKind::PreconditionViolated, "inputs must be proper 5-colorings");
  }
  const std::string fp = g.fingerprint();
  EquivalenceResult result;
  if (phi1 == phi2) {
    result.certificate = make_certificate(g, phi1, {}, fp);
    return result;
  }
  if (auto moves = permutation_moves(g, phi1, phi2)) {
    result.route = Route::Permutation;
    result.certificate = make_certificate(g, phi1, std::move(*moves), fp);
    return result;
  }

  const NormalizeResult n1 = normalizer.run(phi1);
  const NormalizeResult n2 = normalizer.run(phi2);
  std::vector<KempeMove> side1, side2;
  if (auto phi0 = solve_4coloring(g)) {
    result.route = Route::FourColoring;
    phi0->k = 5;
    side1 = route_to_four_coloring(g, n1.final_coloring, n1.good_template, *phi0);
    side2 = route_to_four_coloring(g, n2.final_coloring, n2.good_template, *phi0);
  } else {
    const TorusGraph h = TorusGraph::circulant(37, 10);
    const auto iso = torus_isomorphism(g, h);
    if (!iso) {
      throw Error(ErrorKind::NotFourColorable,
                  g.name() + " is neither 4-colorable nor C37[1,10,11]");
    }
    result.route = Route::Rotation;
    std::vector<Vertex> inverse(iso->size());
    for (Vertex v = 0; v < static_cast<Vertex>(iso->size()); ++v) inverse[(*iso)[v]] = v;
    const Template t1 = map_template(n1.good_template, *iso);
    const Template t2 = map_template(n2.good_template, *iso);
    const int s1 = first_valid_shift(h, t1);
    const int s2 = first_valid_shift(h, t2);
    side1 = route_to_rotation(h, map_coloring(n1.final_coloring, *iso), t1, s1);
    append(side1, connect_rotations(h, t1, s1, s2));
    side2 = route_to_rotation(h, map_coloring(n2.final_coloring, *iso), t2, s2);
    for (auto* side : {&side1, &side2})
      for (auto& mv : *side) mv.anchor = inverse[mv.anchor];
  }
  std::vector<KempeMove> moves = n1.certificate.moves;
  append(moves, side1);
  append(moves, reversed_moves(side2));
  append(moves, reversed_moves(n2.certificate.moves));
  result.certificate = make_certificate(g, phi1, std::move(moves), fp);
  if (result.certificate.end_hash != coloring_hash(phi2)) {
    throw std::logic_error("assembled certificate does not reach the target coloring");
  }
  return result;
}

EquivalenceResult certify_equivalence(const TorusGraph& g, const Coloring& phi1,
                                      const Coloring& phi2, const NormalizeOptions& options) {
  return certify_equivalence(Normalizer(g, options), phi1, phi2);
}

}  // namespace kempe
