#include "kempe/patterns.hpp"

#include <algorithm>

namespace kempe {

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Pair: return "pair";
    case PatternKind::Triple: return "triple";
    case PatternKind::ParallelPairs: return "parallel_pairs";
    case PatternKind::CrossingPairs: return "crossing_pairs";
  }
  return "unknown";
}

std::vector<Pattern> find_triples(const TorusGraph& g, const Coloring& phi) {
  std::vector<Pattern> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int p = 0; p < 2; ++p) {
      Vertex a = g.neighbor(v, p), b = g.neighbor(v, p + 2), c = g.neighbor(v, p + 4);
      if (phi[a] == phi[b] && phi[b] == phi[c])
        out.push_back({PatternKind::Triple, v, {a, b, c}});
    }
  }
  return out;
}

std::vector<Pattern> find_parallel_pairs(const TorusGraph& g, const Coloring& phi) {
  std::vector<Pattern> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < 3; ++i) {
      Vertex x1 = g.neighbor(v, i + 1), x2 = g.neighbor(v, i + 5);
      Vertex y1 = g.neighbor(v, i + 2), y2 = g.neighbor(v, i + 4);
      if (phi[x1] == phi[x2] && phi[y1] == phi[y2])
        out.push_back({PatternKind::ParallelPairs, v, {x1, x2, y1, y2}});
    }
  }
  return out;
}

std::vector<Pattern> find_crossing_pairs(const TorusGraph& g, const Coloring& phi) {
  std::vector<Pattern> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < kDegree; ++i) {
      Vertex w0 = g.neighbor(v, i), w1 = g.neighbor(v, i + 1);
      Vertex w2 = g.neighbor(v, i + 2), w3 = g.neighbor(v, i + 3);
      if (phi[w0] == phi[w2] && phi[w1] == phi[w3])
        out.push_back({PatternKind::CrossingPairs, v, {w0, w1, w2, w3}});
    }
  }
  return out;
}

std::vector<Pattern> find_pairs(const Graph& g, const Coloring& phi) {
  std::vector<Pattern> out;
  const int n = g.vertex_count();
  std::vector<Vertex> seen(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex m : g.neighbors(x)) {
      for (Vertex y : g.neighbors(m)) {
        if (y <= x || seen[y] == x || phi[y] != phi[x]) continue;
        seen[y] = x;
        std::vector<Vertex> common;
        for (Vertex c : g.neighbors(x))
          if (g.adjacent(c, y)) common.push_back(c);
        if (common.size() != 2) continue;
        std::sort(common.begin(), common.end());
        out.push_back({PatternKind::Pair, -1, {x, y, common[0], common[1]}});
      }
    }
  }
  return out;
}

std::vector<Pattern> find_patterns(const TorusGraph& g, const Coloring& phi) {
  std::vector<Pattern> out = find_triples(g, phi);
  for (auto* finder : {&find_parallel_pairs, &find_crossing_pairs}) {
    auto more = finder(g, phi);
    out.insert(out.end(), more.begin(), more.end());
  }
  auto pairs = find_pairs(g, phi);
  out.insert(out.end(), pairs.begin(), pairs.end());
  return out;
}

std::vector<Vertex> triple_extension_vertices(const TorusGraph& g, const Pattern& triple) {
  const Vertex center = triple.center;
  const int parity = g.slot_of(center, triple.witness.front()) % 2;
  std::vector<Vertex> out;
  // With the frame's x-axis between two triple vertices, the two standard
  // positions sit at (2,1) and (1,2).
  for (int b = parity + 1; b < parity + 1 + kDegree; b += 2) {
    for (int o : {-1, 1}) {
      for (auto [x, y] : {std::pair{2, 1}, std::pair{1, 2}})
        out.push_back(frame_offset(g, Frame{center, b, o}, x, y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Template> triple_templates(const TorusGraph& g, const Pattern& triple) {
  std::vector<Template> out;
  for (Vertex x : triple_extension_vertices(g, triple)) {
    std::vector<Vertex> color(triple.witness.begin(), triple.witness.begin() + 3);
    if (std::find(color.begin(), color.end(), x) != color.end()) continue;
    bool independent = std::none_of(color.begin(), color.end(),
                                    [&](Vertex t) { return g.adjacent(t, x); });
    if (!independent) continue;
    color.push_back(x);
    Template t{{color}};
    if (is_good(g, t)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::pair<Vertex, Template>> bonus_vertices(const Graph& g, const Template& t,
                                                        std::span<const Vertex> h) {
  std::vector<bool> excluded(g.vertex_count(), false);
  for (Vertex v : h) excluded[v] = true;
  for (Vertex v : t.vertices()) excluded[v] = true;
  std::vector<std::pair<Vertex, Template>> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (excluded[v]) continue;
    Template augmented = t;
    augmented.colors.push_back({v});
    if (is_good(g, augmented)) out.emplace_back(v, std::move(augmented));
  }
  return out;
}

}  // namespace kempe
