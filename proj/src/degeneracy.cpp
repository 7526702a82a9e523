#include "kempe/degeneracy.hpp"

#include <algorithm>

#include "kempe/error.hpp"
#include "kempe/topology.hpp"

namespace kempe {

std::vector<Vertex> Template::vertices() const {
  std::vector<Vertex> out;
  for (const auto& c : colors) out.insert(out.end(), c.begin(), c.end());
  return out;
}

void validate_template(const Graph& g, const Template& t) {
  std::vector<int> owner(g.vertex_count(), -1);
  for (int ci = 0; ci < static_cast<int>(t.colors.size()); ++ci) {
    const auto& color = t.colors[ci];
    if (color.empty()) throw Error(ErrorKind::InvalidArgument, "template color " + std::to_string(ci) + " is empty");
    for (Vertex v : color) {
      if (v < 0 || v >= g.vertex_count())
        throw Error(ErrorKind::InvalidArgument, "template vertex " + std::to_string(v) + " out of range");
      if (owner[v] != -1)
        throw Error(ErrorKind::Overlap, "vertex " + std::to_string(v) + " appears in two template colors");
      owner[v] = ci;
    }
  }
  for (int ci = 0; ci < static_cast<int>(t.colors.size()); ++ci) {
    for (Vertex v : t.colors[ci]) {
      for (Vertex u : g.neighbors(v)) {
        if (owner[u] == ci) {
          throw Error(ErrorKind::NotIndependent, "template color " + std::to_string(ci) +
                                                     " contains adjacent vertices " +
                                                     std::to_string(v) + " and " + std::to_string(u));
        }
      }
    }
  }
}

bool contains_template(const Coloring& phi, const Template& t) {
  for (const auto& color : t.colors)
    for (Vertex v : color)
      if (phi[v] != phi[color.front()]) return false;
  return true;
}

QuotientGraph contract(const Graph& g, const Template& t) {
  validate_template(g, t);
  const int n = g.vertex_count();
  QuotientGraph qg;
  qg.to_quotient.assign(n, -1);
  std::vector<bool> in_template(n, false);
  for (Vertex v : t.vertices()) in_template[v] = true;
  for (Vertex v = 0; v < n; ++v) {
    if (in_template[v]) continue;
    qg.to_quotient[v] = static_cast<Vertex>(qg.members.size());
    qg.members.push_back({v});
  }
  qg.template_offset = static_cast<int>(qg.members.size());
  for (const auto& color : t.colors) {
    Vertex q = static_cast<Vertex>(qg.members.size());
    for (Vertex v : color) qg.to_quotient[v] = q;
    qg.members.push_back(color);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(qg.to_quotient[u], qg.to_quotient[v]);
  qg.graph = Graph::from_edges(static_cast<int>(qg.members.size()), edges);
  return qg;
}

bool is_degeneracy_prefix(const QuotientGraph& qg, std::span<const Vertex> order) {
  std::vector<bool> placed(qg.vertex_count(), false);
  for (Vertex v : order) {
    if (v < 0 || v >= qg.vertex_count() || placed[v]) return false;
    int earlier = 0;
    for (Vertex u : qg.graph.neighbors(v)) earlier += placed[u];
    if (earlier < qg.degree(v) - 4) return false;
    placed[v] = true;
  }
  return true;
}

namespace {

// Appends every vertex accepted by `allowed` once it has enough earlier
// neighbors, breadth-first from the current order.
void grow(const Graph& g, std::vector<bool>& placed, std::vector<int>& earlier,
          DegeneracyOrder& order, const std::vector<bool>& allowed) {
  const int n = g.vertex_count();
  auto ready = [&](Vertex v) {
    return allowed[v] && !placed[v] && earlier[v] >= g.degree(v) - 4;
  };
  auto place = [&](Vertex v) {
    placed[v] = true;
    order.push_back(v);
    for (Vertex u : g.neighbors(v)) ++earlier[u];
  };
  std::size_t head = order.size();
  for (Vertex v = 0; v < n; ++v)
    if (ready(v)) place(v);
  for (; head < order.size(); ++head) {
    for (Vertex u : g.neighbors(order[head]))
      if (ready(u)) place(u);
  }
}

}  // namespace

std::optional<DegeneracyOrder> degeneracy_order(const QuotientGraph& qg,
                                                std::span<const Vertex> prefix) {
  const int n = qg.vertex_count();
  for (Vertex v : prefix) {
    if (v < 0 || v >= n || qg.is_template(v))
      throw Error(ErrorKind::InvalidPrefix, "prefix vertex " + std::to_string(v) + " is not an uncontracted vertex");
  }
  if (!is_degeneracy_prefix(qg, prefix))
    throw Error(ErrorKind::InvalidPrefix, "prefix is not a 4-degeneracy prefix");
  std::vector<bool> placed(n, false);
  std::vector<int> earlier(n, 0);
  DegeneracyOrder order;
  for (Vertex v : prefix) {
    placed[v] = true;
    order.push_back(v);
    for (Vertex u : qg.graph.neighbors(v)) ++earlier[u];
  }
  std::vector<bool> allowed(n);
  for (Vertex v = 0; v < n; ++v) allowed[v] = !qg.is_template(v);
  grow(qg.graph, placed, earlier, order, allowed);
  if (static_cast<int>(order.size()) != qg.template_offset) return std::nullopt;
  std::fill(allowed.begin(), allowed.end(), true);
  grow(qg.graph, placed, earlier, order, allowed);
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_four_degenerate(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> placed(n, false);
  std::vector<int> earlier(n, 0);
  DegeneracyOrder order;
  grow(g, placed, earlier, order, std::vector<bool>(n, true));
  return static_cast<int>(order.size()) == n;
}

std::optional<DegeneracyOrder> is_good(const Graph& g, const Template& t) {
  return degeneracy_order(contract(g, t));
}

bool is_locally_connected(const Graph& g, std::span<const Vertex> h) {
  std::vector<bool> in_h(g.vertex_count(), false);
  for (Vertex v : h) in_h[v] = true;
  for (Vertex x : h) {
    for (Vertex m : g.neighbors(x)) {
      for (Vertex y : g.neighbors(m)) {
        if (y == x || !in_h[y] || g.adjacent(x, y)) continue;
        bool inside = false;
        for (Vertex c : g.neighbors(x))
          if (in_h[c] && g.adjacent(c, y)) inside = true;
        if (!inside) return false;
      }
    }
  }
  return true;
}

std::optional<Vertex> excluded_hub(const Graph& g, std::span<const Vertex> h) {
  std::vector<bool> in_h(g.vertex_count(), false);
  for (Vertex v : h) in_h[v] = true;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (in_h[w]) continue;
    int count = 0;
    for (Vertex u : g.neighbors(w)) count += in_h[u];
    if (count >= 4) return w;
  }
  return std::nullopt;
}

namespace {

// Diameter of G[H]; -1 when disconnected.
int induced_diameter(const Graph& g, std::span<const Vertex> h) {
  const int n = g.vertex_count();
  std::vector<bool> in_h(n, false);
  for (Vertex v : h) in_h[v] = true;
  int diameter = 0;
  std::vector<int> dist(n);
  std::vector<Vertex> queue;
  for (Vertex s : h) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (in_h[v] && dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (queue.size() != h.size()) return -1;
    diameter = std::max(diameter, dist[queue.back()]);
  }
  return diameter;
}

}  // namespace

WellBehavedReport is_well_behaved(const TorusGraph& g, std::span<const Vertex> h,
                                  bool augment_six_cycles) {
  WellBehavedReport report;
  std::vector<bool> outside(g.vertex_count(), true);
  for (Vertex v : h) outside[v] = false;
  report.complement_connected = induced_connected(g, outside);
  const int diameter = induced_diameter(g, h);
  if (diameter >= 0 && diameter <= 4 && edge_width(g).length >= 7) {
    report.used_criterion = true;
    report.locally_connected = !excluded_hub(g, h).has_value();
  } else {
    report.locally_connected = is_locally_connected(g, h);
  }
  if (augment_six_cycles) {
    for (const auto& cycle : noncontractible_cycles(g, 6)) {
      Vertex missing = -1;
      int hits = 0;
      for (Vertex v : cycle) {
        if (outside[v]) missing = v;
        else ++hits;
      }
      if (hits == 5) report.six_cycle_completions.push_back(missing);
    }
    std::sort(report.six_cycle_completions.begin(), report.six_cycle_completions.end());
    report.six_cycle_completions.erase(
        std::unique(report.six_cycle_completions.begin(), report.six_cycle_completions.end()),
        report.six_cycle_completions.end());
  }
  return report;
}

Coloring extend_coloring(const Graph& g, const QuotientGraph& qg, const DegeneracyOrder& order,
                         const Coloring& partial, Rng* rng) {
  if (partial.k < 5) throw Error(ErrorKind::InvalidArgument, "greedy extension needs k >= 5");
  Coloring phi = partial;
  std::vector<bool> done(g.vertex_count(), false);
  for (Vertex q = qg.template_offset; q < qg.vertex_count(); ++q)
    for (Vertex v : qg.members[q]) done[v] = true;
  std::vector<int> free;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (qg.is_template(*it)) continue;
    const Vertex v = qg.members[*it].front();
    std::vector<bool> used(phi.k + 1, false);
    for (Vertex u : g.neighbors(v))
      if (done[u]) used[phi[u]] = true;
    free.clear();
    for (int c = 1; c <= phi.k; ++c)
      if (!used[c]) free.push_back(c);
    if (free.empty()) throw Error(ErrorKind::NotGood, "order leaves no free color at vertex " + std::to_string(v));
    phi[v] = static_cast<Color>(rng ? free[rng->bounded(free.size())] : free.front());
    done[v] = true;
  }
  return phi;
}

}  // namespace kempe
