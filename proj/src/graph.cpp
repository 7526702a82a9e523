#include "kempe/graph.hpp"

#include <algorithm>
#include <sstream>

#include "kempe/error.hpp"

namespace kempe {

Graph::Graph(const std::vector<std::vector<Vertex>>& adjacency) {
  offsets_.reserve(adjacency.size() + 1);
  for (const auto& list : adjacency) {
    targets_.insert(targets_.end(), list.begin(), list.end());
    offsets_.push_back(static_cast<std::int32_t>(targets_.size()));
  }
}

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return Graph(adjacency);
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(targets_.size() / 2);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Graph::distances_from(Vertex source) const {
  std::vector<int> dist(vertex_count(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool induced_connected(const Graph& g, const std::vector<bool>& keep) {
  Vertex start = -1;
  int total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      ++total;
      if (start < 0) start = v;
    }
  }
  if (total == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  int reached = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex v : g.neighbors(u)) {
      if (keep[v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return reached == total;
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

Graph from_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      std::string format;
      int m = 0;
      if (!(fields >> format >> n >> m) || format != "edge" || n < 0)
        throw Error(ErrorKind::ParseError, "bad problem line at line " + std::to_string(line_no));
    } else if (tag == "e") {
      long u = 0, v = 0;
      if (n < 0 || !(fields >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw Error(ErrorKind::ParseError, "bad edge line at line " + std::to_string(line_no));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw Error(ErrorKind::ParseError, "unknown line tag at line " + std::to_string(line_no));
    }
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "missing problem line");
  return Graph::from_edges(n, edges);
}

}  // namespace kempe
