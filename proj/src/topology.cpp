#include "kempe/topology.hpp"

#include <algorithm>
#include <unordered_map>

#include "kempe/error.hpp"

namespace kempe {

HomologyClass walk_class(const TorusGraph& g, std::span<const Vertex> walk) {
  if (walk.empty() || walk.front() != walk.back()) {
    throw Error(ErrorKind::NotClosed, "walk does not end where it starts");
  }
  HomologyClass sum = HomologyClass::Zero();
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    int slot = g.slot_of(walk[i], walk[i + 1]);
    if (slot < 0) {
      throw Error(ErrorKind::NotAWalk, "step " + std::to_string(i) + " joins non-adjacent vertices " +
                                           std::to_string(walk[i]) + " and " +
                                           std::to_string(walk[i + 1]));
    }
    sum += g.voltage(walk[i], slot);
  }
  return sum;
}

namespace {

int search_radius(const TorusGraph& g) {
  if (const auto* p = std::get_if<ShiftedGridParams>(&g.params())) return 2 * (p->a + p->b);
  return 2 * g.vertex_count();
}

}  // namespace

EdgeWidth edge_width(const TorusGraph& g, Vertex base) {
  struct Node {
    Vertex vertex;
    Voltage point;
    int parent;
  };
  std::vector<Node> nodes{{base, Voltage::Zero(), -1}};
  std::unordered_map<Voltage, int, VoltageHash> seen{{Voltage::Zero(), 0}};
  const int radius = search_radius(g);
  std::size_t level_end = 1;
  int depth = 0;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (head == level_end) {
      level_end = nodes.size();
      if (++depth > radius) break;
    }
    const Node cur = nodes[head];
    for (int s = 0; s < kDegree; ++s) {
      Vertex next = g.neighbor(cur.vertex, s);
      Voltage point = cur.point + g.voltage(cur.vertex, s);
      if (next == base && !point.isZero()) {
        EdgeWidth result;
        for (int i = static_cast<int>(head); i >= 0; i = nodes[i].parent)
          result.witness.push_back(nodes[i].vertex);
        std::reverse(result.witness.begin(), result.witness.end());
        result.length = static_cast<int>(result.witness.size());
        return result;
      }
      if (seen.emplace(point, static_cast<int>(nodes.size())).second)
        nodes.push_back({next, point, static_cast<int>(head)});
    }
  }
  throw Error(ErrorKind::MalformedRotation,
              "no non-contractible cycle within radius " + std::to_string(radius));
}

std::vector<std::vector<Vertex>> noncontractible_cycles(const TorusGraph& g, int length) {
  std::vector<std::vector<Vertex>> out;
  if (length < 3) return out;
  const int n = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);
  for (Vertex start = 0; start < n; ++start) {
    path.assign(1, start);
    on_path[start] = true;
    auto extend = [&](auto&& self, Voltage sum) -> void {
      Vertex tail = path.back();
      for (int s = 0; s < kDegree; ++s) {
        Vertex next = g.neighbor(tail, s);
        Voltage total = sum + g.voltage(tail, s);
        if (static_cast<int>(path.size()) == length) {
          // Each cycle is seen in two directions; keep one.
          if (next == start && !total.isZero() && path[1] < path.back()) out.push_back(path);
          continue;
        }
        if (next <= start || on_path[next]) continue;
        on_path[next] = true;
        path.push_back(next);
        self(self, total);
        path.pop_back();
        on_path[next] = false;
      }
    };
    extend(extend, Voltage::Zero());
    on_path[start] = false;
  }
  return out;
}

}  // namespace kempe
