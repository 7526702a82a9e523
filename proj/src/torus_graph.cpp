#include "kempe/torus_graph.hpp"

#include <algorithm>
#include <set>

#include "kempe/error.hpp"
#include "kempe/hash.hpp"
#include "kempe/rng.hpp"

namespace kempe {
namespace {

// Rotation at every grid vertex, as (drow, dcol): W, N, NE, E, S, SW.
constexpr std::array<std::array<int, 2>, kDegree> kGridSteps{
    {{0, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 0}, {1, -1}}};

// Circulant rotation: +1, +(r+1), +r, -1, -(r+1), -r.
constexpr std::array<std::array<int, 2>, kDegree> kCirculantSteps{
    {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};

int floor_div(int x, int m) {
  int q = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
  return q;
}

int mod(int x, int m) { return ((x % m) + m) % m; }

void check_simple(const std::vector<std::array<Vertex, kDegree>>& rotation,
                  const std::string& name) {
  for (Vertex v = 0; v < static_cast<Vertex>(rotation.size()); ++v) {
    std::array<Vertex, kDegree> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    bool loop = std::find(sorted.begin(), sorted.end(), v) != sorted.end();
    bool multi = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    if (loop || multi) {
      throw Error(ErrorKind::SimpleGraphViolation,
                  name + " is not simple: vertex " + std::to_string(v) +
                      (loop ? " has a loop" : " has parallel edges"));
    }
  }
}

std::vector<std::vector<Vertex>> to_lists(const std::vector<std::array<Vertex, kDegree>>& rotation) {
  std::vector<std::vector<Vertex>> lists;
  lists.reserve(rotation.size());
  for (const auto& r : rotation) lists.emplace_back(r.begin(), r.end());
  return lists;
}

std::string grid_name(int a, int b, int c) {
  return "T[" + std::to_string(a) + "x" + std::to_string(b) + "," + std::to_string(c) + "]";
}

std::string circulant_name(int n, int r) {
  return "C" + std::to_string(n) + "[1," + std::to_string(r) + "," + std::to_string(r + 1) + "]";
}

}  // namespace

TorusGraph::TorusGraph(GraphParams params, std::vector<std::array<Vertex, kDegree>> rotation,
                       std::vector<std::array<Voltage, kDegree>> voltages, DeckLattice lattice)
    : Graph(to_lists(rotation)), params_(params), lattice_(std::move(lattice)) {
  voltages_.reserve(voltages.size() * kDegree);
  for (const auto& vs : voltages) voltages_.insert(voltages_.end(), vs.begin(), vs.end());
}

TorusGraph TorusGraph::shifted_grid(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1 || c > a) {
    throw Error(ErrorKind::InvalidArgument,
                "shifted grid needs a >= 1, b >= 1, 1 <= c <= a; got " + grid_name(a, b, c));
  }
  const int n = a * b;
  auto project = [&](int x, int y) {
    int m = floor_div(y, b);
    int col = y - m * b;
    int row = mod(x + m * (c - 1), a);
    return static_cast<Vertex>(row * b + col);
  };
  std::vector<std::array<Vertex, kDegree>> rotation(n);
  std::vector<std::array<Voltage, kDegree>> voltages(n);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      Vertex v = i * b + j;
      for (int s = 0; s < kDegree; ++s) {
        auto [dr, dc] = kGridSteps[s];
        rotation[v][s] = project(i + dr, j + dc);
        voltages[v][s] = Voltage(dr, dc);
      }
    }
  }
  check_simple(rotation, grid_name(a, b, c));
  DeckLattice lattice;
  lattice << a, 1 - c,
             0, b;
  return TorusGraph(ShiftedGridParams{a, b, c}, std::move(rotation), std::move(voltages), lattice);
}

TorusGraph TorusGraph::circulant(int n, int r) {
  if (n < 7 || r < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "circulant needs n >= 7 and r >= 2; got " + circulant_name(n, r));
  }
  std::vector<std::array<Vertex, kDegree>> rotation(n);
  std::vector<std::array<Voltage, kDegree>> voltages(n);
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < kDegree; ++s) {
      auto [x, y] = kCirculantSteps[s];
      rotation[i][s] = static_cast<Vertex>(mod(i + x + r * y, n));
      voltages[i][s] = Voltage(x, y);
    }
  }
  check_simple(rotation, circulant_name(n, r));
  DeckLattice lattice;
  lattice << n, -r,
             0, 1;
  return TorusGraph(CirculantParams{n, r}, std::move(rotation), std::move(voltages), lattice);
}

TorusGraph TorusGraph::from_params(const GraphParams& params) {
  if (const auto* p = std::get_if<ShiftedGridParams>(&params)) return shifted_grid(p->a, p->b, p->c);
  const auto& q = std::get<CirculantParams>(params);
  return circulant(q.n, q.r);
}

int TorusGraph::slot_of(Vertex v, Vertex u) const noexcept {
  auto rot = rotation(v);
  for (int s = 0; s < kDegree; ++s)
    if (rot[s] == u) return s;
  return -1;
}

const Voltage& TorusGraph::voltage_to(Vertex v, Vertex u) const {
  int s = slot_of(v, u);
  if (s < 0) {
    throw Error(ErrorKind::NotAWalk,
                "vertices " + std::to_string(v) + " and " + std::to_string(u) + " are not adjacent");
  }
  return voltage(v, s);
}

std::string TorusGraph::fingerprint() const { return to_hex(fnv1a64(to_dimacs(*this))); }

std::string TorusGraph::name() const {
  if (const auto* p = std::get_if<ShiftedGridParams>(&params_)) return grid_name(p->a, p->b, p->c);
  const auto& q = std::get<CirculantParams>(params_);
  return circulant_name(q.n, q.r);
}

Vertex straight_successor(const TorusGraph& g, Vertex prev, Vertex v) {
  return g.neighbor(v, g.slot_of(v, prev) + 3);
}

Vertex walk_straight(const TorusGraph& g, Vertex start, int slot, int steps) {
  if (steps == 0) return start;
  Vertex prev = start;
  Vertex cur = g.neighbor(start, slot);
  for (int i = 1; i < steps; ++i) {
    Vertex next = straight_successor(g, prev, cur);
    prev = cur;
    cur = next;
  }
  return cur;
}

Vertex frame_offset(const TorusGraph& g, const Frame& frame, int x, int y) {
  Vertex prev = -1;
  Vertex cur = frame.origin;
  int forward = frame.base_slot;
  for (int i = 0; i < x; ++i) {
    Vertex next = g.neighbor(cur, forward);
    prev = cur;
    cur = next;
    forward = g.slot_of(cur, prev) + 3;
  }
  return walk_straight(g, cur, forward + frame.orientation, y);
}

namespace {

// Length of the closed straight walk leaving `start` through `slot`.
int straight_period(const TorusGraph& g, Vertex start, int slot) {
  const int n = g.vertex_count();
  Vertex prev = start;
  Vertex cur = g.neighbor(start, slot);
  int length = 1;
  while (cur != start) {
    Vertex next = straight_successor(g, prev, cur);
    prev = cur;
    cur = next;
    if (++length > n) {
      throw Error(ErrorKind::MalformedRotation,
                  "straight walk from vertex " + std::to_string(start) + " does not close");
    }
  }
  // The walk must also return in the direction it left.
  if (g.neighbor(start, g.slot_of(start, prev) + 3) != g.neighbor(start, slot)) {
    throw Error(ErrorKind::MalformedRotation,
                "straight walk from vertex " + std::to_string(start) + " closes with a turn");
  }
  return length;
}

GridTriple form_for_frame(const TorusGraph& g, const Frame& frame) {
  const int n = g.vertex_count();
  const int a = straight_period(g, frame.origin, frame.base_slot);
  if (n % a != 0) {
    throw Error(ErrorKind::MalformedRotation, "straight walk length does not divide vertex count");
  }
  const int b = n / a;
  const Vertex u = walk_straight(g, frame.origin, frame.base_slot + frame.orientation, b);
  for (int k = 0; k < a; ++k)
    if (walk_straight(g, frame.origin, frame.base_slot, k) == u) return {a, b, k + 1};
  throw Error(ErrorKind::MalformedRotation, "seam shift not found on the column cycle");
}

}  // namespace

std::vector<GridTriple> canonical_forms(const TorusGraph& g) {
  std::set<GridTriple> forms;
  for (int s = 0; s < kDegree; ++s)
    for (int o : {-1, 1}) forms.insert(form_for_frame(g, Frame{0, s, o}));
  return {forms.begin(), forms.end()};
}

std::optional<std::vector<Vertex>> torus_isomorphism(const TorusGraph& g, const TorusGraph& h) {
  const int n = g.vertex_count();
  if (h.vertex_count() != n) return std::nullopt;
  for (int s = 0; s < kDegree; ++s) {
    for (int o : {-1, 1}) {
      const Frame fg{0, s, o};
      const GridTriple form = form_for_frame(g, fg);
      for (int s2 = 0; s2 < kDegree; ++s2) {
        for (int o2 : {-1, 1}) {
          const Frame fh{0, s2, o2};
          if (form_for_frame(h, fh) != form) continue;
          std::vector<Vertex> phi(n, -1);
          bool ok = true;
          // (x, y): y steps along the adjacent direction, then x along s.
          const Frame tg{0, s + o, -o};
          const Frame th{0, s2 + o2, -o2};
          for (int y = 0; y < form[1] && ok; ++y) {
            for (int x = 0; x < form[0]; ++x) {
              Vertex vg = frame_offset(g, tg, y, x);
              if (phi[vg] != -1) {
                ok = false;
                break;
              }
              phi[vg] = frame_offset(h, th, y, x);
            }
          }
          if (!ok) continue;
          std::vector<bool> hit(n, false);
          for (Vertex v : phi) {
            if (v < 0 || hit[v]) {
              ok = false;
              break;
            }
            hit[v] = true;
          }
          for (Vertex v = 0; v < n && ok; ++v)
            for (Vertex u : g.neighbors(v))
              if (!h.adjacent(phi[v], phi[u])) ok = false;
          if (ok) return phi;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<GridTriple> raw_parameterizations(int n) {
  std::vector<GridTriple> out;
  for (int a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    for (int c = 1; c <= a; ++c) out.push_back({a, n / a, c});
  }
  return out;
}

std::vector<TorusGraph> enumerate_graphs(int n) {
  std::vector<TorusGraph> out;
  std::set<GridTriple> seen;
  for (const auto& [a, b, c] : raw_parameterizations(n)) {
    if (seen.contains({a, b, c})) continue;
    try {
      TorusGraph g = TorusGraph::shifted_grid(a, b, c);
      auto forms = canonical_forms(g);
      bool duplicate = std::any_of(forms.begin(), forms.end(),
                                   [&](const GridTriple& f) { return seen.contains(f); });
      seen.insert(forms.begin(), forms.end());
      if (!duplicate) out.push_back(std::move(g));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SimpleGraphViolation) throw;
    }
  }
  return out;
}

TorusGraph sample_uniform(int n, std::uint64_t seed, SamplingMode mode) {
  Rng rng(seed);
  if (mode == SamplingMode::UniformClass) {
    auto graphs = enumerate_graphs(n);
    if (graphs.empty()) {
      throw Error(ErrorKind::NoValidGraph, "no simple 6-regular toroidal graph on " +
                                               std::to_string(n) + " vertices");
    }
    return graphs[rng.bounded(graphs.size())];
  }
  std::vector<TorusGraph> simple;
  for (const auto& [a, b, c] : raw_parameterizations(n)) {
    try {
      simple.push_back(TorusGraph::shifted_grid(a, b, c));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SimpleGraphViolation) throw;
    }
  }
  if (simple.empty()) {
    throw Error(ErrorKind::NoValidGraph,
                "no simple 6-regular toroidal graph on " + std::to_string(n) + " vertices");
  }
  return simple[rng.bounded(simple.size())];
}

}  // namespace kempe
