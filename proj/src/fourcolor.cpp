#include "kempe/fourcolor.hpp"

#include <algorithm>

#include "kempe/error.hpp"

namespace kempe {
namespace {

bool circulant_case3(int n, int r) {
  return n % 4 != 0 && (n == 2 * r + 2 || n == 2 * r + 3 || n == 3 * r + 1 || n == 3 * r + 2);
}

bool circulant_case4(int n, int r) { return r == 2 && n % 4 != 0; }

bool circulant_case5(int n, int r) {
  return std::find(kSporadicExceptions.begin(), kSporadicExceptions.end(), std::pair{r, n}) !=
         kSporadicExceptions.end();
}

// Literal match on the parameters, without isomorphism.
std::optional<int> literal_case(const GraphParams& params) {
  if (const auto* p = std::get_if<ShiftedGridParams>(&params)) {
    if (std::find(kGridExceptions.begin(), kGridExceptions.end(), GridTriple{p->a, p->b, p->c}) !=
        kGridExceptions.end())
      return 1;
    if (p->b == 2 && p->c == 1 && p->a % 2 == 1) return 2;
    return std::nullopt;
  }
  const auto& q = std::get<CirculantParams>(params);
  if (circulant_case3(q.n, q.r)) return 3;
  if (circulant_case4(q.n, q.r)) return 4;
  if (circulant_case5(q.n, q.r)) return 5;
  return std::nullopt;
}

// Every exception graph on n vertices that is simple, with its case index.
std::vector<std::pair<int, TorusGraph>> simple_exceptions(int n) {
  std::vector<std::pair<int, TorusGraph>> out;
  auto add = [&](int index, const GraphParams& params) {
    try {
      out.emplace_back(index, TorusGraph::from_params(params));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SimpleGraphViolation && e.kind() != ErrorKind::InvalidArgument)
        throw;
    }
  };
  for (const auto& [a, b, c] : kGridExceptions)
    if (a * b == n) add(1, ShiftedGridParams{a, b, c});
  if (n % 2 == 0 && (n / 2) % 2 == 1) add(2, ShiftedGridParams{n / 2, 2, 1});
  for (int r = 2; r < n; ++r)
    if (circulant_case3(n, r)) add(3, CirculantParams{n, r});
  if (circulant_case4(n, 2)) add(4, CirculantParams{n, 2});
  for (const auto& [r, m] : kSporadicExceptions)
    if (m == n) add(5, CirculantParams{n, r});
  return out;
}

}  // namespace

Graph underlying_simple_graph(const GraphParams& params) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int n = 0;
  if (const auto* p = std::get_if<ShiftedGridParams>(&params)) {
    const int a = p->a, b = p->b, c = p->c;
    if (a < 1 || b < 1 || c < 1 || c > a)
      throw Error(ErrorKind::InvalidArgument, "shifted grid parameters out of range");
    n = a * b;
    auto project = [&](int x, int y) {
      int m = y >= 0 ? y / b : -((-y + b - 1) / b);
      int col = y - m * b;
      int row = ((x + m * (c - 1)) % a + a) % a;
      return static_cast<Vertex>(row * b + col);
    };
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) {
        Vertex v = i * b + j;
        edges.emplace_back(v, project(i, j + 1));
        edges.emplace_back(v, project(i + 1, j));
        edges.emplace_back(v, project(i + 1, j - 1));
      }
    }
  } else {
    const auto& q = std::get<CirculantParams>(params);
    n = q.n;
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "circulant needs n >= 1");
    for (int i = 0; i < n; ++i)
      for (int step : {1, q.r, q.r + 1}) edges.emplace_back(i, ((i + step) % n + n) % n);
  }
  return Graph::from_edges(n, edges);
}

std::optional<Coloring> solve_4coloring(const Graph& g, long long node_cap) {
  return solve_coloring(g, 4, node_cap);
}

FourColorVerdict classify(const GraphParams& params) {
  std::optional<TorusGraph> g;
  try {
    g.emplace(TorusGraph::from_params(params));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SimpleGraphViolation) throw;
  }
  if (auto index = literal_case(params)) return {false, index, std::nullopt};
  if (!g) {
    throw Error(ErrorKind::SimpleGraphViolation,
                "parameters give a multigraph outside the exception families");
  }
  const auto forms = canonical_forms(*g);
  for (const auto& [index, h] : simple_exceptions(g->vertex_count())) {
    const auto other = canonical_forms(h);
    bool match = std::any_of(forms.begin(), forms.end(), [&](const GridTriple& f) {
      return std::find(other.begin(), other.end(), f) != other.end();
    });
    if (match) return {false, index, std::nullopt};
  }
  return {true, std::nullopt, solve_4coloring(*g)};
}

}  // namespace kempe
