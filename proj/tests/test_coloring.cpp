#include <gtest/gtest.h>

#include "kempe/coloring.hpp"
#include "kempe/error.hpp"
#include "kempe/rng.hpp"
#include "kempe/torus_graph.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {

std::uint64_t fnv(const std::vector<Color>& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (Color c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<TorusGraph> fixtures() {
  return {TorusGraph::shifted_grid(7, 7, 1), TorusGraph::shifted_grid(5, 7, 3),
          TorusGraph::circulant(37, 10), TorusGraph::shifted_grid(4, 6, 2),
          TorusGraph::circulant(26, 10)};
}

Coloring c37_mod4() {
  Coloring phi{5, std::vector<Color>(37)};
  for (int i = 1; i <= 37; ++i) phi[i - 1] = static_cast<Color>(i < 37 ? i % 4 + 1 : 5);
  return phi;
}

}  // namespace

TEST(IsProper, ExplicitColoringOfC37) {
  EXPECT_TRUE(is_proper(TorusGraph::circulant(37, 10), c37_mod4()));
}

TEST(IsProper, ConstantColoringFails) {
  const auto g = TorusGraph::shifted_grid(5, 7, 1);
  EXPECT_FALSE(is_proper(g, Coloring{5, std::vector<Color>(35, 1)}));
}

TEST(IsProper, LengthMismatch) {
  const auto g = TorusGraph::shifted_grid(5, 7, 1);
  try {
    is_proper(g, Coloring{5, std::vector<Color>(34, 1)});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(Hash, IsFnv1aOverColorBytes) {
  const auto phi = random_proper(TorusGraph::shifted_grid(7, 7, 1), 5, 3);
  EXPECT_EQ(coloring_hash(phi), fnv(phi.colors));
  EXPECT_EQ(coloring_hash(Coloring{5, {}}), 14695981039346656037ULL);
}

TEST(KempeComponent, SingletonWhenNoBetaNeighbor) {
  const auto g = TorusGraph::shifted_grid(7, 7, 1);
  auto phi = random_proper(g, 5, 11);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int beta = 1; beta <= 5; ++beta) {
      if (beta == phi[v]) continue;
      bool has = false;
      for (Vertex u : g.neighbors(v)) has = has || phi[u] == beta;
      if (!has) {
        EXPECT_EQ(kempe_component(g, phi, v, phi[v], beta), std::vector<Vertex>{v});
        auto moved = apply_move(g, phi, {v, phi[v], beta});
        EXPECT_EQ(moved[v], beta);
        int diff = 0;
        for (Vertex u = 0; u < g.vertex_count(); ++u) diff += moved[u] != phi[u];
        EXPECT_EQ(diff, 1);
      }
    }
  }
}

TEST(KempeComponent, AnchorColorMismatch) {
  const auto g = TorusGraph::shifted_grid(7, 7, 1);
  const auto phi = random_proper(g, 5, 2);
  const int a = phi[0] % 5 + 1, b = a % 5 + 1;
  if (a == phi[0] || b == phi[0]) GTEST_SKIP();
  try {
    kempe_component(g, phi, 0, a, b);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AnchorColorMismatch);
  }
  EXPECT_THROW(apply_move(g, phi, {0, a, b}), Error);
}

TEST(KempeComponent, MatchesFloodFillOracle) {
  Rng rng(7);
  const auto graphs = fixtures();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& g = graphs[trial % graphs.size()];
    const auto phi = random_proper(g, 5, rng.next());
    const auto v = static_cast<Vertex>(rng.bounded(g.vertex_count()));
    int beta = 1 + static_cast<int>(rng.bounded(4));
    if (beta >= phi[v]) ++beta;
    auto comp = kempe_component(g, phi, v, phi[v], beta);
    std::sort(comp.begin(), comp.end());
    EXPECT_EQ(comp, oracle::two_color_component(oracle::adjacency(g), phi.colors, v, phi[v], beta));
  }
}

TEST(ApplyMove, InvolutionAndProperness) {
  Rng rng(8);
  const auto graphs = fixtures();
  std::vector<oracle::Adj> adj;
  for (const auto& g : graphs) adj.push_back(oracle::adjacency(g));
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t gi = trial % graphs.size();
    const auto& g = graphs[gi];
    const auto phi = random_proper(g, 5, rng.next());
    const auto v = static_cast<Vertex>(rng.bounded(g.vertex_count()));
    int beta = 1 + static_cast<int>(rng.bounded(4));
    if (beta >= phi[v]) ++beta;
    const KempeMove m{v, phi[v], beta};
    const auto next = apply_move(g, phi, m);
    ASSERT_TRUE(is_proper(g, next));
    EXPECT_EQ(apply_move(g, next, m), phi);
    std::vector<std::uint8_t> expected;
    ASSERT_TRUE(oracle::replay(adj[gi], phi.colors, 5, {{v, m.alpha, m.beta}}, &expected));
    EXPECT_EQ(next.colors, expected);
  }
}

TEST(Workspace, AgreesWithApplyMove) {
  const auto g = TorusGraph::circulant(37, 10);
  KempeWorkspace ws(g.vertex_count());
  Rng rng(4);
  auto phi = random_proper(g, 5, 1);
  for (int i = 0; i < 500; ++i) {
    const auto v = static_cast<Vertex>(rng.bounded(37));
    int beta = 1 + static_cast<int>(rng.bounded(4));
    if (beta >= phi[v]) ++beta;
    const auto expected = apply_move(g, phi, {v, phi[v], beta});
    const int size = ws.apply(g, phi, {v, phi[v], beta});
    EXPECT_EQ(phi, expected);
    EXPECT_GE(size, 1);
  }
}

TEST(Transposition, SwapsTwoColorsGlobally) {
  for (const auto& g : fixtures()) {
    const auto phi = random_proper(g, 5, 21);
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) {
        const auto moves = transposition_moves(g, phi, a, b);
        Coloring end;
        const auto cert = make_certificate(g, phi, moves, "", &end);
        EXPECT_TRUE(verify_certificate(g, phi, cert));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          const int expected = phi[v] == a ? b : phi[v] == b ? a : phi[v];
          EXPECT_EQ(end[v], expected);
        }
      }
    }
  }
}

TEST(Verify, EmptyCertificate) {
  const auto g = TorusGraph::shifted_grid(7, 7, 1);
  const auto phi = random_proper(g, 5, 1);
  Certificate cert{g.fingerprint(), coloring_hash(phi), coloring_hash(phi), {}};
  EXPECT_TRUE(verify_certificate(g, phi, cert));
}

TEST(Verify, DetectsTampering) {
  const auto g = TorusGraph::shifted_grid(7, 7, 1);
  const auto phi = random_proper(g, 5, 1);
  const auto target = random_proper(g, 5, 2);
  auto cert = make_certificate(g, phi, transposition_moves(g, phi, 1, 2), g.fingerprint());
  ASSERT_TRUE(verify_certificate(g, phi, cert));

  auto bad_anchor = cert;
  bad_anchor.moves[2].anchor = (bad_anchor.moves[2].anchor + 1) % 49;
  auto r = verify_certificate(g, phi, bad_anchor);
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.failed_move.has_value());
  EXPECT_LE(*r.failed_move, 2u);

  auto bad_start = cert;
  bad_start.start_hash ^= 1;
  EXPECT_FALSE(verify_certificate(g, phi, bad_start));

  auto bad_graph = cert;
  bad_graph.graph = TorusGraph::shifted_grid(5, 7, 1).fingerprint();
  EXPECT_FALSE(verify_certificate(g, phi, bad_graph));

  auto same_colors = cert;
  same_colors.moves[0].beta = same_colors.moves[0].alpha;
  r = verify_certificate(g, phi, same_colors);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.failed_move, 0u);

  Certificate improper_start{"", coloring_hash(Coloring{5, std::vector<Color>(49, 1)}), 0, {}};
  EXPECT_FALSE(verify_certificate(g, Coloring{5, std::vector<Color>(49, 1)}, improper_start));
  (void)target;
}

TEST(Certificates, ReversalAndConcatenation) {
  const auto g = TorusGraph::shifted_grid(5, 7, 1);
  const auto phi = random_proper(g, 5, 9);
  Coloring mid, end;
  const auto first = make_certificate(g, phi, transposition_moves(g, phi, 1, 3), g.fingerprint(), &mid);
  const auto second = make_certificate(g, mid, transposition_moves(g, mid, 2, 5), g.fingerprint(), &end);
  const auto both = concatenate(first, second);
  EXPECT_TRUE(verify_certificate(g, phi, both));
  EXPECT_EQ(both.end_hash, coloring_hash(end));
  const auto back = reversed(both);
  EXPECT_TRUE(verify_certificate(g, end, back));
  EXPECT_EQ(back.end_hash, coloring_hash(phi));
  EXPECT_THROW(concatenate(second, second), Error);
}

TEST(RandomProper, ProperAndDeterministic) {
  for (const auto& g : fixtures()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto phi = random_proper(g, 5, seed);
      EXPECT_TRUE(is_proper(g, phi));
      EXPECT_EQ(phi, random_proper(g, 5, seed));
    }
    EXPECT_NE(random_proper(g, 5, 1), random_proper(g, 5, 2));
  }
}

TEST(RandomProper, UnsatisfiableWhenNoColoringExists) {
  try {
    random_proper(TorusGraph::shifted_grid(3, 3, 2), 4, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsatisfiable);
  }
}

TEST(SolveColoring, AgreesWithExhaustiveEnumeration) {
  for (const auto& g : {TorusGraph::shifted_grid(3, 3, 1), TorusGraph::shifted_grid(3, 3, 2),
                        TorusGraph::shifted_grid(3, 4, 1)}) {
    const auto adj = oracle::adjacency(g);
    for (int k = 3; k <= 5; ++k) {
      const auto found = solve_coloring(g, k, 10'000'000);
      const bool exists = !oracle::all_colorings(adj, k).empty();
      EXPECT_EQ(found.has_value(), exists) << g.name() << " k=" << k;
      if (found) { EXPECT_TRUE(is_proper(g, *found)); }
    }
  }
}

TEST(SolveColoring, CapExceeded) {
  try {
    solve_coloring(TorusGraph::circulant(37, 10), 4, 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}
