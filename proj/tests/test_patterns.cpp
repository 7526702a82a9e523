#include <gtest/gtest.h>

#include <set>

#include "kempe/degeneracy.hpp"
#include "kempe/patterns.hpp"
#include "kempe/rng.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {

using Motif = std::pair<Vertex, std::vector<Vertex>>;

std::set<Motif> normalized(const std::vector<Pattern>& ps) {
  std::set<Motif> out;
  for (const auto& p : ps) {
    auto w = p.witness;
    std::sort(w.begin(), w.end());
    out.insert({p.center, w});
  }
  return out;
}

std::vector<Vertex> common(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  for (Vertex c : g.neighbors(a))
    if (g.adjacent(c, b)) out.push_back(c);
  return out;
}

// Brute-force motif scans using adjacency only.
struct Brute {
  std::set<Motif> triples, parallel, crossing, pairs;
};

Brute brute(const Graph& g, const Coloring& phi) {
  Brute b;
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> link(nb.begin(), nb.end());
    for (std::size_t i = 0; i < link.size(); ++i)
      for (std::size_t j = i + 1; j < link.size(); ++j)
        for (std::size_t k = j + 1; k < link.size(); ++k) {
          Vertex x = link[i], y = link[j], z = link[k];
          if (g.adjacent(x, y) || g.adjacent(y, z) || g.adjacent(x, z)) continue;
          if (phi[x] == phi[y] && phi[y] == phi[z]) {
            std::vector<Vertex> w{x, y, z};
            std::sort(w.begin(), w.end());
            b.triples.insert({v, w});
          }
        }
    // flank(p): the two neighbors of v adjacent to p
    for (Vertex p : link) {
      for (Vertex q : link) {
        if (q <= p) continue;
        const auto fp = common(g, v, p), fq = common(g, v, q);
        if (fp.size() != 2 || fq.size() != 2) continue;
        if (phi[fp[0]] != phi[fp[1]] || phi[fq[0]] != phi[fq[1]]) continue;
        std::vector<Vertex> w{fp[0], fp[1], fq[0], fq[1]};
        std::sort(w.begin(), w.end());
        if (g.adjacent(p, q)) {
          b.crossing.insert({v, w});
        } else if (common(g, p, q).size() == 1) {  // opposite: only v in common... and far apart
          std::set<Vertex> s(w.begin(), w.end());
          if (s.size() == 4) b.parallel.insert({v, w});
        }
      }
    }
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (phi[x] != phi[y]) continue;
      auto c = common(g, x, y);
      if (c.size() == 2) {
        std::sort(c.begin(), c.end());
        b.pairs.insert({-1, {x, y, c[0], c[1]}});
      }
    }
  for (auto& set : {&b.pairs}) {
    std::set<Motif> sorted;
    for (auto [c, w] : *set) {
      std::sort(w.begin(), w.end());
      sorted.insert({c, w});
    }
    *set = sorted;
  }
  return b;
}

const TorusGraph& nine() {
  static const TorusGraph g = TorusGraph::shifted_grid(9, 9, 1);
  return g;
}

Vertex at(int dr, int dc) { return ((4 + dr + 9) % 9) * 9 + (4 + dc + 9) % 9; }

}  // namespace

TEST(FindPatterns, MatchesBruteForce) {
  Rng rng(3);
  for (const auto& g : {TorusGraph::shifted_grid(7, 7, 1), TorusGraph::circulant(37, 10),
                        TorusGraph::shifted_grid(8, 9, 4)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto phi = random_proper(g, 5, rng.next());
      const auto expected = brute(g, phi);
      EXPECT_EQ(normalized(find_triples(g, phi)), expected.triples);
      EXPECT_EQ(normalized(find_parallel_pairs(g, phi)), expected.parallel);
      EXPECT_EQ(normalized(find_crossing_pairs(g, phi)), expected.crossing);
      EXPECT_EQ(normalized(find_pairs(g, phi)), expected.pairs);
      const auto all = find_patterns(g, phi);
      EXPECT_EQ(all.size(), expected.triples.size() + expected.parallel.size() +
                                expected.crossing.size() + expected.pairs.size());
    }
  }
}

TEST(FindPatterns, WitnessLayouts) {
  const auto g = TorusGraph::shifted_grid(7, 7, 1);
  const auto phi = random_proper(g, 5, 12);
  for (const auto& p : find_patterns(g, phi)) {
    const auto& w = p.witness;
    switch (p.kind) {
      case PatternKind::Triple:
        ASSERT_EQ(w.size(), 3u);
        for (Vertex x : w) EXPECT_TRUE(g.adjacent(p.center, x));
        EXPECT_EQ(phi[w[0]], phi[w[1]]);
        EXPECT_EQ(phi[w[1]], phi[w[2]]);
        break;
      case PatternKind::ParallelPairs:
      case PatternKind::CrossingPairs:
        ASSERT_EQ(w.size(), 4u);
        if (p.kind == PatternKind::ParallelPairs) {
          EXPECT_EQ(phi[w[0]], phi[w[1]]);
          EXPECT_EQ(phi[w[2]], phi[w[3]]);
        } else {
          EXPECT_EQ(phi[w[0]], phi[w[2]]);
          EXPECT_EQ(phi[w[1]], phi[w[3]]);
          for (int i = 0; i < 3; ++i) EXPECT_TRUE(g.adjacent(w[i], w[i + 1]));
        }
        break;
      case PatternKind::Pair:
        ASSERT_EQ(w.size(), 4u);
        EXPECT_LT(w[0], w[1]);
        EXPECT_EQ(phi[w[0]], phi[w[1]]);
        auto c = common(g, w[0], w[1]);
        std::sort(c.begin(), c.end());
        EXPECT_EQ(c, (std::vector<Vertex>{w[2], w[3]}));
        break;
    }
  }
}

TEST(FindPatterns, TripleAroundReferenceVertex) {
  const auto& g = nine();
  const Template t{{{at(0, -1), at(-1, 1), at(1, 0), at(-1, 3)}}};
  const auto order = is_good(g, t);
  ASSERT_TRUE(order.has_value());
  Coloring partial{5, std::vector<Color>(81, 0)};
  for (Vertex v : t.colors[0]) partial[v] = 4;
  const auto phi = extend_coloring(g, contract(g, t), *order, partial);
  std::vector<Vertex> expected{at(0, -1), at(-1, 1), at(1, 0)};
  std::sort(expected.begin(), expected.end());
  EXPECT_TRUE(normalized(find_triples(g, phi)).count({at(0, 0), expected}));
}

TEST(FindPatterns, LinearColoringHasNoTriples) {
  const auto g = TorusGraph::shifted_grid(10, 10, 1);
  Coloring phi{5, std::vector<Color>(100)};
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) phi[i * 10 + j] = static_cast<Color>((i + 2 * j) % 5 + 1);
  ASSERT_TRUE(is_proper(g, phi));
  EXPECT_TRUE(find_triples(g, phi).empty());
  EXPECT_TRUE(brute(g, phi).triples.empty());
  EXPECT_FALSE(find_pairs(g, phi).empty());
}

TEST(TripleTemplates, TwelveGoodExtensionsEverywhere) {
  const auto& g = nine();
  const auto adj = oracle::adjacency(g);
  for (Vertex center = 0; center < g.vertex_count(); ++center) {
    for (int parity = 0; parity < 2; ++parity) {
      const Pattern triple{PatternKind::Triple, center,
                           {g.neighbor(center, parity), g.neighbor(center, parity + 2),
                            g.neighbor(center, parity + 4)}};
      const auto templates = triple_templates(g, triple);
      EXPECT_EQ(templates.size(), 12u);
      std::set<Vertex> fourth;
      for (const auto& t : templates) {
        ASSERT_EQ(t.colors.size(), 1u);
        ASSERT_EQ(t.colors[0].size(), 4u);
        EXPECT_TRUE(is_good(g, t).has_value());
        fourth.insert(t.colors[0][3]);
      }
      // exhaustive: every independent 4th vertex within distance 4
      const auto dist = g.distances_from(center);
      std::set<Vertex> exhaustive;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] > 4) continue;
        std::vector<Vertex> color = triple.witness;
        if (std::find(color.begin(), color.end(), v) != color.end()) continue;
        bool independent = true;
        for (Vertex x : color) independent = independent && !g.adjacent(x, v);
        if (!independent) continue;
        color.push_back(v);
        if (oracle::four_degenerate(oracle::contracted_edges(adj, {color}))) exhaustive.insert(v);
      }
      EXPECT_EQ(fourth, exhaustive);
    }
  }
}

TEST(TripleTemplates, IncludeNearAndFarShapes) {
  const auto& g = nine();
  const Pattern triple{PatternKind::Triple, at(0, 0), {at(0, -1), at(-1, 1), at(1, 0)}};
  std::set<Vertex> fourth;
  for (const auto& t : triple_templates(g, triple)) fourth.insert(t.colors[0][3]);
  EXPECT_TRUE(fourth.count(at(-1, 3)));
  EXPECT_TRUE(fourth.count(at(-2, 3)));
  EXPECT_EQ(triple_extension_vertices(g, triple).size(), 12u);
}

TEST(TripleTemplates, ClosedUnderTripleSymmetries) {
  // The six symmetries fixing the center and the triple permute the three
  // triple vertices; with frames this is a relabeling of the base slot and
  // orientation, so the extension set must be the same from every triple
  // vertex's point of view.
  const auto& g = nine();
  const Pattern triple{PatternKind::Triple, at(0, 0), {at(0, -1), at(-1, 1), at(1, 0)}};
  const auto ext = triple_extension_vertices(g, triple);
  for (int rot = 0; rot < 3; ++rot) {
    Pattern rotated = triple;
    std::rotate(rotated.witness.begin(), rotated.witness.begin() + rot, rotated.witness.end());
    EXPECT_EQ(triple_extension_vertices(g, rotated), ext);
  }
  // Images of the two reference positions under the rotations by 120 degrees,
  // (dr, dc) -> (-dr-dc, dr), and the reflection (dr, dc) -> (dr+dc, -dc).
  std::set<Vertex> images;
  for (auto [dr, dc] : {std::pair{-1, 3}, std::pair{-2, 3}}) {
    for (int k = 0; k < 3; ++k) {
      images.insert(at(dr, dc));
      images.insert(at(dr + dc, -dc));
      const int nr = -dr - dc, nc = dr;
      dr = nr;
      dc = nc;
    }
  }
  EXPECT_EQ(images, std::set<Vertex>(ext.begin(), ext.end()));
}
