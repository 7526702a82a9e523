#include <gtest/gtest.h>

#include "kempe/degeneracy.hpp"
#include "kempe/error.hpp"
#include "kempe/patterns.hpp"
#include "kempe/rng.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {

// T[9x9,1] with the reference vertex at grid position (5,5); offsets are
// (row, column) steps from there.
const TorusGraph& nine() {
  static const TorusGraph g = TorusGraph::shifted_grid(9, 9, 1);
  return g;
}

Vertex at(int dr, int dc) { return ((4 + dr + 9) % 9) * 9 + (4 + dc + 9) % 9; }

// Left and right good 4-templates around the triple centered at at(0,0).
const std::vector<Vertex> kTriple{at(0, -1), at(-1, 1), at(1, 0)};
const std::vector<Vertex> kNumbered{at(0, 0), at(0, 1), at(-1, 2)};

Template near_template() { return {{{at(0, -1), at(-1, 1), at(1, 0), at(-1, 3)}}}; }
Template far_template() { return {{{at(0, -1), at(-1, 1), at(1, 0), at(-2, 3)}}}; }

// Labels 1..13 of a 13-vertex layout around the same center.
Vertex helper(int label) {
  static const std::array<std::pair<int, int>, 13> pos{{{0, 0}, {-1, 2}, {-2, 4}, {-3, 2}, {-1, 1},
                                                        {-1, 0}, {-2, 2}, {-2, 1}, {0, 1}, {-2, 3},
                                                        {-3, 3}, {1, 1}, {-1, 3}}};
  return at(pos[label - 1].first, pos[label - 1].second);
}

bool recount(const QuotientGraph& qg, const DegeneracyOrder& order) {
  std::vector<int> position(qg.vertex_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int earlier = 0;
    for (Vertex u : qg.graph.neighbors(order[i]))
      earlier += position[u] >= 0 && position[u] < static_cast<int>(i);
    if (earlier < qg.degree(order[i]) - 4) return false;
  }
  return true;
}

Template random_template(const Graph& g, Rng& rng) {
  const auto phi = random_proper(g, 5, rng.next());
  Template t;
  const int colors = 1 + static_cast<int>(rng.bounded(3));
  std::vector<int> palette{1, 2, 3, 4, 5};
  shuffle(palette.begin(), palette.end(), rng);
  for (int ci = 0; ci < colors; ++ci) {
    std::vector<Vertex> cls;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (phi[v] == palette[ci]) cls.push_back(v);
    shuffle(cls.begin(), cls.end(), rng);
    cls.resize(std::min<std::size_t>(cls.size(), 1 + rng.bounded(4)));
    t.colors.push_back(cls);
  }
  return t;
}

}  // namespace

TEST(Template, Validation) {
  const auto& g = nine();
  EXPECT_NO_THROW(validate_template(g, near_template()));
  try {
    validate_template(g, Template{{{at(0, 0), at(0, 1)}}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIndependent);
  }
  try {
    validate_template(g, Template{{{at(0, 0)}, {at(0, 0), at(3, 3)}}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overlap);
  }
  EXPECT_THROW(contract(g, Template{{{at(0, 0), at(0, 1)}}}), Error);
}

TEST(Contract, FourVertexColorLosesThree) {
  const auto qg = contract(nine(), near_template());
  EXPECT_EQ(qg.vertex_count(), 81 - 3);
  EXPECT_EQ(qg.template_offset, 77);
  EXPECT_TRUE(qg.is_template(77));
}

TEST(Contract, EmptyTemplateIsIdentity) {
  const auto qg = contract(nine(), Template{});
  EXPECT_EQ(qg.vertex_count(), 81);
  EXPECT_EQ(oracle::edge_set(oracle::adjacency(qg.graph)), oracle::edge_set(oracle::adjacency(nine())));
}

TEST(Contract, EdgeCountMatchesUnionFind) {
  Rng rng(5);
  const auto graphs = {TorusGraph::shifted_grid(7, 7, 1), TorusGraph::circulant(37, 10)};
  for (const auto& g : graphs) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = random_template(g, rng);
      const auto qg = contract(g, t);
      const auto expected = oracle::contracted_edges(oracle::adjacency(g), t.colors);
      EXPECT_EQ(qg.graph.edges().size(), expected.size());
      for (const auto& [u, v] : g.edges()) {
        const Vertex a = qg.to_quotient[u], b = qg.to_quotient[v];
        if (a != b) {
          EXPECT_TRUE(qg.graph.adjacent(a, b));
        }
      }
    }
  }
}

TEST(DegeneracyOrder, SixRegularGraphHasNone) {
  const auto qg = contract(nine(), Template{});
  EXPECT_FALSE(degeneracy_order(qg).has_value());
  EXPECT_FALSE(is_four_degenerate(nine()));
}

TEST(DegeneracyOrder, TripleTemplateExtendsNumberedPrefix) {
  const auto qg = contract(nine(), near_template());
  std::vector<Vertex> prefix;
  for (Vertex v : kNumbered) prefix.push_back(qg.to_quotient[v]);
  ASSERT_TRUE(is_degeneracy_prefix(qg, prefix));
  const auto order = degeneracy_order(qg, prefix);
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(static_cast<int>(order->size()), qg.vertex_count());
  EXPECT_TRUE(std::equal(prefix.begin(), prefix.end(), order->begin()));
  EXPECT_TRUE(qg.is_template(order->back()));
  EXPECT_TRUE(recount(qg, *order));
}

TEST(DegeneracyOrder, InvalidPrefix) {
  const auto qg = contract(nine(), near_template());
  // vertex far from the template: no earlier neighbors, degree 6
  const std::vector<Vertex> bad{qg.to_quotient[at(4, 4)]};
  try {
    degeneracy_order(qg, bad);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPrefix);
  }
}

TEST(IsGood, TriplePlusOneTemplates) {
  for (const auto& t : {near_template(), far_template()}) {
    const auto order = is_good(nine(), t);
    ASSERT_TRUE(order.has_value());
    EXPECT_TRUE(recount(contract(nine(), t), *order));
  }
}

TEST(IsGood, TripleAndSingletonAreNot) {
  EXPECT_FALSE(is_good(nine(), Template{{kTriple}}).has_value());
  EXPECT_FALSE(is_good(nine(), Template{{{at(0, 0)}}}).has_value());
}

TEST(IsGood, ImpliesPlainFourDegeneracy) {
  Rng rng(17);
  const auto g = TorusGraph::shifted_grid(7, 7, 1);
  const auto adj = oracle::adjacency(g);
  int good = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_template(g, rng);
    const auto order = is_good(g, t);
    if (order) {
      ++good;
      EXPECT_TRUE(oracle::four_degenerate(oracle::contracted_edges(adj, t.colors)));
      EXPECT_TRUE(recount(contract(g, t), *order));
    }
  }
  EXPECT_GT(good, 0);
}

TEST(IsGood, MatchesPeelingOnTripleExtensions) {
  const auto adj = oracle::adjacency(nine());
  const Pattern triple{PatternKind::Triple, at(0, 0), kTriple};
  for (Vertex v : triple_extension_vertices(nine(), triple)) {
    Template t{{kTriple}};
    t.colors[0].push_back(v);
    EXPECT_EQ(is_good(nine(), t).has_value(),
              oracle::four_degenerate(oracle::contracted_edges(adj, t.colors)));
  }
}

TEST(WellBehaved, TemplateNeighborhood) {
  std::vector<Vertex> h = kNumbered;
  const auto left = near_template();
  for (Vertex v : left.colors[0]) h.push_back(v);
  const auto report = is_well_behaved(nine(), h);
  EXPECT_TRUE(report.locally_connected);
  EXPECT_TRUE(report.complement_connected);
  EXPECT_TRUE(report);
  EXPECT_TRUE(oracle::locally_connected(oracle::adjacency(nine()), h));
}

TEST(WellBehaved, ExcludedHubBreaksLocality) {
  const Vertex w = at(0, 0);
  std::vector<Vertex> h;
  for (int s = 0; s < 4; ++s) h.push_back(nine().neighbor(w, s));
  EXPECT_EQ(excluded_hub(nine(), h), w);
  EXPECT_FALSE(is_well_behaved(nine(), h).locally_connected);
  EXPECT_FALSE(is_locally_connected(nine(), h));
}

TEST(WellBehaved, SingleVertex) {
  const std::vector<Vertex> h{at(2, 2)};
  const auto report = is_well_behaved(nine(), h);
  EXPECT_TRUE(report.locally_connected);
  EXPECT_TRUE(report);
}

TEST(WellBehaved, HubCriterionAgreesWithDefinition) {
  Rng rng(31);
  for (const auto& g : {TorusGraph::shifted_grid(7, 7, 1), TorusGraph::shifted_grid(9, 9, 1),
                        TorusGraph::circulant(37, 10)}) {
    const auto adj = oracle::adjacency(g);
    int sampled = 0;
    while (sampled < 400) {
      // grow a random connected set inside a ball of radius 2
      const auto center = static_cast<Vertex>(rng.bounded(g.vertex_count()));
      const auto dist = g.distances_from(center);
      std::vector<Vertex> h{center};
      std::vector<char> in(g.vertex_count(), 0);
      in[center] = 1;
      const int target = 2 + static_cast<int>(rng.bounded(10));
      for (int tries = 0; tries < 200 && static_cast<int>(h.size()) < target; ++tries) {
        const Vertex from = h[rng.bounded(h.size())];
        const Vertex to = g.neighbor(from, static_cast<int>(rng.bounded(6)));
        if (!in[to] && dist[to] <= 2) {
          in[to] = 1;
          h.push_back(to);
        }
      }
      const auto dh = oracle::distances(adj, in);
      int diameter = 0;
      for (Vertex x : h)
        for (Vertex y : h) diameter = std::max(diameter, dh[x][y]);
      if (diameter > 4) continue;
      ++sampled;
      EXPECT_EQ(!excluded_hub(g, h).has_value(), oracle::locally_connected(adj, h));
      EXPECT_EQ(is_locally_connected(g, h), oracle::locally_connected(adj, h));
    }
  }
}

TEST(WellBehaved, SixCycleCompletions) {
  const auto g = TorusGraph::shifted_grid(6, 9, 1);
  // five vertices of the first column
  std::vector<Vertex> h;
  for (int i = 0; i < 5; ++i) h.push_back(i * 9);
  const auto report = is_well_behaved(g, h, true);
  EXPECT_EQ(report.six_cycle_completions, std::vector<Vertex>{45});
  EXPECT_TRUE(is_well_behaved(g, h, false).six_cycle_completions.empty());
}

TEST(Bonus, ThirteenVertexLayout) {
  const auto& g = nine();
  const Template t{{{helper(1), helper(2), helper(3), helper(4)}, {helper(6), helper(9)}}};
  ASSERT_TRUE(is_good(g, t).has_value());
  std::vector<Vertex> h;
  for (int label = 1; label <= 11; ++label) h.push_back(helper(label));
  const auto bonus = bonus_vertices(g, t, h);
  bool found = false;
  for (const auto& [v, augmented] : bonus) {
    found = found || v == helper(12);
    const auto order = is_good(g, augmented);
    ASSERT_TRUE(order.has_value());
    ASSERT_EQ(augmented.colors.size(), 3u);
    EXPECT_EQ(augmented.colors.back(), std::vector<Vertex>{v});
    // Color the template and v, then extend greedily.
    Coloring partial{5, std::vector<Color>(81, 0)};
    for (Vertex x : augmented.colors[0]) partial[x] = 1;
    for (Vertex x : augmented.colors[1]) partial[x] = 2;
    partial[v] = 3;
    const auto qg = contract(g, augmented);
    const auto phi = extend_coloring(g, qg, *order, partial);
    EXPECT_TRUE(is_proper(g, phi));
    EXPECT_TRUE(contains_template(phi, augmented));
  }
  EXPECT_TRUE(found);
}
