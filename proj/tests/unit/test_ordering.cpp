#include <gtest/gtest.h>

#include "builders.hpp"
#include "flood/contraction.hpp"
#include "flood/decomp.hpp"
#include "flood/error.hpp"
#include "flood/game.hpp"
#include "flood/ordering.hpp"

namespace flood {
namespace {

using testing::alternating_path;

TEST(ConquestPrecedes, PathExamples) {
  const ColoredGraph p = alternating_path(5);
  EXPECT_TRUE(conquest_precedes(p, 0, 2, 4));
  EXPECT_FALSE(conquest_precedes(p, 0, 4, 2));
  EXPECT_THROW(conquest_precedes(p, 0, 1, 2), InvalidInput);
  EXPECT_THROW(conquest_precedes(p, 0, 2, 2), InvalidInput);
}

// Leaves adjacent to the source precede each other both ways, so they share
// one chain position.
TEST(ConquestPrecedes, SameColouredStarLeavesTie) {
  const ColoredGraph g = testing::make_graph(3, {{0, 1}, {0, 2}}, {0, 1, 1});
  EXPECT_TRUE(conquest_precedes(g, 0, 1, 2));
  EXPECT_TRUE(conquest_precedes(g, 0, 2, 1));
  const ChainStructure ch = build_chains(g, 0);
  ASSERT_EQ(ch.chains(1).size(), 1u);
  ASSERT_EQ(ch.chains(1)[0].groups.size(), 1u);
  EXPECT_EQ(ch.chains(1)[0].groups[0], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(ch.max_of(1), 1u);
}

TEST(ConquestPrecedes, MatchesPathDefinition) {
  // every source->x path meets N[y], checked by reachability
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = testing::connected_instance(Family::Rejection, 9, 2, seed, true);
    const ColoredGraph& g = inst.graph;
    const auto adj = testing::adjacency_lists(g);
    for (Vertex y = 0; y < g.n(); ++y) {
      const auto reach = testing::reach_avoiding(adj, inst.source, testing::closed_nbhd_mask(adj, y));
      for (Vertex x = 0; x < g.n(); ++x) {
        if (x == y || g.color(x) != g.color(y)) continue;
        EXPECT_EQ(conquest_precedes(g, inst.source, y, x), !reach[x]);
      }
    }
  }
}

TEST(Chains, EndpointSourceGivesOneChainPerColour) {
  const ColoredGraph p = alternating_path(6);
  const ChainStructure ch = build_chains(p, 0);
  EXPECT_FALSE(ch.two_sided());
  ASSERT_EQ(ch.chains(0).size(), 1u);
  const Chain& c0 = ch.chains(0)[0];
  EXPECT_EQ(c0.side, ChainSide::Single);
  ASSERT_EQ(c0.groups.size(), 3u);
  EXPECT_EQ(c0.groups[0], (std::vector<Vertex>{0}));
  EXPECT_EQ(c0.groups[2], (std::vector<Vertex>{4}));
  EXPECT_EQ(ch.max_of(0), 4u);
  EXPECT_EQ(ch.max_of(1), 5u);
  EXPECT_FALSE(ch.min_of(1).has_value());
  EXPECT_EQ(ch.maxima(), VertexSet(6, {4, 5}));
  EXPECT_EQ(ch.max_adjacent(2, 1), 3u);
  EXPECT_EQ(ch.position(3, ChainSide::Single), 1u);
  EXPECT_EQ(ch.predecessors(5), VertexSet(6, {1, 3}));
}

TEST(Chains, MiddleSourceSplitsByDistance) {
  const ColoredGraph p = alternating_path(7);
  const auto ctx = widest_pair(p);
  ASSERT_TRUE(ctx.has_value());
  ASSERT_TRUE(ctx->interval.contains(3));
  const ChainStructure ch = build_chains(p, 3, &*ctx);
  EXPECT_TRUE(ch.two_sided());
  // Colour 1 = {1, 3, 5}: the source sits at the bottom of both sides.
  ASSERT_EQ(ch.chains(1).size(), 2u);
  const Chain& a = ch.chains(1)[0];
  const Chain& w = ch.chains(1)[1];
  EXPECT_EQ(a.side, ChainSide::ASide);
  EXPECT_EQ(w.side, ChainSide::OmegaSide);
  EXPECT_EQ(a.groups, (std::vector<std::vector<Vertex>>{{3}, {1}}));
  EXPECT_EQ(w.groups, (std::vector<std::vector<Vertex>>{{3}, {5}}));
  // Colour 0: the source's neighbours 2 and 4 tie at the bottom.
  EXPECT_EQ(ch.chains(0)[0].groups, (std::vector<std::vector<Vertex>>{{2, 4}, {0}}));
  EXPECT_EQ(ch.chains(0)[1].groups, (std::vector<std::vector<Vertex>>{{2, 4}, {6}}));
  EXPECT_EQ(ch.min_of(1), 1u);
  EXPECT_EQ(ch.max_of(1), 5u);
  EXPECT_EQ(ch.max_of(0), 6u);
  EXPECT_EQ(ch.min_of(0), 0u);
  EXPECT_EQ(ch.maxima(), VertexSet(7, {5, 6}));
  EXPECT_EQ(ch.minima(), VertexSet(7, {0, 1}));
  EXPECT_EQ(ch.min_adjacent(2, 1), 1u);
  EXPECT_EQ(ch.max_adjacent(4, 1), 5u);
}

TEST(Chains, NonTotalOrderIsReported) {
  // Sources of C6 see the two antipodal-side vertices of one colour as
  // unordered.
  const ColoredGraph c6 = testing::cycle_graph({0, 1, 0, 1, 0, 1});
  try {
    build_chains(c6, 0);
    FAIL() << "expected StructureViolation";
  } catch (const StructureViolation& e) {
    EXPECT_NE(std::string(e.what()).find("2 and 4"), std::string::npos) << e.what();
  }
}

// Whenever x enters the territory, its chain predecessors are already in.
TEST(ChainProperty, RandomStrategiesRespectChainOrder) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance raw = testing::connected_instance(seed % 2 ? Family::Interval : Family::Permutation, 12, 3, seed, true);
    const Contraction con = contract_monochromatic(raw.graph, raw.source);
    const ColoredGraph& g = con.graph;
    const auto extremes = global_extremes(g);
    const Vertex source = *extremes.first();
    const ChainStructure ch = build_chains(g, source);
    SplitMix64 rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
      Strategy s;
      VertexSet t = initial_territory(g, source);
      while (t.size() < g.n()) {
        const Color c = static_cast<Color>(rng.below(g.k()));
        s.colors.push_back(c);
        t = conquer(g, t, c);
      }
      const auto steps = conquest_steps(g, source, s);
      for (Vertex x = 0; x < g.n(); ++x)
        for (Vertex p : ch.predecessors(x)) {
          EXPECT_LE(*steps[p], *steps[x]) << "seed " << seed << " x " << x << " pred " << p;
          ++checked;
        }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(ChainProperty, PrecedenceIsTransitiveOnSides) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance raw = testing::connected_instance(Family::Interval, 12, 3, seed, true);
    const ColoredGraph& g = raw.graph;
    const auto ctx = widest_pair(g);
    const ChainStructure ch = build_chains(g, raw.source, ctx ? &*ctx : nullptr);
    for (Color c = 0; c < g.k(); ++c)
      for (const Chain& chain : ch.chains(c)) {
        std::vector<Vertex> m;
        for (const auto& grp : chain.groups) m.insert(m.end(), grp.begin(), grp.end());
        auto prec = [&](Vertex y, Vertex x) { return x == y || conquest_precedes(g, raw.source, y, x); };
        for (Vertex a : m)
          for (Vertex b : m)
            for (Vertex d : m)
              if (prec(a, b) && prec(b, d)) {
                EXPECT_TRUE(prec(a, d));
              }
      }
  }
}

// A colour present beyond the separator of the source's widest block has its
// maximum there too.
TEST(ChainProperty, MaximaOfColoursInOmegaLieInOmega) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance raw = testing::connected_instance(Family::Permutation, 12, 3, seed, true);
    const ColoredGraph& g = raw.graph;
    const Vertex source = *global_extremes(g).first();
    const SeparatorTable sep(g, source);
    std::optional<VertexSet> d;
    for (Vertex x = 0; x < g.n(); ++x)
      if (x != source && !g.has_edge(x, source) && (!d || sep.source_side(x).size() > d->size())) d = sep.source_side(x);
    if (!d) continue;
    const VertexSet omega = g.all() - *d - (neighbors_of_set(g, *d) - *d);
    const ChainStructure ch = build_chains(g, source);
    for (Color c = 0; c < g.k(); ++c)
      if (g.color_class(c).intersects(omega)) {
        EXPECT_TRUE(omega.contains(*ch.max_of(c))) << "seed " << seed;
      }
  }
}

}  // namespace
}  // namespace flood
