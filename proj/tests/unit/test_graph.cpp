#include <gtest/gtest.h>

#include "builders.hpp"
#include "flood/error.hpp"
#include "flood/graph.hpp"

namespace flood {
namespace {

using testing::make_graph;

TEST(ColoredGraph, ConstructionAndQueries) {
  const ColoredGraph g = make_graph(4, {{0, 1}, {2, 1}, {2, 3}}, {0, 1, 0, 2});
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.k(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.neighbor_list(2), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(g.color_class(0), VertexSet(4, {0, 2}));
}

TEST(ColoredGraph, RejectsBadInput) {
  EXPECT_THROW(make_graph(2, {{0, 2}}, {0, 1}), InvalidInput);
  EXPECT_THROW(make_graph(2, {{1, 1}}, {0, 1}), InvalidInput);
  EXPECT_THROW(make_graph(2, {{0, 1}, {1, 0}}, {0, 1}), InvalidInput);
  EXPECT_THROW(make_graph(2, {}, {0}), InvalidInput);
  EXPECT_THROW(make_graph(2, {}, {0, 2}), InvalidInput);
}

TEST(GraphOps, NeighbourhoodsAndComponents) {
  const ColoredGraph p = testing::alternating_path(6);
  EXPECT_EQ(closed_neighborhood(p, 2), VertexSet(6, {1, 2, 3}));
  EXPECT_EQ(open_neighborhood(p, VertexSet(6, {2, 3})), VertexSet(6, {1, 4}));
  EXPECT_EQ(neighbors_of_set(p, VertexSet(6, {2, 3})), VertexSet(6, {1, 2, 3, 4}));
  const auto comps = components_avoiding(p, VertexSet(6, {2}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], VertexSet(6, {0, 1}));
  EXPECT_EQ(comps[1], VertexSet(6, {3, 4, 5}));
  EXPECT_EQ(component_containing(p, VertexSet(6, {2}), 4), VertexSet(6, {3, 4, 5}));
  EXPECT_FALSE(component_containing(p, VertexSet(6, {2}), 2).has_value());
  const auto labels = component_labels(p, VertexSet(6, {2}));
  EXPECT_EQ(labels, (std::vector<int>{0, 0, -1, 1, 1, 1}));
  EXPECT_TRUE(is_connected(p));
  EXPECT_FALSE(is_connected(make_graph(2, {}, {0, 0})));
}

TEST(GraphOps, InducedSubgraphRelabelsAndDensifies) {
  const ColoredGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {0, 1, 2, 1, 0});
  const Subgraph sub = induced_subgraph(g, VertexSet(5, {1, 2, 3}));
  EXPECT_EQ(sub.graph.n(), 3u);
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(sub.graph.colors(), (std::vector<Color>{0, 1, 0}));
  EXPECT_EQ(sub.color_to_parent, (std::vector<Color>{1, 2}));
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(GraphOps, DensifyKeepsOrder) {
  const std::vector<Color> c{7, 3, 7, 9};
  const auto [dense, back] = densify_colors(c);
  EXPECT_EQ(dense, (std::vector<Color>{1, 0, 1, 2}));
  EXPECT_EQ(back, (std::vector<Color>{3, 7, 9}));
}

TEST(GraphOps, WideGraphsCrossWordBoundaries) {
  const ColoredGraph p = testing::alternating_path(130);
  EXPECT_TRUE(is_connected(p));
  EXPECT_EQ(closed_neighborhood(p, 64), VertexSet(130, {63, 64, 65}));
  EXPECT_EQ(components_avoiding(p, VertexSet(130, {64})).size(), 2u);
}

}  // namespace
}  // namespace flood
