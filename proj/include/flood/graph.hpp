#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flood/vertex_set.hpp"

namespace flood {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph with a vertex colouring. Immutable once built.
//
// Colours must be dense: every id in 0..k-1 is used by at least one vertex.
// The adjacency is kept as a row-major bit matrix so set-valued neighbourhood
// queries go through the SIMD kernels.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  // Throws InvalidInput on self-loops, duplicate edges, ids >= n, or colours
  // that are not dense.
  ColoredGraph(std::size_t n, std::span<const Edge> edges, std::vector<Color> colors);

  std::size_t n() const { return n_; }
  std::size_t k() const { return color_classes_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }
  const VertexSet& color_class(Color c) const { return color_classes_[c]; }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  std::vector<Vertex> neighbor_list(Vertex v) const;
  // Sorted, u < v.
  std::vector<Edge> edges() const;

  std::span<const VertexSet::Word> row(Vertex v) const {
    return {adjacency_.data() + static_cast<std::size_t>(v) * width_, width_};
  }
  std::span<const VertexSet::Word> adjacency_matrix() const { return adjacency_; }

  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  bool operator==(const ColoredGraph& other) const;

 private:
  std::size_t n_ = 0;
  std::size_t width_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet::Word> adjacency_;
  std::vector<Color> colors_;
  std::vector<VertexSet> color_classes_;
};

// An induced subgraph together with the id maps back to its parent.
struct Subgraph {
  ColoredGraph graph;
  std::vector<Vertex> to_parent;       // new vertex id -> parent vertex id
  std::vector<Color> color_to_parent;  // new colour id -> parent colour id
};

// Relabels colours to 0..k'-1 preserving their relative order. Returns the new
// colours and the map new id -> old id.
std::pair<std::vector<Color>, std::vector<Color>> densify_colors(std::span<const Color> colors);

VertexSet closed_neighborhood(const ColoredGraph& g, Vertex x);

// Union of the neighbourhoods of the members of s, minus s itself.
VertexSet open_neighborhood(const ColoredGraph& g, const VertexSet& s);

// Union of adj(v) over v in s (members of s included only if adjacent to s).
VertexSet neighbors_of_set(const ColoredGraph& g, const VertexSet& s);

// Connected components of G - removed, ordered by smallest member.
std::vector<VertexSet> components_avoiding(const ColoredGraph& g, const VertexSet& removed);

// The component of G - removed that contains x; empty if x is removed.
std::optional<VertexSet> component_containing(const ColoredGraph& g, const VertexSet& removed, Vertex x);

bool is_connected(const ColoredGraph& g);

Subgraph induced_subgraph(const ColoredGraph& g, const VertexSet& keep);

// Component labels of G - removed: label[v] is the index into
// components_avoiding(), or -1 for removed vertices.
std::vector<int> component_labels(const ColoredGraph& g, const VertexSet& removed);

}  // namespace flood
