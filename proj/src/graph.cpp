#include "flood/graph.hpp"

#include <algorithm>
#include <string>

#include "flood/error.hpp"

namespace flood {

ColoredGraph::ColoredGraph(std::size_t n, std::span<const Edge> edges, std::vector<Color> colors)
    : n_(n), width_(VertexSet::word_count(n)), adjacency_(n * width_, 0), colors_(std::move(colors)) {
  if (colors_.size() != n)
    throw InvalidInput("expected " + std::to_string(n) + " colours, got " + std::to_string(colors_.size()));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidInput("edge [" + std::to_string(u) + "," + std::to_string(v) + "] references a vertex >= " +
                         std::to_string(n));
    if (u == v) throw InvalidInput("self-loop on vertex " + std::to_string(u));
    if (has_edge(u, v))
      throw InvalidInput("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    adjacency_[u * width_ + (v >> 6)] |= VertexSet::Word{1} << (v & 63);
    adjacency_[v * width_ + (u >> 6)] |= VertexSet::Word{1} << (u & 63);
    ++edge_count_;
  }
  Color k = 0;
  for (Color c : colors_) k = std::max(k, c + 1);
  color_classes_.assign(k, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) color_classes_[colors_[v]].insert(v);
  for (Color c = 0; c < k; ++c)
    if (color_classes_[c].empty())
      throw InvalidInput("colour ids must be dense: colour " + std::to_string(c) + " is unused");
}

bool ColoredGraph::has_edge(Vertex u, Vertex v) const {
  return (adjacency_[u * width_ + (v >> 6)] >> (v & 63)) & 1U;
}

std::size_t ColoredGraph::degree(Vertex v) const { return simd::kernels().popcount(row(v)); }

VertexSet ColoredGraph::neighbors(Vertex v) const {
  VertexSet s(n_);
  std::copy(row(v).begin(), row(v).end(), s.words().begin());
  return s;
}

std::vector<Vertex> ColoredGraph::neighbor_list(Vertex v) const { return neighbors(v).to_vector(); }

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool ColoredGraph::operator==(const ColoredGraph& other) const {
  return n_ == other.n_ && colors_ == other.colors_ && adjacency_ == other.adjacency_;
}

std::pair<std::vector<Color>, std::vector<Color>> densify_colors(std::span<const Color> colors) {
  std::vector<Color> used(colors.begin(), colors.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<Color> out;
  out.reserve(colors.size());
  for (Color c : colors)
    out.push_back(static_cast<Color>(std::lower_bound(used.begin(), used.end(), c) - used.begin()));
  return {std::move(out), std::move(used)};
}

VertexSet closed_neighborhood(const ColoredGraph& g, Vertex x) {
  VertexSet s = g.neighbors(x);
  s.insert(x);
  return s;
}

VertexSet neighbors_of_set(const ColoredGraph& g, const VertexSet& s) {
  VertexSet out(g.n());
  simd::kernels().or_rows(out.words(), g.adjacency_matrix(), s.words());
  return out;
}

VertexSet open_neighborhood(const ColoredGraph& g, const VertexSet& s) { return neighbors_of_set(g, s) - s; }

namespace {

VertexSet grow(const ColoredGraph& g, Vertex start, const VertexSet& allowed) {
  VertexSet comp(g.n());
  comp.insert(start);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next = neighbors_of_set(g, frontier);
    next &= allowed;
    next -= comp;
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

}  // namespace

std::vector<VertexSet> components_avoiding(const ColoredGraph& g, const VertexSet& removed) {
  std::vector<VertexSet> out;
  VertexSet left = g.all() - removed;
  const VertexSet allowed = left;
  while (auto v = left.first()) {
    VertexSet comp = grow(g, *v, allowed);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<VertexSet> component_containing(const ColoredGraph& g, const VertexSet& removed, Vertex x) {
  if (removed.contains(x)) return std::nullopt;
  return grow(g, x, g.all() - removed);
}

bool is_connected(const ColoredGraph& g) {
  if (g.n() == 0) return true;
  return grow(g, 0, g.all()).size() == g.n();
}

std::vector<int> component_labels(const ColoredGraph& g, const VertexSet& removed) {
  std::vector<int> label(g.n(), -1);
  const auto comps = components_avoiding(g, removed);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) label[v] = static_cast<int>(i);
  return label;
}

Subgraph induced_subgraph(const ColoredGraph& g, const VertexSet& keep) {
  Subgraph sub;
  sub.to_parent = keep.to_vector();
  std::vector<Vertex> index(g.n(), 0);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) index[sub.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (Vertex u : sub.to_parent) {
    colors.push_back(g.color(u));
    for (Vertex v : g.neighbors(u) & keep)
      if (u < v) edges.emplace_back(index[u], index[v]);
  }
  auto [dense, back] = densify_colors(colors);
  sub.color_to_parent = std::move(back);
  sub.graph = ColoredGraph(sub.to_parent.size(), edges, std::move(dense));
  return sub;
}

}  // namespace flood
