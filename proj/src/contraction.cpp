#include "flood/contraction.hpp"

#include <string>

#include "flood/error.hpp"

namespace flood {

std::vector<Vertex> ContractionMap::representatives() const {
  std::vector<Vertex> rep(contracted_n, 0);
  std::vector<bool> seen(contracted_n, false);
  for (Vertex v = 0; v < original_to_contracted.size(); ++v) {
    const Vertex c = original_to_contracted[v];
    if (!seen[c]) {
      seen[c] = true;
      rep[c] = v;
    }
  }
  return rep;
}

std::vector<Vertex> ContractionMap::members(Vertex contracted) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < original_to_contracted.size(); ++v)
    if (original_to_contracted[v] == contracted) out.push_back(v);
  return out;
}

namespace {

// Builds the quotient graph for an arbitrary grouping (group ids need not be
// dense or ordered). group_color[g] is the colour of group g.
Contraction quotient(const ColoredGraph& g, const std::vector<std::size_t>& group,
                     const std::vector<Color>& group_color) {
  Contraction out;
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> new_id(group_color.size(), kUnset);
  std::vector<Color> colors;
  out.map.original_to_contracted.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (new_id[group[v]] == kUnset) {
      new_id[group[v]] = static_cast<Vertex>(colors.size());
      colors.push_back(group_color[group[v]]);
    }
    out.map.original_to_contracted[v] = new_id[group[v]];
  }
  out.map.contracted_n = colors.size();

  std::vector<VertexSet> adj(colors.size(), VertexSet(colors.size()));
  for (const auto& [u, v] : g.edges()) {
    const Vertex a = out.map(u), b = out.map(v);
    if (a != b) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < colors.size(); ++a)
    for (Vertex b : adj[a])
      if (a < b) edges.emplace_back(a, b);
  auto [dense, back] = densify_colors(colors);
  out.graph = ColoredGraph(colors.size(), edges, std::move(dense));
  return out;
}

}  // namespace

Contraction contract_edge(const ColoredGraph& g, Vertex u, Vertex v, Color new_color) {
  if (u >= g.n() || v >= g.n() || !g.has_edge(u, v))
    throw InvalidInput("cannot contract non-edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  std::vector<std::size_t> group(g.n());
  std::vector<Color> group_color(g.n());
  for (Vertex w = 0; w < g.n(); ++w) {
    group[w] = w;
    group_color[w] = g.color(w);
  }
  group[v] = u;
  group_color[u] = new_color;
  return quotient(g, group, group_color);
}

Contraction contract_monochromatic(const ColoredGraph& g, Vertex source) {
  if (g.n() > 0 && source >= g.n()) throw InvalidInput("source " + std::to_string(source) + " out of range");
  constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<std::size_t> group(g.n(), kUnset);
  std::vector<Color> group_color;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (group[v] != kUnset) continue;
    const std::size_t id = group_color.size();
    group_color.push_back(g.color(v));
    std::vector<Vertex> stack{v};
    group[v] = id;
    while (!stack.empty()) {
      const Vertex w = stack.back();
      stack.pop_back();
      for (Vertex x : g.neighbors(w) & g.color_class(g.color(v))) {
        if (group[x] == kUnset) {
          group[x] = id;
          stack.push_back(x);
        }
      }
    }
  }
  Contraction out = quotient(g, group, group_color);
  if (g.n() > 0) out.source = out.map(source);
  return out;
}

bool is_properly_colored(const ColoredGraph& g) {
  for (const auto& [u, v] : g.edges())
    if (g.color(u) == g.color(v)) return false;
  return true;
}

}  // namespace flood
