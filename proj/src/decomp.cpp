#include "flood/decomp.hpp"

#include <algorithm>
#include <string>

#include "flood/error.hpp"

namespace flood {

std::vector<VertexSet> blocks_at(const ColoredGraph& g, Vertex x) {
  return components_avoiding(g, closed_neighborhood(g, x));
}

VertexSet interval(const ColoredGraph& g, Vertex x, Vertex y) {
  if (x == y || g.has_edge(x, y))
    throw InvalidInput("interval needs two distinct non-adjacent vertices, got " + std::to_string(x) + " and " +
                       std::to_string(y));
  VertexSet toward_y = *component_containing(g, closed_neighborhood(g, x), y);
  toward_y &= *component_containing(g, closed_neighborhood(g, y), x);
  return toward_y;
}

VertexSet largest_block(const ColoredGraph& g, Vertex x) {
  const VertexSet home = *component_containing(g, g.empty_set(), x);
  VertexSet best(g.n());
  std::size_t best_size = 0;
  for (auto& block : components_avoiding(g, closed_neighborhood(g, x) | (g.all() - home))) {
    const std::size_t size = block.size();
    if (size > best_size) {
      best_size = size;
      best = std::move(block);
    }
  }
  return best;
}

namespace {

// Extremes of the connected component `home`.
VertexSet extremes_in(const ColoredGraph& g, const VertexSet& home) {
  std::vector<std::size_t> size(g.n(), 0);
  std::size_t best = 0;
  for (Vertex v : home) {
    size[v] = largest_block(g, v).size();
    best = std::max(best, size[v]);
  }
  VertexSet out(g.n());
  for (Vertex v : home)
    if (size[v] == best) out.insert(v);
  return out;
}

bool is_union_of_cliques(const ColoredGraph& g, const VertexSet& within) {
  for (Vertex v : within) {
    const VertexSet nv = closed_neighborhood(g, v) & within;
    for (Vertex u : nv)
      if ((closed_neighborhood(g, u) & within) != nv) return false;
  }
  return true;
}

// Global extremes of a connected graph.
VertexSet global_extremes_connected(const ColoredGraph& g) {
  VertexSet out(g.n());
  std::vector<VertexSet> seen_modules;
  for (Vertex x : extremes_in(g, g.all())) {
    ExtremeContext ctx = extreme_context(g, x);
    if (std::find(seen_modules.begin(), seen_modules.end(), ctx.module) != seen_modules.end()) continue;
    seen_modules.push_back(ctx.module);
    if (ctx.module.empty()) {
      out.insert(x);
      continue;
    }
    if (is_union_of_cliques(g, ctx.module)) {
      out |= ctx.module;
      continue;
    }
    const Subgraph sub = induced_subgraph(g, ctx.module);
    for (const VertexSet& part : components_avoiding(sub.graph, sub.graph.empty_set())) {
      const Subgraph piece = induced_subgraph(sub.graph, part);
      for (Vertex v : global_extremes_connected(piece.graph)) out.insert(sub.to_parent[piece.to_parent[v]]);
    }
  }
  return out;
}

}  // namespace

bool is_extreme(const ColoredGraph& g, Vertex x) {
  return extremes_in(g, *component_containing(g, g.empty_set(), x)).contains(x);
}

VertexSet find_extremes(const ColoredGraph& g) {
  VertexSet out(g.n());
  for (const VertexSet& home : components_avoiding(g, g.empty_set())) out |= extremes_in(g, home);
  return out;
}

ExtremeContext extreme_context(const ColoredGraph& g, Vertex x) {
  ExtremeContext ctx;
  ctx.x = x;
  const VertexSet home = *component_containing(g, g.empty_set(), x);
  ctx.component = largest_block(g, x);
  ctx.separator = open_neighborhood(g, ctx.component);
  ctx.module = home - (ctx.component | ctx.separator);
  return ctx;
}

VertexSet global_extremes(const ColoredGraph& g) {
  VertexSet out(g.n());
  for (const VertexSet& home : components_avoiding(g, g.empty_set())) {
    const Subgraph sub = induced_subgraph(g, home);
    for (Vertex v : global_extremes_connected(sub.graph)) out.insert(sub.to_parent[v]);
  }
  return out;
}

std::optional<DecompContext> widest_pair(const ColoredGraph& g) {
  const std::size_t n = g.n();
  // component of G - N[x] containing each vertex, per x
  std::vector<std::vector<VertexSet>> blocks(n);
  std::vector<std::vector<int>> label(n);
  for (Vertex x = 0; x < n; ++x) {
    blocks[x] = blocks_at(g, x);
    label[x].assign(n, -1);
    for (std::size_t i = 0; i < blocks[x].size(); ++i)
      for (Vertex v : blocks[x][i]) label[x][v] = static_cast<int>(i);
  }
  const auto toward = [&](Vertex from, Vertex to) -> const VertexSet& {
    return blocks[from][static_cast<std::size_t>(label[from][to])];
  };

  std::optional<std::pair<Vertex, Vertex>> best;
  std::size_t best_size = 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      const std::size_t size = (toward(x, y) & toward(y, x)).size();
      if (!best || size > best_size) {
        best = {x, y};
        best_size = size;
      }
    }
  if (!best) return std::nullopt;

  DecompContext ctx;
  ctx.alpha = best->first;
  ctx.omega = best->second;

  const auto fill = [&] {
    ctx.c_alpha_omega = toward(ctx.alpha, ctx.omega);
    ctx.c_omega_alpha = toward(ctx.omega, ctx.alpha);
    ctx.s_alpha = open_neighborhood(g, ctx.c_alpha_omega);
    ctx.s_omega = open_neighborhood(g, ctx.c_omega_alpha);
    ctx.a_side = g.all() - (ctx.s_alpha | ctx.c_alpha_omega);
    ctx.omega_side = g.all() - (ctx.s_omega | ctx.c_omega_alpha);
  };
  // first vertex of `end` missing a neighbour in `sep`
  const auto violator = [&](const VertexSet& end, const VertexSet& sep) -> std::optional<Vertex> {
    for (Vertex a : end)
      if (!sep.is_subset_of(g.neighbors(a))) return a;
    return std::nullopt;
  };

  const std::size_t limit = std::max<std::size_t>(n * n, 1);
  fill();
  while (true) {
    bool moved = false;
    if (auto a = violator(ctx.a_side, ctx.s_alpha)) {
      ctx.alpha = *a;
      fill();
      moved = true;
    }
    if (auto w = violator(ctx.omega_side, ctx.s_omega)) {
      ctx.omega = *w;
      fill();
      moved = true;
    }
    if (!moved) break;
    if (++ctx.adjustment_steps > limit)
      throw StructureViolation("widest_pair: end-set adjustment did not settle within n^2 steps");
  }
  ctx.interval = toward(ctx.alpha, ctx.omega) & toward(ctx.omega, ctx.alpha);
  return ctx;
}

}  // namespace flood
