#include "flood/generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "flood/atfree.hpp"
#include "flood/error.hpp"

namespace flood {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r < limit) return r % bound;
  }
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string to_string(Family f) {
  switch (f) {
    case Family::Interval: return "interval";
    case Family::Permutation: return "permutation";
    case Family::Rejection: return "rejection";
    case Family::Grid: return "grid";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "interval") return Family::Interval;
  if (name == "permutation") return Family::Permutation;
  if (name == "rejection") return Family::Rejection;
  if (name == "grid") return Family::Grid;
  throw InvalidInput("unknown family '" + name + "' (expected interval, permutation, rejection or grid)");
}

namespace {

// Left ends form a random walk with steps in [0, 1) and lengths lie in
// [0.5, 1.5), so cliques stay small while the graph stays mostly connected.
// Vertex ids are shuffled. `order` receives the vertices by left end, the
// order in which first-fit colouring is optimal.
std::vector<Edge> interval_edges(std::size_t n, SplitMix64& rng, std::vector<Vertex>& order) {
  std::vector<std::pair<double, double>> iv(n);
  double x = 0;
  for (auto& [lo, hi] : iv) {
    x += rng.unit();
    lo = x;
    hi = x + 0.5 + rng.unit();
  }
  for (std::size_t i = n; i > 1; --i) std::swap(iv[i - 1], iv[rng.below(i)]);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) edges.emplace_back(u, v);
  order.resize(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return iv[a].first < iv[b].first; });
  return edges;
}

// Inversion graph of the permutation that sorts i + U[0, 12): elements move
// a bounded distance, which keeps cliques (decreasing runs) short.
std::vector<Edge> permutation_edges(std::size_t n, SplitMix64& rng) {
  std::vector<std::pair<double, Vertex>> keyed(n);
  for (Vertex i = 0; i < n; ++i) keyed[i] = {i + 12.0 * rng.unit(), i};
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) perm[keyed[pos].second] = pos;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (perm[u] > perm[v]) edges.emplace_back(u, v);
  return edges;
}

std::vector<Edge> grid_edges(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  return edges;
}

constexpr std::size_t kRejectionAttempts = 20000;

std::vector<Edge> rejection_edges(std::size_t n, SplitMix64& rng) {
  const std::vector<Color> plain(n, 0);
  for (std::size_t attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    const double p = 0.2 + 0.5 * rng.unit();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.unit() < p) edges.emplace_back(u, v);
    if (is_atfree(ColoredGraph(n, edges, plain))) return edges;
  }
  throw InfeasibleSpec("rejection sampling found no AT-free graph in " + std::to_string(kRejectionAttempts) +
                       " attempts");
}

// Random available colour per vertex; if that paints itself into a corner,
// first-fit over `order` decides whether k colours suffice.
std::vector<Color> proper_coloring(std::size_t n, const std::vector<Edge>& edges, std::size_t k,
                                   const std::vector<Vertex>& order, SplitMix64& rng) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto available = [&](const std::vector<Color>& col, Vertex v) {
    std::vector<bool> used(k, false);
    for (Vertex w : adj[v])
      if (col[w] < k) used[col[w]] = true;
    std::vector<Color> free;
    for (Color c = 0; c < k; ++c)
      if (!used[c]) free.push_back(c);
    return free;
  };

  std::vector<Color> col(n, static_cast<Color>(k));
  bool ok = true;
  for (Vertex v : order) {
    if (!ok) break;
    const auto free = available(col, v);
    if (free.empty()) ok = false;
    else col[v] = free[rng.below(free.size())];
  }
  if (ok) return col;

  std::fill(col.begin(), col.end(), static_cast<Color>(k));
  for (Vertex v : order) {
    const auto free = available(col, v);
    if (free.empty())
      throw InfeasibleSpec("proper colouring needs more than " + std::to_string(k) + " colours");
    col[v] = free.front();
  }
  std::vector<Color> relabel(k);
  std::iota(relabel.begin(), relabel.end(), 0);
  for (std::size_t i = k; i > 1; --i) std::swap(relabel[i - 1], relabel[rng.below(i)]);
  for (Color& c : col) c = relabel[c];
  return col;
}

}  // namespace

ColoredGraph generate(const GenSpec& spec) {
  if (spec.colors < 1) throw InfeasibleSpec("colors must be at least 1");
  std::size_t n = spec.n;
  std::size_t rows = spec.rows, cols = spec.cols;
  if (spec.family == Family::Grid) {
    if (rows == 0 && cols == 0) rows = 1, cols = spec.n;
    if (rows == 0 || cols == 0) throw InfeasibleSpec("grid needs both rows and cols");
    n = rows * cols;
  }
  if (n < 1) throw InfeasibleSpec("n must be at least 1");
  if (n > kMaxGeneratedVertices)
    throw InfeasibleSpec("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxGeneratedVertices));
  if (spec.family == Family::Rejection && n > kMaxRejectionVertices)
    throw InfeasibleSpec("rejection sampling is limited to n <= " + std::to_string(kMaxRejectionVertices));

  SplitMix64 rng(spec.seed);
  std::vector<Edge> edges;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  switch (spec.family) {
    case Family::Interval: edges = interval_edges(n, rng, order); break;
    case Family::Permutation: edges = permutation_edges(n, rng); break;
    case Family::Rejection: edges = rejection_edges(n, rng); break;
    case Family::Grid: edges = grid_edges(rows, cols); break;
  }

  std::vector<Color> colors;
  if (spec.proper) {
    colors = proper_coloring(n, edges, spec.colors, order, rng);
  } else {
    colors.resize(n);
    for (Color& c : colors) c = static_cast<Color>(rng.below(spec.colors));
  }
  return ColoredGraph(n, edges, densify_colors(colors).first);
}

Instance restrict_to_component(const ColoredGraph& g, Vertex source) {
  if (source >= g.n()) throw InvalidInput("source " + std::to_string(source) + " out of range");
  const VertexSet comp = *component_containing(g, g.empty_set(), source);
  Subgraph sub = induced_subgraph(g, comp);
  const auto it = std::find(sub.to_parent.begin(), sub.to_parent.end(), source);
  return {std::move(sub.graph), static_cast<Vertex>(it - sub.to_parent.begin())};
}

}  // namespace flood
