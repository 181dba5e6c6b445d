#include "flood/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <memory>
#include <queue>
#include <tuple>

#include "flood/atfree.hpp"
#include "flood/contraction.hpp"
#include "flood/error.hpp"
#include "flood/ordering.hpp"

#ifndef FLOOD_DEFAULT_DELTA_RULE
#define FLOOD_DEFAULT_DELTA_RULE 0
#endif

namespace flood {

DeltaRule default_delta_rule() {
  static_assert(FLOOD_DEFAULT_DELTA_RULE >= 0 && FLOOD_DEFAULT_DELTA_RULE <= 2);
  return static_cast<DeltaRule>(FLOOD_DEFAULT_DELTA_RULE);
}

std::string to_string(DeltaRule rule) {
  switch (rule) {
    case DeltaRule::Coverage: return "coverage";
    case DeltaRule::AsPrinted: return "as-printed";
    case DeltaRule::Transposed: return "transposed";
  }
  return "?";
}

DeltaRule parse_delta_rule(const std::string& name) {
  if (name == "coverage") return DeltaRule::Coverage;
  if (name == "as-printed") return DeltaRule::AsPrinted;
  if (name == "transposed") return DeltaRule::Transposed;
  throw InvalidInput("unknown delta rule '" + name + "'");
}

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::ExtremePath: return "extreme-path";
    case SolveMethod::PairDp: return "pair-dp";
    case SolveMethod::Oracle: return "oracle";
  }
  return "?";
}

namespace {

// Plays `path` (dropping calls that change nothing), calling any colour as
// soon as one call completes its class, then finishes. Each completing call
// is charged to k', so the result is at most (non-completing path calls) + k'
// whenever the final territory dominates the graph.
Strategy realize(const ColoredGraph& g, Vertex source, const std::vector<Color>& path) {
  VertexSet territory = initial_territory(g, source);
  Strategy out;
  auto call = [&](Color c, VertexSet next) {
    territory = std::move(next);
    out.colors.push_back(c);
  };
  auto complete_greedily = [&] {
    for (bool progress = true; progress;) {
      progress = false;
      for (Color c = 0; c < g.k(); ++c) {
        if (g.color_class(c).is_subset_of(territory)) continue;
        VertexSet next = conquer(g, territory, c);
        if (g.color_class(c).is_subset_of(next)) {
          call(c, std::move(next));
          progress = true;
        }
      }
    }
  };

  complete_greedily();
  for (Color c : path) {
    VertexSet next = conquer(g, territory, c);
    if (next == territory) continue;
    call(c, std::move(next));
    complete_greedily();
  }
  while (territory.size() < g.n()) {
    Color best = 0;
    std::size_t best_size = 0;
    for (Color c = 0; c < g.k(); ++c) {
      const std::size_t sz = conquer(g, territory, c).size();
      if (sz > best_size) best = c, best_size = sz;
    }
    call(best, conquer(g, territory, best));
    complete_greedily();
  }
  return out;
}

void check_playable(const ColoredGraph& g, Vertex source) {
  if (source >= g.n()) throw InvalidInput("source " + std::to_string(source) + " out of range");
  if (!is_connected(g)) throw InvalidInput("graph is not connected; no strategy floods it");
}

SolveResult finish(const ColoredGraph& g, Vertex source, const std::vector<Color>& path, std::size_t predicted,
                   SolveMethod method) {
  SolveResult r;
  r.strategy = realize(g, source, path);
  r.optimum = r.strategy.length();
  r.predicted = predicted;
  r.method = method;
  if (r.optimum != predicted)
    r.diagnostics.push_back("strategy length " + std::to_string(r.optimum) + " differs from predicted " +
                            std::to_string(predicted));
  return r;
}

class PairSearch {
 public:
  PairSearch(const ColoredGraph& g, Vertex source, DeltaRule rule, const DecompContext* ctx)
      : g_(g), s_(source), sep_(g, source) {
    table_.n = g.n();
    table_.source = source;
    table_.rule = rule;
    table_.outside = outside_colors(g, source);
    table_.dist.assign(g.n() * g.n(), PairTable::kUnreached);
    table_.parent.assign(g.n() * g.n(), {source, source, 0});
    if (rule != DeltaRule::Coverage) {
      if (!ctx || !ctx->interval.contains(source)) return;
      prepare_sides(*ctx);
    }
    run(rule, ctx);
  }

  PairTable take() { return std::move(table_); }

 private:
  using Item = std::tuple<std::size_t, Vertex, Vertex>;

  std::size_t idx(Vertex x, Vertex y) const { return static_cast<std::size_t>(x) * g_.n() + y; }

  bool prec(Vertex u, Vertex v) const { return u == v || sep_.separates(u, v); }

  // First candidate that every candidate precedes, else the first candidate.
  std::optional<Vertex> top(const std::vector<Vertex>& cand) const {
    if (cand.empty()) return std::nullopt;
    for (Vertex v : cand)
      if (std::all_of(cand.begin(), cand.end(), [&](Vertex u) { return prec(u, v); })) return v;
    return std::nullopt;
  }

  void prepare_sides(const DecompContext& ctx) {
    left_ = VertexSet(g_.n());
    right_ = VertexSet(g_.n());
    for (const VertexSet& block : blocks_at(g_, s_)) {
      if (block.intersects(ctx.a_side)) left_ |= block;
      if (block.intersects(ctx.omega_side)) right_ |= block;
    }
    // a neighbour of the source joins the side whose blocks it touches; one
    // touching neither serves both heads
    const VertexSet nbrs = g_.neighbors(s_);
    const VertexSet near_left = nbrs & neighbors_of_set(g_, left_);
    const VertexSet near_right = nbrs & neighbors_of_set(g_, right_);
    const VertexSet loose = nbrs - near_left - near_right;
    left_ |= near_left | loose;
    right_ |= near_right | loose;
    for (Color c = 0; c < g_.k(); ++c) {
      min_.push_back(top((g_.color_class(c) & left_).to_vector()));
      max_.push_back(top((g_.color_class(c) & right_).to_vector()));
    }
  }

  std::optional<Vertex> step(Vertex h, Color c, const VertexSet& side) const {
    const std::vector<Vertex> cand = (g_.neighbors(h) & g_.color_class(c) & side).to_vector();
    if (cand.empty()) return std::nullopt;
    return top(cand).value_or(cand.front());
  }

  bool incomparable(Vertex a, Vertex b) const {
    if (a == s_ || b == s_ || g_.has_edge(a, s_) || g_.has_edge(b, s_)) return false;
    return sep_.source_side(a) == sep_.source_side(b);
  }

  bool conquered_by(std::optional<Vertex> other, Vertex x, Vertex y) const {
    if (!other) return true;
    const Vertex o = *other;
    if (o == x || o == y || g_.has_edge(o, x) || g_.has_edge(o, y)) return true;
    if (x != y && !g_.has_edge(x, y) && interval(g_, x, y).contains(o)) return true;
    return incomparable(o, x) || incomparable(o, y);
  }

  bool is_terminal(Vertex x, Vertex y, DeltaRule rule, const DecompContext* ctx) const {
    if (rule == DeltaRule::Coverage) return (sep_.covered_by(x) | sep_.covered_by(y)).size() == g_.n();
    return ctx->a_side.contains(x) && ctx->omega_side.contains(y);
  }

  void relax(std::size_t d, Vertex x, Vertex y, Vertex x2, Vertex y2, Color c, std::size_t cost) {
    const std::size_t nd = d + cost;
    if (nd < table_.dist[idx(x2, y2)]) {
      table_.dist[idx(x2, y2)] = nd;
      table_.parent[idx(x2, y2)] = {x, y, c};
      queue_.emplace(nd, x2, y2);
    }
  }

  void expand_coverage(std::size_t d, Vertex x, Vertex y) {
    const VertexSet here = sep_.covered_by(x) | sep_.covered_by(y);
    for (Color c = 0; c < g_.k(); ++c) {
      const VertexSet& cls = g_.color_class(c);
      std::vector<Vertex> xs{x}, ys{y};
      for (Vertex v : g_.neighbors(x) & cls) xs.push_back(v);
      for (Vertex v : g_.neighbors(y) & cls) ys.push_back(v);
      for (Vertex x2 : xs)
        for (Vertex y2 : ys) {
          if (x2 == x && y2 == y) continue;
          const VertexSet after = here | sep_.covered_by(x2) | sep_.covered_by(y2);
          relax(d, x, y, x2, y2, c, cls.is_subset_of(after) ? 0 : 1);
        }
    }
  }

  void expand_literal(std::size_t d, Vertex x, Vertex y, bool transposed) {
    for (Color c = 0; c < g_.k(); ++c) {
      const auto mn = min_[c];
      const auto mx = max_[c];
      if (auto x2 = step(x, c, left_)) {
        const bool free = transposed ? (mx && y == *mx && conquered_by(mn, *x2, y))
                                     : (mn && *x2 == *mn && conquered_by(mx, *x2, y));
        relax(d, x, y, *x2, y, c, free ? 0 : 1);
      }
      if (auto y2 = step(y, c, right_)) {
        const bool free = transposed ? (mn && x == *mn && conquered_by(mx, x, *y2))
                                     : (mx && *y2 == *mx && conquered_by(mn, x, *y2));
        relax(d, x, y, x, *y2, c, free ? 0 : 1);
      }
    }
  }

  void run(DeltaRule rule, const DecompContext* ctx) {
    table_.dist[idx(s_, s_)] = 0;
    queue_.emplace(0, s_, s_);
    while (!queue_.empty()) {
      const auto [d, x, y] = queue_.top();
      queue_.pop();
      if (d > table_.dist[idx(x, y)]) continue;
      if (is_terminal(x, y, rule, ctx)) {
        table_.terminal = std::pair{x, y};
        return;
      }
      if (rule == DeltaRule::Coverage)
        expand_coverage(d, x, y);
      else
        expand_literal(d, x, y, rule == DeltaRule::Transposed);
    }
  }

  const ColoredGraph& g_;
  Vertex s_;
  SeparatorTable sep_;
  PairTable table_;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue_;
  VertexSet left_, right_;
  std::vector<std::optional<Vertex>> min_, max_;
};

SolveResult solve_pair(const ColoredGraph& g, Vertex source, DeltaRule rule, const DecompContext* ctx) {
  PairTable table = build_pair_table(g, source, rule, ctx);
  if (!table.terminal && rule != DeltaRule::Coverage) {
    SolveResult r = solve_pair(g, source, DeltaRule::Coverage, ctx);
    r.diagnostics.insert(r.diagnostics.begin(),
                         "delta rule " + to_string(rule) + " reached no terminal; used coverage");
    return r;
  }
  if (!table.terminal) throw StructureViolation("pair DP reached no terminal state");
  SolveResult r = finish(g, source, table.path_colors(), *table.value(), SolveMethod::PairDp);
  r.diagnostics.insert(r.diagnostics.begin(), "delta rule " + to_string(rule));
  return r;
}

}  // namespace

std::optional<std::size_t> PairTable::value() const {
  if (!terminal) return std::nullopt;
  return at(terminal->first, terminal->second) + outside;
}

std::vector<Color> PairTable::path_colors() const {
  if (!terminal) return {};
  return path_colors_to(terminal->first, terminal->second);
}

std::vector<Color> PairTable::path_colors_to(Vertex x, Vertex y) const {
  std::vector<Color> out;
  if (at(x, y) == kUnreached) return out;
  while (!(x == source && y == source)) {
    const auto [px, py, c] = parent[static_cast<std::size_t>(x) * n + y];
    out.push_back(c);
    x = px;
    y = py;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

PairTable build_pair_table(const ColoredGraph& g, Vertex source, DeltaRule rule, const DecompContext* ctx) {
  check_playable(g, source);
  return PairSearch(g, source, rule, ctx).take();
}

SolveResult solve_extreme(const ColoredGraph& g, Vertex source) {
  check_playable(g, source);
  const SeparatorTable sep(g, source);
  const std::size_t outside = outside_colors(g, source);

  std::optional<VertexSet> best;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (x == source || g.has_edge(x, source)) continue;
    const VertexSet& d = sep.source_side(x);
    if (!best || d.size() > best->size()) best = d;
  }
  if (!best) return finish(g, source, {}, outside, SolveMethod::ExtremePath);

  const VertexSet delta = neighbors_of_set(g, *best) - *best;
  const VertexSet omega = g.all() - *best - delta;
  const ChainStructure chains = build_chains(g, source);
  const VertexSet targets = omega & chains.maxima();
  if (targets.empty()) throw StructureViolation("no colour maximum lies beyond the separator");

  // 0/1 BFS: entering a colour maximum is free.
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.n(), inf);
  std::vector<Vertex> parent(g.n(), source);
  std::deque<Vertex> dq{source};
  dist[source] = 0;
  while (!dq.empty()) {
    const Vertex u = dq.front();
    dq.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (v == source) continue;
      const std::size_t w = chains.maxima().contains(v) ? 0 : 1;
      if (dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        parent[v] = u;
        if (w == 0)
          dq.push_front(v);
        else
          dq.push_back(v);
      }
    }
  }
  Vertex target = *targets.first();
  for (Vertex v : targets)
    if (dist[v] < dist[target]) target = v;

  std::vector<Color> path;
  for (Vertex v = target; v != source; v = parent[v]) path.push_back(g.color(v));
  std::reverse(path.begin(), path.end());
  return finish(g, source, path, dist[target] + outside, SolveMethod::ExtremePath);
}

SolveResult solve_general(const ColoredGraph& g, Vertex source, const SolveOptions& options) {
  check_playable(g, source);
  if (!is_properly_colored(g)) throw InvalidInput("solve_general needs a properly coloured graph");
  const std::optional<DecompContext> ctx = widest_pair(g);
  const DecompContext* cp = ctx ? &*ctx : nullptr;
  if (ctx && ctx->interval.contains(source)) return solve_pair(g, source, options.rule, cp);
  try {
    return solve_extreme(g, source);
  } catch (const StructureViolation& e) {
    SolveResult r = solve_pair(g, source, options.rule, cp);
    r.diagnostics.insert(r.diagnostics.begin(), std::string("extreme formula not applicable: ") + e.what());
    return r;
  }
}

SolveResult solve(const ColoredGraph& g, Vertex source, const SolveOptions& options) {
  check_playable(g, source);
  const Contraction con = contract_monochromatic(g, source);
  if (auto at = find_asteroidal_triple(con.graph)) throw NotAtFree(*at);
  SolveResult r = solve_general(con.graph, con.source, options);
  // Contraction keeps colour ids, so the strategy plays unchanged on g.
  auto shared = std::make_shared<const ColoredGraph>(g);
  if (!simulate(shared, source, r.strategy).winning)
    throw StructureViolation("constructed strategy does not flood the input graph");
  return r;
}

Hint hint(const GameState& state, const SolveOptions& options, const OracleLimits& limits) {
  if (state.finished()) throw InvalidInput("game is already finished");
  const ColoredGraph& g = state.graph();
  std::vector<Color> colors = g.colors();
  for (Vertex v : state.territory()) colors[v] = state.current_color();
  auto [dense, back] = densify_colors(colors);
  const std::vector<Edge> edges = g.edges();
  const ColoredGraph board(g.n(), edges, std::move(dense));

  Hint h;
  try {
    const SolveResult r = solve(board, state.source(), options);
    h.color = back[r.strategy.colors.front()];
    h.remaining = r.optimum;
    h.method = r.method;
    return h;
  } catch (const NotAtFree&) {
    // fall through to exhaustive search
  }
  try {
    const OracleResult r = oracle_min_moves(board, state.source(), limits);
    if (!r.solved()) throw InfeasibleSpec("board cannot be flooded");
    h.color = back[r.strategy.colors.front()];
    h.remaining = *r.optimum;
    h.method = SolveMethod::Oracle;
    return h;
  } catch (const OracleLimitExceeded& e) {
    throw InfeasibleSpec(std::string("no hint: board is not AT-free and ") + e.what());
  }
}

}  // namespace flood
