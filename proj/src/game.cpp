#include "flood/game.hpp"

#include <sstream>
#include <string>

#include "flood/error.hpp"

namespace flood {

std::string Strategy::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? " " : "") << colors[i];
  return out.str();
}

VertexSet conquer(const ColoredGraph& g, const VertexSet& territory, Color color) {
  VertexSet out = territory;
  if (color >= g.k()) return out;
  const VertexSet& cls = g.color_class(color);
  VertexSet frontier = territory;
  while (true) {
    VertexSet add = neighbors_of_set(g, frontier);
    add &= cls;
    add -= out;
    if (add.empty()) break;
    out |= add;
    frontier = std::move(add);
  }
  return out;
}

VertexSet initial_territory(const ColoredGraph& g, Vertex source) {
  VertexSet start(g.n());
  start.insert(source);
  return conquer(g, start, g.color(source));
}

GameState::GameState(std::shared_ptr<const ColoredGraph> graph, Vertex source)
    : graph_(std::move(graph)), source_(source) {
  if (!graph_ || source_ >= graph_->n()) throw InvalidInput("source " + std::to_string(source) + " out of range");
  territory_ = initial_territory(*graph_, source_);
  current_color_ = graph_->color(source_);
}

GameState GameState::apply_move(Color color) const {
  GameState next = *this;
  next.territory_ = conquer(*graph_, territory_, color);
  next.last_move_idle_ = color == current_color_ || next.territory_ == territory_;
  next.current_color_ = color;
  next.moves_.push_back(color);
  return next;
}

GameState initial_state(std::shared_ptr<const ColoredGraph> g, Vertex source) {
  return GameState(std::move(g), source);
}

GameState apply_move(const GameState& s, Color color) { return s.apply_move(color); }

SimulationResult simulate(std::shared_ptr<const ColoredGraph> g, Vertex source, const Strategy& strategy) {
  GameState state(std::move(g), source);
  for (Color c : strategy.colors) state = state.apply_move(c);
  const bool win = state.finished();
  return {std::move(state), win};
}

std::vector<std::optional<std::size_t>> conquest_steps(const ColoredGraph& g, Vertex source,
                                                       const Strategy& strategy) {
  std::vector<std::optional<std::size_t>> when(g.n());
  VertexSet territory = initial_territory(g, source);
  for (Vertex v : territory) when[v] = 0;
  for (std::size_t t = 0; t < strategy.colors.size(); ++t) {
    VertexSet next = conquer(g, territory, strategy.colors[t]);
    for (Vertex v : next - territory) when[v] = t + 1;
    territory = std::move(next);
  }
  return when;
}

std::size_t essential_length(const ColoredGraph& g, Vertex source, const Strategy& strategy) {
  VertexSet territory = initial_territory(g, source);
  std::vector<bool> complete(g.k());
  for (Color c = 0; c < g.k(); ++c) complete[c] = g.color_class(c).is_subset_of(territory);
  std::size_t completing_steps = 0;
  for (Color call : strategy.colors) {
    territory = conquer(g, territory, call);
    bool any = false;
    for (Color c = 0; c < g.k(); ++c) {
      if (!complete[c] && g.color_class(c).is_subset_of(territory)) {
        complete[c] = true;
        any = true;
      }
    }
    if (any) ++completing_steps;
  }
  return strategy.length() - completing_steps;
}

std::size_t outside_colors(const ColoredGraph& g, Vertex source) {
  const VertexSet territory = initial_territory(g, source);
  std::size_t count = 0;
  for (Color c = 0; c < g.k(); ++c)
    if (!g.color_class(c).is_subset_of(territory)) ++count;
  return count;
}

Strategy without_idle_moves(const ColoredGraph& g, Vertex source, const Strategy& strategy) {
  Strategy out;
  VertexSet territory = initial_territory(g, source);
  for (Color c : strategy.colors) {
    VertexSet next = conquer(g, territory, c);
    if (next == territory) continue;
    out.colors.push_back(c);
    territory = std::move(next);
  }
  return out;
}

}  // namespace flood
