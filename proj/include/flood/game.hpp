#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

// A sequence of called colours.
struct Strategy {
  std::vector<Color> colors;

  std::size_t length() const { return colors.size(); }
  bool operator==(const Strategy&) const = default;
  // Space-separated colour ids.
  std::string to_string() const;
};

// Territory after calling `color`: territory plus every vertex reachable from
// it through vertices of that colour.
VertexSet conquer(const ColoredGraph& g, const VertexSet& territory, Color color);

// Maximal connected monochromatic subgraph containing source.
VertexSet initial_territory(const ColoredGraph& g, Vertex source);

// Immutable snapshot of a solitaire game. apply_move() returns a new state.
class GameState {
 public:
  GameState(std::shared_ptr<const ColoredGraph> graph, Vertex source);

  const ColoredGraph& graph() const { return *graph_; }
  const std::shared_ptr<const ColoredGraph>& graph_ptr() const { return graph_; }
  Vertex source() const { return source_; }
  const VertexSet& territory() const { return territory_; }
  Color current_color() const { return current_color_; }
  const std::vector<Color>& moves() const { return moves_; }
  bool finished() const { return territory_.size() == graph_->n(); }
  // True if the move that produced this state called the territory's colour
  // or conquered nothing.
  bool last_move_idle() const { return last_move_idle_; }

  GameState apply_move(Color color) const;

 private:
  std::shared_ptr<const ColoredGraph> graph_;
  Vertex source_ = 0;
  VertexSet territory_;
  Color current_color_ = 0;
  std::vector<Color> moves_;
  bool last_move_idle_ = false;
};

GameState initial_state(std::shared_ptr<const ColoredGraph> g, Vertex source);
GameState apply_move(const GameState& s, Color color);

struct SimulationResult {
  GameState state;
  bool winning = false;
};

SimulationResult simulate(std::shared_ptr<const ColoredGraph> g, Vertex source, const Strategy& strategy);

// Step at which each vertex joins the territory (0 = initially owned), or
// nothing if the strategy never reaches it.
std::vector<std::optional<std::size_t>> conquest_steps(const ColoredGraph& g, Vertex source,
                                                       const Strategy& strategy);

// Length minus the number of steps at which some colour class becomes fully
// conquered. Colours complete before the first move are not counted.
std::size_t essential_length(const ColoredGraph& g, Vertex source, const Strategy& strategy);

// Number of colours with a vertex outside the initial territory; the minimum
// number of moves any winning strategy needs on a game where the territory
// already dominates the graph.
std::size_t outside_colors(const ColoredGraph& g, Vertex source);

// Drops calls that do not change the territory.
Strategy without_idle_moves(const ColoredGraph& g, Vertex source, const Strategy& strategy);

}  // namespace flood
