#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flood/game.hpp"
#include "flood/graph.hpp"

namespace flood {

struct OracleLimits {
  std::size_t max_vertices = 14;  // hard ceiling 64 (one machine word per territory)
  std::size_t max_states = 4'000'000;
};

// State identity used for deduplication. Territory alone is exact because the
// next territory depends only on the current one and the called colour; the
// pair key exists so that claim can be checked.
enum class OracleKey { Territory, TerritoryAndColor };

struct OracleResult {
  std::optional<std::size_t> optimum;  // empty: the graph cannot be flooded (disconnected)
  Strategy strategy;
  std::size_t states_explored = 0;

  bool solved() const { return optimum.has_value(); }
};

// Breadth-first search over territories, colours expanded in ascending order.
// Throws OracleLimitExceeded when n > max_vertices or the state budget runs out.
OracleResult oracle_min_moves(const ColoredGraph& g, Vertex source, const OracleLimits& limits = {},
                              OracleKey key = OracleKey::Territory);

// Optimum for every source. Throws InvalidInput on disconnected graphs.
std::vector<std::size_t> oracle_all_sources(const ColoredGraph& g, const OracleLimits& limits = {});

}  // namespace flood
