#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flood/decomp.hpp"
#include "flood/game.hpp"
#include "flood/graph.hpp"
#include "flood/oracle.hpp"

namespace flood {

// Zero-cost rule of the two-head DP.
//   Coverage:   a call is free when its colour class ends up dominated by the
//               heads' separator coverage.
//   AsPrinted:  free when the moved head lands on the extreme of its side and
//               the other side's extreme is already conquered.
//   Transposed: the same test with the roles of the two heads swapped.
enum class DeltaRule { Coverage, AsPrinted, Transposed };

DeltaRule default_delta_rule();
std::string to_string(DeltaRule rule);
// Accepts "coverage", "as-printed", "transposed". Throws InvalidInput.
DeltaRule parse_delta_rule(const std::string& name);

enum class SolveMethod { ExtremePath, PairDp, Oracle };
std::string to_string(SolveMethod method);

struct SolveOptions {
  DeltaRule rule = default_delta_rule();
};

struct SolveResult {
  std::size_t optimum = 0;
  Strategy strategy;
  SolveMethod method = SolveMethod::PairDp;
  // Value predicted by the path/table before the strategy was built. Equal
  // to optimum unless the rule under test is not exact.
  std::size_t predicted = 0;
  std::vector<std::string> diagnostics;
};

// Shortest-path table of the two-head DP. Entry (x, y) is the least number
// of non-completing calls after which a territory can hold a source->x and a
// source->y path.
struct PairTable {
  static constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

  std::size_t n = 0;
  Vertex source = 0;
  DeltaRule rule = DeltaRule::Coverage;
  std::size_t outside = 0;  // k': colours outside the initial territory
  std::vector<std::size_t> dist;
  std::optional<std::pair<Vertex, Vertex>> terminal;
  // (x, y) -> (previous x, previous y, colour called)
  std::vector<std::tuple<Vertex, Vertex, Color>> parent;

  std::size_t at(Vertex x, Vertex y) const { return dist[static_cast<std::size_t>(x) * n + y]; }
  std::optional<std::size_t> value() const;
  // Colours along the recorded path from (source, source) to (x, y).
  std::vector<Color> path_colors_to(Vertex x, Vertex y) const;
  // Same, to the terminal (empty without one).
  std::vector<Color> path_colors() const;
};

// Runs the DP on a properly coloured connected graph. Rules other than
// Coverage need the source inside I(alpha, omega) of `ctx`; without it the
// table has no terminal.
PairTable build_pair_table(const ColoredGraph& g, Vertex source, DeltaRule rule = DeltaRule::Coverage,
                           const DecompContext* ctx = nullptr);

// Shortest-path formula for sources whose colour classes are totally ordered
// by conquest precedence. Throws StructureViolation when the order is not
// total or no maximum lies beyond the separator.
SolveResult solve_extreme(const ColoredGraph& g, Vertex source);

// Dispatch on a properly coloured connected AT-free graph.
SolveResult solve_general(const ColoredGraph& g, Vertex source, const SolveOptions& options = {});

// Any connected coloured graph: contracts monochromatic parts, refuses
// non-AT-free input with NotAtFree, and returns a strategy checked by
// simulation on `g`. Throws InvalidInput on disconnected graphs.
SolveResult solve(const ColoredGraph& g, Vertex source, const SolveOptions& options = {});

struct Hint {
  Color color = 0;
  std::size_t remaining = 0;  // optimal number of moves left, hint included
  SolveMethod method = SolveMethod::PairDp;
};

// Best next move for a game in progress. Uses the polynomial solver and falls
// back to the exhaustive search for non-AT-free boards within `limits`.
// Throws InvalidInput on finished games and InfeasibleSpec when no hint can
// be computed.
Hint hint(const GameState& state, const SolveOptions& options = {}, const OracleLimits& limits = {});

}  // namespace flood
