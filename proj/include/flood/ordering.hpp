#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flood/decomp.hpp"
#include "flood/graph.hpp"

namespace flood {

// For a fixed source s: whether N[z] meets every s->x path, for all z, x.
// This is the separation test behind the conquest order and the pair DP.
class SeparatorTable {
 public:
  SeparatorTable(const ColoredGraph& g, Vertex source);

  Vertex source() const { return source_; }
  // every source->x path meets N[z]
  bool separates(Vertex z, Vertex x) const;
  // {z : separates(z, x)}: vertices that are in or adjacent to every
  // territory that has reached x.
  const VertexSet& covered_by(Vertex x) const { return covered_[x]; }
  // component of G - N[z] containing the source (empty if source ∈ N[z])
  const VertexSet& source_side(Vertex z) const { return source_side_[z]; }

 private:
  const ColoredGraph* g_;
  Vertex source_;
  std::vector<VertexSet> source_side_;
  std::vector<VertexSet> covered_;
};

// True iff conquering x necessarily conquers y (same colour, x != y): y is
// adjacent to x, y is adjacent to the source, or N[y] separates x from the
// source. Throws InvalidInput for pairs of different colours or x == y.
bool conquest_precedes(const ColoredGraph& g, Vertex source, Vertex y, Vertex x);

enum class ChainSide { Single, ASide, OmegaSide };

// One linearly ordered part of a colour class, bottom (conquered first) to
// top. Each group holds vertices that are conquered together.
struct Chain {
  ChainSide side = ChainSide::Single;
  std::vector<std::vector<Vertex>> groups;

  const std::vector<Vertex>& top() const { return groups.back(); }
  std::size_t size() const;
};

class ChainStructure {
 public:
  ChainStructure() = default;
  ChainStructure(const ColoredGraph& g, Vertex source, bool two_sided, std::vector<std::vector<Chain>> chains);

  Vertex source() const { return source_; }
  bool two_sided() const { return two_sided_; }
  std::size_t colors() const { return chains_.size(); }
  const std::vector<Chain>& chains(Color c) const { return chains_[c]; }

  // Max(c): top of the single chain, or of the Omega-side chain.
  std::optional<Vertex> max_of(Color c) const;
  // Min(c): top of the A-side chain (two-sided structures only).
  std::optional<Vertex> min_of(Color c) const;
  // Whole top groups of every single / Omega-side chain.
  const VertexSet& maxima() const { return maxima_; }
  // Whole top groups of every A-side chain.
  const VertexSet& minima() const { return minima_; }

  // Highest neighbour of x of colour c on the single/Omega-side chain, resp.
  // on the A-side chain.
  std::optional<Vertex> max_adjacent(Vertex x, Color c) const;
  std::optional<Vertex> min_adjacent(Vertex x, Color c) const;

  // Group index of v in the chain of `side` for its colour.
  std::optional<std::size_t> position(Vertex v, ChainSide side) const;
  // Vertices strictly below v in any chain containing v.
  VertexSet predecessors(Vertex v) const;

 private:
  std::optional<Vertex> top_of(Color c, ChainSide side) const;
  std::optional<Vertex> best_neighbour(Vertex x, Color c, ChainSide side) const;

  const ColoredGraph* g_ = nullptr;
  Vertex source_ = 0;
  bool two_sided_ = false;
  std::vector<std::vector<Chain>> chains_;
  VertexSet maxima_;
  VertexSet minima_;
};

// Orders every colour class by conquest precedence. Without a context, or
// when the source is outside I(alpha, omega), each colour gets one chain.
// Otherwise each colour splits into an A-side and an Omega-side chain by the
// component of G - N[source] its vertices fall in; the source and its
// neighbours sit at the bottom of both. Throws StructureViolation naming the
// first pair that precedence fails to order.
ChainStructure build_chains(const ColoredGraph& g, Vertex source, const DecompContext* ctx = nullptr);

}  // namespace flood
