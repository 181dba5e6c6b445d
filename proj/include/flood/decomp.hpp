#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

// The split around an extreme x: C is the largest component of G - N[x],
// S = N(C) and X = V \ (C ∪ S). In any graph x ∈ X and X is completely joined
// to S whenever x is an extreme.
struct ExtremeContext {
  Vertex x = 0;
  VertexSet component;
  VertexSet separator;
  VertexSet module;
};

// The widest-interval pair (alpha, omega) together with the derived sets.
// Invariants after widest_pair(): alpha ∈ A, omega ∈ Omega, A is joined to
// S_alpha and Omega is joined to S_omega.
struct DecompContext {
  Vertex alpha = 0;
  Vertex omega = 0;
  VertexSet c_alpha_omega;  // component of G - N[alpha] containing omega
  VertexSet c_omega_alpha;  // component of G - N[omega] containing alpha
  VertexSet s_alpha;        // N(c_alpha_omega)
  VertexSet s_omega;        // N(c_omega_alpha)
  VertexSet a_side;         // V \ (s_alpha ∪ c_alpha_omega)
  VertexSet omega_side;     // V \ (s_omega ∪ c_omega_alpha)
  VertexSet interval;       // I(alpha, omega)
  std::size_t adjustment_steps = 0;
};

// Components of G - N[x].
std::vector<VertexSet> blocks_at(const ColoredGraph& g, Vertex x);

// Vertices z with z, y in one component of G - N[x] and z, x in one component
// of G - N[y]. Throws InvalidInput if x == y or x, y are adjacent.
VertexSet interval(const ColoredGraph& g, Vertex x, Vertex y);

// Largest block at x within x's connected component (ties: smallest member);
// empty set when N[x] covers the component.
VertexSet largest_block(const ColoredGraph& g, Vertex x);

bool is_extreme(const ColoredGraph& g, Vertex x);
VertexSet find_extremes(const ColoredGraph& g);

ExtremeContext extreme_context(const ColoredGraph& g, Vertex x);

// Global extremes, taken over every choice of extreme at every level of the
// recursion through the module X.
VertexSet global_extremes(const ColoredGraph& g);

// Scans all non-adjacent pairs for the largest interval (ties: lexicographic)
// and then moves alpha/omega until A ⋈ S_alpha and Omega ⋈ S_omega hold.
// Returns nothing for complete graphs. Throws StructureViolation if the
// adjustment does not settle within n^2 steps.
std::optional<DecompContext> widest_pair(const ColoredGraph& g);

}  // namespace flood
