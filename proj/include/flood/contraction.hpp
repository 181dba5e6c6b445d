#pragma once

#include <cstddef>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

// Witness that ties a contracted graph back to the graph it came from. New ids
// are assigned in order of each group's smallest original member.
struct ContractionMap {
  std::vector<Vertex> original_to_contracted;
  std::size_t contracted_n = 0;

  Vertex operator()(Vertex original) const { return original_to_contracted[original]; }
  // Smallest original vertex of each contracted vertex.
  std::vector<Vertex> representatives() const;
  // All original vertices that map to `contracted`.
  std::vector<Vertex> members(Vertex contracted) const;
};

struct Contraction {
  ColoredGraph graph;
  ContractionMap map;
  Vertex source = 0;
};

// Contracts the edge {u,v} into one vertex coloured new_color whose
// neighbourhood is N(u) ∪ N(v) \ {u,v}. Colour ids are re-densified (keeping
// their relative order) if a colour disappears. Throws InvalidInput if {u,v}
// is not an edge.
Contraction contract_edge(const ColoredGraph& g, Vertex u, Vertex v, Color new_color);

// Collapses every maximal connected monochromatic subgraph to a single vertex
// of that colour. The result is properly coloured and keeps colour ids
// unchanged; `source` of the result is the image of the given source.
Contraction contract_monochromatic(const ColoredGraph& g, Vertex source);

bool is_properly_colored(const ColoredGraph& g);

}  // namespace flood
