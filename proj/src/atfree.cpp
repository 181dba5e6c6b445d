#include "flood/atfree.hpp"

#include <vector>

namespace flood {

std::string AsteroidalTriple::to_string() const {
  return std::to_string(vertices[0]) + " " + std::to_string(vertices[1]) + " " + std::to_string(vertices[2]);
}

NotAtFree::NotAtFree(AsteroidalTriple witness)
    : Error("graph is not AT-free; asteroidal triple " + witness.to_string()), witness_(witness) {}

std::optional<AsteroidalTriple> find_asteroidal_triple(const ColoredGraph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<int>> label(n);
  for (Vertex z = 0; z < n; ++z) label[z] = component_labels(g, closed_neighborhood(g, z));

  const auto together = [&](Vertex z, Vertex p, Vertex q) {
    return label[z][p] >= 0 && label[z][p] == label[z][q];
  };

  for (Vertex a = 0; a < n; ++a) {
    const VertexSet non_a = g.all() - closed_neighborhood(g, a);
    for (Vertex b : non_a) {
      if (b < a) continue;
      const VertexSet candidates = non_a - closed_neighborhood(g, b);
      for (Vertex c : candidates) {
        if (c < b) continue;
        if (together(c, a, b) && together(b, a, c) && together(a, b, c)) return AsteroidalTriple{{a, b, c}};
      }
    }
  }
  return std::nullopt;
}

bool is_atfree(const ColoredGraph& g) { return !find_asteroidal_triple(g).has_value(); }

}  // namespace flood
