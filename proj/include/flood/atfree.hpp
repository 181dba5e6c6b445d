#pragma once

#include <array>
#include <optional>
#include <string>

#include "flood/error.hpp"
#include "flood/graph.hpp"

namespace flood {

// Three pairwise non-adjacent vertices, each pair joined by a path that avoids
// the closed neighbourhood of the third. Stored in increasing id order.
struct AsteroidalTriple {
  std::array<Vertex, 3> vertices{};

  bool operator==(const AsteroidalTriple&) const = default;
  std::string to_string() const;
};

class NotAtFree : public Error {
 public:
  explicit NotAtFree(AsteroidalTriple witness);
  const AsteroidalTriple& witness() const { return witness_; }

 private:
  AsteroidalTriple witness_;
};

// Lexicographically smallest asteroidal triple, if any. Precomputes the
// component partition of G - N[z] for every z, then scans independent triples:
// O(n(n+m)) + O(n^3).
std::optional<AsteroidalTriple> find_asteroidal_triple(const ColoredGraph& g);

bool is_atfree(const ColoredGraph& g);

}  // namespace flood
