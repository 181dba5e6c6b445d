#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "flood/graph.hpp"

namespace flood {

// splitmix64. Chosen because it is a few lines in any language, so seeded
// instances can be regenerated elsewhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) from the top 53 bits.
  double unit();

 private:
  std::uint64_t state_;
};

enum class Family { Interval, Permutation, Rejection, Grid };

std::string to_string(Family f);
// Throws InvalidInput on unknown names.
Family parse_family(const std::string& name);

struct GenSpec {
  Family family = Family::Interval;
  std::size_t n = 0;     // ignored for grids when rows and cols are set
  std::size_t rows = 0;  // grid only; 0 means 1 x n
  std::size_t cols = 0;
  std::size_t colors = 2;
  std::uint64_t seed = 0;
  bool proper = false;
};

inline constexpr std::size_t kMaxGeneratedVertices = 4096;
inline constexpr std::size_t kMaxRejectionVertices = 12;

// Deterministic in the spec. Interval and permutation outputs are AT-free by
// construction, rejection outputs by filtering. Throws InfeasibleSpec for
// out-of-range sizes, for proper colourings that need more than `colors`
// colours, and when rejection sampling exhausts its attempts.
ColoredGraph generate(const GenSpec& spec);

struct Instance {
  ColoredGraph graph;
  Vertex source = 0;
};

// The component of `source`, relabelled; the source's new id is returned.
Instance restrict_to_component(const ColoredGraph& g, Vertex source);

}  // namespace flood
