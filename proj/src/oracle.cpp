#include "flood/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "flood/error.hpp"

namespace flood {
namespace {

using Mask = std::uint64_t;

struct Key {
  Mask territory;
  Color color;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = k.territory * 0x9e3779b97f4a7c15ULL ^ (std::uint64_t{k.color} << 1);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct Parent {
  Key prev;
  Color call;
};

class MaskGame {
 public:
  explicit MaskGame(const ColoredGraph& g) : adj_(g.n(), 0), classes_(g.k(), 0) {
    for (Vertex v = 0; v < g.n(); ++v) {
      adj_[v] = g.row(v)[0];
      classes_[g.color(v)] |= Mask{1} << v;
    }
    full_ = g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
  }

  Mask full() const { return full_; }
  std::size_t colors() const { return classes_.size(); }

  Mask neighbors(Mask set) const {
    Mask out = 0;
    while (set) {
      out |= adj_[static_cast<std::size_t>(std::countr_zero(set))];
      set &= set - 1;
    }
    return out;
  }

  Mask conquer(Mask territory, Color c) const {
    Mask frontier = territory;
    while (true) {
      const Mask add = neighbors(frontier) & classes_[c] & ~territory;
      if (!add) return territory;
      territory |= add;
      frontier = add;
    }
  }

 private:
  std::vector<Mask> adj_;
  std::vector<Mask> classes_;
  Mask full_ = 0;
};

}  // namespace

OracleResult oracle_min_moves(const ColoredGraph& g, Vertex source, const OracleLimits& limits, OracleKey key_mode) {
  const std::size_t cap = std::min<std::size_t>(limits.max_vertices, 64);
  if (g.n() > cap)
    throw OracleLimitExceeded("oracle refuses " + std::to_string(g.n()) + " vertices (limit " + std::to_string(cap) +
                              ")");
  if (source >= g.n()) throw InvalidInput("source " + std::to_string(source) + " out of range");

  const MaskGame game(g);
  const bool keep_color = key_mode == OracleKey::TerritoryAndColor;
  const Mask start = game.conquer(Mask{1} << source, g.color(source));
  const Key root{start, keep_color ? g.color(source) : 0};

  OracleResult result;
  if (start == game.full()) {
    result.optimum = 0;
    result.states_explored = 1;
    return result;
  }

  std::unordered_map<Key, Parent, KeyHash> parent;
  parent.emplace(root, Parent{root, 0});
  std::vector<Key> level{root};
  std::size_t depth = 0;

  while (!level.empty()) {
    ++depth;
    std::vector<Key> next;
    for (const Key& state : level) {
      for (Color c = 0; c < game.colors(); ++c) {
        const Mask t = game.conquer(state.territory, c);
        if (t == state.territory) continue;
        const Key child{t, keep_color ? c : 0};
        if (!parent.emplace(child, Parent{state, c}).second) continue;
        if (parent.size() > limits.max_states)
          throw OracleLimitExceeded("oracle state budget of " + std::to_string(limits.max_states) + " exhausted");
        if (t == game.full()) {
          result.optimum = depth;
          result.states_explored = parent.size();
          for (Key at = child; !(at == root);) {
            const Parent& p = parent.at(at);
            result.strategy.colors.push_back(p.call);
            at = p.prev;
          }
          std::reverse(result.strategy.colors.begin(), result.strategy.colors.end());
          return result;
        }
        next.push_back(child);
      }
    }
    level = std::move(next);
  }
  result.states_explored = parent.size();
  return result;
}

std::vector<std::size_t> oracle_all_sources(const ColoredGraph& g, const OracleLimits& limits) {
  std::vector<std::size_t> out;
  out.reserve(g.n());
  for (Vertex s = 0; s < g.n(); ++s) {
    const OracleResult r = oracle_min_moves(g, s, limits);
    if (!r.optimum) throw InvalidInput("graph is disconnected; no source can flood it");
    out.push_back(*r.optimum);
  }
  return out;
}

}  // namespace flood
