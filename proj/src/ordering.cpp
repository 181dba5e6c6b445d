#include "flood/ordering.hpp"

#include <algorithm>
#include <string>

#include "flood/error.hpp"

namespace flood {

SeparatorTable::SeparatorTable(const ColoredGraph& g, Vertex source)
    : g_(&g), source_(source), source_side_(g.n()), covered_(g.n(), VertexSet(g.n())) {
  for (Vertex z = 0; z < g.n(); ++z) {
    const VertexSet nz = closed_neighborhood(g, z);
    source_side_[z] = nz.contains(source) ? VertexSet(g.n()) : *component_containing(g, nz, source);
  }
  for (Vertex x = 0; x < g.n(); ++x)
    for (Vertex z = 0; z < g.n(); ++z)
      if (separates(z, x)) covered_[x].insert(z);
}

bool SeparatorTable::separates(Vertex z, Vertex x) const {
  if (z == x || z == source_ || g_->has_edge(z, source_) || g_->has_edge(z, x)) return true;
  return !source_side_[z].contains(x);
}

bool conquest_precedes(const ColoredGraph& g, Vertex source, Vertex y, Vertex x) {
  if (x == y || g.color(x) != g.color(y))
    throw InvalidInput("conquest order compares distinct vertices of one colour, got " + std::to_string(y) + " and " +
                       std::to_string(x));
  if (g.has_edge(x, y) || y == source || g.has_edge(y, source)) return true;
  return !component_containing(g, closed_neighborhood(g, y), source)->contains(x);
}

std::size_t Chain::size() const {
  std::size_t n = 0;
  for (const auto& grp : groups) n += grp.size();
  return n;
}

ChainStructure::ChainStructure(const ColoredGraph& g, Vertex source, bool two_sided,
                               std::vector<std::vector<Chain>> chains)
    : g_(&g), source_(source), two_sided_(two_sided), chains_(std::move(chains)), maxima_(g.n()), minima_(g.n()) {
  for (const auto& per_color : chains_)
    for (const Chain& chain : per_color) {
      if (chain.groups.empty()) continue;
      VertexSet& into = chain.side == ChainSide::ASide ? minima_ : maxima_;
      for (Vertex v : chain.top()) into.insert(v);
    }
}

std::optional<Vertex> ChainStructure::top_of(Color c, ChainSide side) const {
  for (const Chain& chain : chains_[c])
    if (chain.side == side && !chain.groups.empty()) return chain.top().front();
  return std::nullopt;
}

std::optional<Vertex> ChainStructure::max_of(Color c) const {
  return top_of(c, two_sided_ ? ChainSide::OmegaSide : ChainSide::Single);
}

std::optional<Vertex> ChainStructure::min_of(Color c) const {
  if (!two_sided_) return std::nullopt;
  return top_of(c, ChainSide::ASide);
}

std::optional<std::size_t> ChainStructure::position(Vertex v, ChainSide side) const {
  for (const Chain& chain : chains_[g_->color(v)]) {
    if (chain.side != side) continue;
    for (std::size_t i = 0; i < chain.groups.size(); ++i)
      if (std::find(chain.groups[i].begin(), chain.groups[i].end(), v) != chain.groups[i].end()) return i;
  }
  return std::nullopt;
}

std::optional<Vertex> ChainStructure::best_neighbour(Vertex x, Color c, ChainSide side) const {
  for (const Chain& chain : chains_[c]) {
    if (chain.side != side) continue;
    for (auto grp = chain.groups.rbegin(); grp != chain.groups.rend(); ++grp)
      for (Vertex v : *grp)
        if (g_->has_edge(x, v)) return v;
  }
  return std::nullopt;
}

std::optional<Vertex> ChainStructure::max_adjacent(Vertex x, Color c) const {
  return best_neighbour(x, c, two_sided_ ? ChainSide::OmegaSide : ChainSide::Single);
}

std::optional<Vertex> ChainStructure::min_adjacent(Vertex x, Color c) const {
  if (!two_sided_) return std::nullopt;
  return best_neighbour(x, c, ChainSide::ASide);
}

VertexSet ChainStructure::predecessors(Vertex v) const {
  VertexSet out(g_->n());
  for (const Chain& chain : chains_[g_->color(v)]) {
    for (std::size_t i = 0; i < chain.groups.size(); ++i) {
      if (std::find(chain.groups[i].begin(), chain.groups[i].end(), v) == chain.groups[i].end()) continue;
      for (std::size_t j = 0; j < i; ++j)
        for (Vertex u : chain.groups[j]) out.insert(u);
    }
  }
  return out;
}

namespace {

struct Precedence {
  const ColoredGraph& g;
  const SeparatorTable& sep;
  // conquering x conquers y
  bool operator()(Vertex y, Vertex x) const { return x == y || sep.separates(y, x); }
};

std::optional<std::pair<Vertex, Vertex>> unordered_pair(const std::vector<Vertex>& members, const Precedence& prec) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!prec(members[i], members[j]) && !prec(members[j], members[i])) return std::pair{members[i], members[j]};
  return std::nullopt;
}

Chain make_chain(std::vector<Vertex> members, ChainSide side, const Precedence& prec) {
  Chain chain;
  chain.side = side;
  if (auto bad = unordered_pair(members, prec))
    throw StructureViolation("conquest order is not total: vertices " + std::to_string(bad->first) + " and " +
                             std::to_string(bad->second) + " (colour " +
                             std::to_string(prec.g.color(bad->first)) + ") are unordered");
  std::vector<std::pair<std::size_t, Vertex>> keyed;
  for (Vertex v : members) {
    std::size_t below = 0;
    for (Vertex u : members)
      if (u != v && prec(u, v)) ++below;
    keyed.emplace_back(below, v);
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [below, v] : keyed) {
    if (!chain.groups.empty()) {
      const Vertex last = chain.groups.back().front();
      if (prec(last, v) && prec(v, last)) {
        chain.groups.back().push_back(v);
        continue;
      }
    }
    chain.groups.push_back({v});
  }
  return chain;
}

}  // namespace

ChainStructure build_chains(const ColoredGraph& g, Vertex source, const DecompContext* ctx) {
  const SeparatorTable sep(g, source);
  const Precedence prec{g, sep};
  std::vector<std::vector<Chain>> chains(g.k());

  if (!ctx || !ctx->interval.contains(source)) {
    for (Color c = 0; c < g.k(); ++c) chains[c].push_back(make_chain(g.color_class(c).to_vector(), ChainSide::Single, prec));
    return ChainStructure(g, source, false, std::move(chains));
  }

  VertexSet left(g.n()), right(g.n()), rest(g.n());
  for (const VertexSet& block : blocks_at(g, source)) {
    const bool a = block.intersects(ctx->a_side);
    const bool w = block.intersects(ctx->omega_side);
    if (a) left |= block;
    if (w) right |= block;
    if (!a && !w) rest |= block;
  }
  const VertexSet bottom = closed_neighborhood(g, source);

  for (Color c = 0; c < g.k(); ++c) {
    const VertexSet& cls = g.color_class(c);
    std::vector<Vertex> a_members = (cls & (left | bottom)).to_vector();
    std::vector<Vertex> w_members = (cls & (right | bottom)).to_vector();
    const std::vector<Vertex> stray = (cls & rest).to_vector();
    if (!stray.empty()) {
      std::vector<Vertex> with_a = a_members, with_w = w_members;
      with_a.insert(with_a.end(), stray.begin(), stray.end());
      with_w.insert(with_w.end(), stray.begin(), stray.end());
      if (!unordered_pair(with_a, prec)) {
        a_members = std::move(with_a);
      } else {
        w_members = std::move(with_w);
      }
    }
    std::sort(a_members.begin(), a_members.end());
    std::sort(w_members.begin(), w_members.end());
    if (!a_members.empty()) chains[c].push_back(make_chain(std::move(a_members), ChainSide::ASide, prec));
    if (!w_members.empty()) chains[c].push_back(make_chain(std::move(w_members), ChainSide::OmegaSide, prec));
  }
  return ChainStructure(g, source, true, std::move(chains));
}

}  // namespace flood
