#include "flood/vertex_set.hpp"

#include <cassert>

namespace flood {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) {
    assert(v < universe);
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (universe % 64) s.words_.back() = (Word{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_range(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::size() const { return simd::kernels().popcount(words_); }

bool VertexSet::empty() const {
  for (Word w : words_)
    if (w) return false;
  return true;
}

std::optional<Vertex> VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  return simd::kernels().is_subset(words_, other.words_);
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  return simd::kernels().intersects(words_, other.words_);
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  simd::kernels().bit_or(words_, words_, other.words_);
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  simd::kernels().bit_and(words_, words_, other.words_);
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  simd::kernels().bit_andnot(words_, words_, other.words_);
  return *this;
}

std::size_t VertexSet::hash() const {
  // splitmix-style fold
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace flood
