#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "flood/simd/bitset_kernels.hpp"

namespace flood {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

// Dense bitset over the vertex ids 0..universe-1. Binary operators require
// both operands to share the same universe.
class VertexSet {
 public:
  using Word = simd::Word;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const Word* words, std::size_t nwords, std::size_t index)
        : words_(words), nwords_(nwords), index_(index) {
      load();
    }

    Vertex operator*() const { return static_cast<Vertex>(index_ * 64 + std::countr_zero(current_)); }
    iterator& operator++() {
      current_ &= current_ - 1;
      if (!current_) {
        ++index_;
        load();
      }
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return index_ == o.index_ && current_ == o.current_; }

   private:
    void load() {
      while (index_ < nwords_ && words_[index_] == 0) ++index_;
      current_ = index_ < nwords_ ? words_[index_] : 0;
    }

    const Word* words_ = nullptr;
    std::size_t nwords_ = 0;
    std::size_t index_ = 0;
    Word current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_range(std::size_t universe, std::span<const Vertex> members);
  static constexpr std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

  std::size_t universe() const { return universe_; }

  void insert(Vertex v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  bool contains(Vertex v) const { return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U); }
  void clear();

  std::size_t size() const;
  bool empty() const;
  std::optional<Vertex> first() const;
  std::vector<Vertex> to_vector() const;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& other) const = default;

  iterator begin() const { return iterator(words_.data(), words_.size(), 0); }
  iterator end() const { return iterator(words_.data(), words_.size(), words_.size()); }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace flood
