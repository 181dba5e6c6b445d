#include "flood/simd/bitset_kernels.hpp"

#include <bit>

namespace flood::simd {
namespace {

void or_scalar(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] | b[i];
}

void and_scalar(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
}

void andnot_scalar(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & ~b[i];
}

std::size_t popcount_scalar(std::span<const Word> a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool subset_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

void or_rows_scalar(std::span<Word> out, std::span<const Word> rows, std::span<const Word> members) {
  const std::size_t width = out.size();
  for (auto& w : out) w = 0;
  for (std::size_t wi = 0; wi < members.size(); ++wi) {
    Word m = members[wi];
    while (m) {
      const std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(m));
      m &= m - 1;
      const Word* row = rows.data() + v * width;
      for (std::size_t i = 0; i < width; ++i) out[i] |= row[i];
    }
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{or_scalar,     and_scalar,        andnot_scalar, popcount_scalar,
                                 subset_scalar, intersects_scalar, or_rows_scalar};
  return table;
}

}  // namespace flood::simd
