// Compiled with -mavx2 -mpopcnt; only reached through the dispatcher after a
// CPUID check.

#include <immintrin.h>

#include <bit>

#include "flood/simd/bitset_kernels.hpp"

namespace flood::simd {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void or_avx2(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(out.data() + i, _mm256_or_si256(load(a.data() + i), load(b.data() + i)));
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

void and_avx2(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(out.data() + i, _mm256_and_si256(load(a.data() + i), load(b.data() + i)));
  for (; i < n; ++i) out[i] = a[i] & b[i];
}

void andnot_avx2(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; i + 4 <= n; i += 4)
    store(out.data() + i, _mm256_andnot_si256(load(b.data() + i), load(a.data() + i)));
  for (; i < n; ++i) out[i] = a[i] & ~b[i];
}

// Nibble lookup popcount (Mula et al.), accumulated with SAD against zero.
std::size_t popcount_avx2(std::span<const Word> a) {
  const std::size_t n = a.size();
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(a.data() + i);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool subset_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i diff = _mm256_andnot_si256(load(b.data() + i), load(a.data() + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    if (!_mm256_testz_si256(load(a.data() + i), load(b.data() + i))) return true;
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

void or_rows_avx2(std::span<Word> out, std::span<const Word> rows, std::span<const Word> members) {
  const std::size_t width = out.size();
  for (auto& w : out) w = 0;
  for (std::size_t wi = 0; wi < members.size(); ++wi) {
    Word m = members[wi];
    while (m) {
      const std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(m));
      m &= m - 1;
      const Word* row = rows.data() + v * width;
      std::size_t i = 0;
      for (; i + 4 <= width; i += 4) store(out.data() + i, _mm256_or_si256(load(out.data() + i), load(row + i)));
      for (; i < width; ++i) out[i] |= row[i];
    }
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{or_avx2,     and_avx2,        andnot_avx2, popcount_avx2,
                                 subset_avx2, intersects_avx2, or_rows_avx2};
  return table;
}

}  // namespace flood::simd
