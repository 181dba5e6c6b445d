#pragma once

// Word-level bitset kernels behind VertexSet and the graph primitives.
//
// Every kernel has a portable scalar reference implementation and, on x86-64
// builds with FLOOD_ENABLE_AVX2, an AVX2 variant. The active backend is picked
// once at startup from CPUID and can be overridden with the FLOOD_SIMD
// environment variable ("scalar" or "avx2") or with set_backend().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace flood::simd {

using Word = std::uint64_t;

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  // out[i] = a[i] | b[i]
  void (*bit_or)(std::span<Word> out, std::span<const Word> a, std::span<const Word> b);
  // out[i] = a[i] & b[i]
  void (*bit_and)(std::span<Word> out, std::span<const Word> a, std::span<const Word> b);
  // out[i] = a[i] & ~b[i]
  void (*bit_andnot)(std::span<Word> out, std::span<const Word> a, std::span<const Word> b);
  std::size_t (*popcount)(std::span<const Word> a);
  // true iff (a & ~b) == 0
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
  bool (*intersects)(std::span<const Word> a, std::span<const Word> b);
  // out = OR of rows[v] for every bit v set in members; rows is row-major with
  // out.size() words per row. out is overwritten.
  void (*or_rows)(std::span<Word> out, std::span<const Word> rows, std::span<const Word> members);
};

const KernelTable& scalar_kernels();
#if defined(FLOOD_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

bool cpu_has_avx2();
bool backend_available(Backend b);

// Throws std::invalid_argument if the backend is not available.
void set_backend(Backend b);
Backend active_backend();
std::string_view backend_name(Backend b);

const KernelTable& kernels();

}  // namespace flood::simd
