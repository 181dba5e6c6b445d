#include "flood/simd/bitset_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace flood::simd {
namespace {

Backend detect_default() {
  if (const char* env = std::getenv("FLOOD_SIMD")) {
    const std::string_view want{env};
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
  }
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& active() {
  static std::atomic<Backend> backend{detect_default()};
  return backend;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return has;
#else
  return false;
#endif
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(FLOOD_HAVE_AVX2)
      return cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

void set_backend(Backend b) {
  if (!backend_available(b))
    throw std::invalid_argument("SIMD backend not available: " + std::string(backend_name(b)));
  active().store(b);
}

Backend active_backend() { return active().load(); }

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& kernels() {
#if defined(FLOOD_HAVE_AVX2)
  if (active().load(std::memory_order_relaxed) == Backend::Avx2) return avx2_kernels();
#endif
  return scalar_kernels();
}

}  // namespace flood::simd
