#pragma once

// Scalar reference kernels. Header-only so the search engine can inline them.

#include <bit>
#include <cstddef>
#include <cstdint>

namespace csg::simd::scalar {

inline void andnot(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) dst[w] = src[w] & ~mask[w];
}

inline bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if ((a[w] & b[w]) != 0) return true;
  return false;
}

inline bool any(const std::uint64_t* a, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (a[w] != 0) return true;
  return false;
}

inline std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(a[w]));
  return total;
}

inline bool dominates(const std::uint16_t* p, const std::uint16_t* q, std::size_t lanes) {
  for (std::size_t l = 0; l < lanes; ++l)
    if (p[l] < q[l]) return false;
  return true;
}

inline bool any_dominates(const std::uint16_t* rows, std::size_t count, std::size_t stride, const std::uint16_t* q) {
  for (std::size_t i = 0; i < count; ++i)
    if (dominates(rows + i * stride, q, stride)) return true;
  return false;
}

struct Ops {
  static void andnot(std::uint64_t* d, const std::uint64_t* s, const std::uint64_t* m, std::size_t w) { scalar::andnot(d, s, m, w); }
  static bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t w) { return scalar::intersects(a, b, w); }
  static bool any(const std::uint64_t* a, std::size_t w) { return scalar::any(a, w); }
  static bool any_dominates(const std::uint16_t* r, std::size_t c, std::size_t s, const std::uint16_t* q) {
    return scalar::any_dominates(r, c, s, q);
  }
};

}  // namespace csg::simd::scalar
