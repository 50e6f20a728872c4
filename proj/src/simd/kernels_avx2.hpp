#pragma once

// AVX2 kernels. Include only from translation units compiled with -mavx2.

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "simd/kernels_scalar.hpp"

namespace csg::simd::avx2 {

inline void andnot(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_andnot_si256(m, s));
  }
  for (; w < words; ++w) dst[w] = src[w] & ~mask[w];
}

inline bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    if (!_mm256_testz_si256(x, y)) return true;
  }
  for (; w < words; ++w)
    if ((a[w] & b[w]) != 0) return true;
  return false;
}

inline bool any(const std::uint64_t* a, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    if (!_mm256_testz_si256(x, x)) return true;
  }
  for (; w < words; ++w)
    if (a[w] != 0) return true;
  return false;
}

inline std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  // Nibble lookup popcount (Mula), horizontal sum via SAD.
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i lo = _mm256_shuffle_epi8(lookup, _mm256_and_si256(v, low));
    const __m256i hi = _mm256_shuffle_epi8(lookup, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t parts[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(parts), acc);
  std::size_t total = static_cast<std::size_t>(parts[0] + parts[1] + parts[2] + parts[3]);
  for (; w < words; ++w) total += static_cast<std::size_t>(std::popcount(a[w]));
  return total;
}

inline bool dominates(const std::uint16_t* p, const std::uint16_t* q, std::size_t lanes) {
  for (std::size_t l = 0; l < lanes; l += 16) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + l));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q + l));
    // x >= y lane-wise iff max(x, y) == x
    const __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(x, y), x);
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  return true;
}

inline bool any_dominates(const std::uint16_t* rows, std::size_t count, std::size_t stride, const std::uint16_t* q) {
  if (stride == 16) {
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q));
    for (std::size_t i = 0; i < count; ++i) {
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i * 16));
      const __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(x, y), x);
      if (_mm256_movemask_epi8(eq) == -1) return true;
    }
    return false;
  }
  for (std::size_t i = 0; i < count; ++i)
    if (dominates(rows + i * stride, q, stride)) return true;
  return false;
}

struct Ops {
  static void andnot(std::uint64_t* d, const std::uint64_t* s, const std::uint64_t* m, std::size_t w) { avx2::andnot(d, s, m, w); }
  static bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t w) { return avx2::intersects(a, b, w); }
  static bool any(const std::uint64_t* a, std::size_t w) { return avx2::any(a, w); }
  static bool any_dominates(const std::uint16_t* r, std::size_t c, std::size_t s, const std::uint16_t* q) {
    return avx2::any_dominates(r, c, s, q);
  }
};

}  // namespace csg::simd::avx2
