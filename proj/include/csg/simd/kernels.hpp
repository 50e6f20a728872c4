#pragma once

// Data-parallel kernels used by the enumeration engine: word-wise bitset
// algebra over candidate sets and lane-wise prefix-sum dominance.
//
// Each kernel has a scalar reference and, on x86-64, an AVX2 variant. The
// variant in use is chosen once at runtime from CPUID; the environment
// variable CSG_SIMD=scalar forces the reference path.

#include <cstddef>
#include <cstdint>

namespace csg::simd {

enum class Level { Scalar, Avx2 };

const char* level_name(Level level);

/// Prefix-sum vectors are stored as uint16 lanes padded with zeros to a
/// multiple of this many lanes.
inline constexpr std::size_t kLaneBlock = 16;

inline constexpr std::size_t padded_lanes(std::size_t t) { return (t + kLaneBlock - 1) / kLaneBlock * kLaneBlock; }

struct KernelTable {
  Level level;
  /// dst[w] = src[w] & ~mask[w]
  void (*andnot)(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask, std::size_t words);
  /// (a & b) != 0
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  bool (*any)(const std::uint64_t* a, std::size_t words);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
  /// p[l] >= q[l] for all lanes; lanes is a multiple of kLaneBlock.
  bool (*dominates)(const std::uint16_t* p, const std::uint16_t* q, std::size_t lanes);
  /// Some row among `count` rows spaced `stride` lanes apart dominates q.
  bool (*any_dominates)(const std::uint16_t* rows, std::size_t count, std::size_t stride, const std::uint16_t* q);
};

const KernelTable& scalar_kernels();
/// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Best supported level, honouring CSG_SIMD.
Level active_level();
const KernelTable& active_kernels();

}  // namespace csg::simd
