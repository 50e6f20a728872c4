#include <cstdlib>
#include <cstring>

#include "csg/simd/kernels.hpp"
#include "simd/kernels_scalar.hpp"

namespace csg::simd {

#if defined(CSG_HAVE_AVX2)
// Defined in kernels_avx2.cpp.
extern const KernelTable kAvx2Table;
#endif

namespace {

const KernelTable kScalarTable{Level::Scalar,    scalar::andnot,    scalar::intersects,   scalar::any,
                               scalar::popcount, scalar::dominates, scalar::any_dominates};

bool cpu_has_avx2() {
#if defined(CSG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Level detect() {
  if (const char* env = std::getenv("CSG_SIMD"); env != nullptr && std::strcmp(env, "scalar") == 0) return Level::Scalar;
  return cpu_has_avx2() ? Level::Avx2 : Level::Scalar;
}

}  // namespace

const char* level_name(Level level) { return level == Level::Avx2 ? "avx2" : "scalar"; }

const KernelTable& scalar_kernels() { return kScalarTable; }

const KernelTable* avx2_kernels() {
#if defined(CSG_HAVE_AVX2)
  if (cpu_has_avx2()) return &kAvx2Table;
#endif
  return nullptr;
}

Level active_level() {
  static const Level level = detect();
  return level;
}

const KernelTable& active_kernels() {
  if (active_level() == Level::Avx2) {
    if (const KernelTable* t = avx2_kernels()) return *t;
  }
  return kScalarTable;
}

}  // namespace csg::simd
