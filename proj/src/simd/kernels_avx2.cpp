#if defined(CSG_HAVE_AVX2)

#include "csg/simd/kernels.hpp"
#include "simd/kernels_avx2.hpp"

namespace csg::simd {

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{Level::Avx2,    avx2::andnot,    avx2::intersects,   avx2::any,
                             avx2::popcount, avx2::dominates, avx2::any_dominates};

}  // namespace csg::simd

#endif
