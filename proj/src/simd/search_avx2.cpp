// Compiled with -mavx2 when CSG_HAVE_AVX2 is defined; only reached after a
// runtime CPU check.

#include "simd/search.hpp"

#if defined(CSG_HAVE_AVX2)
#include "simd/kernels_avx2.hpp"
#include "simd/search_impl.hpp"
#endif

namespace csg::detail {

#if defined(CSG_HAVE_AVX2)

namespace {
using Avx2Search = BitsetSearch<simd::avx2::Ops>;
}  // namespace

std::uint64_t search_shard_avx2(const ShardTask& task, const SearchHooks& hooks) { return Avx2Search(task, hooks).run(); }
bool search_avx2_compiled() { return true; }

#else

std::uint64_t search_shard_avx2(const ShardTask& task, const SearchHooks& hooks) { return search_shard_scalar(task, hooks); }
bool search_avx2_compiled() { return false; }

#endif

}  // namespace csg::detail
