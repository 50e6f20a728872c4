#include "simd/kernels_scalar.hpp"
#include "simd/search_impl.hpp"

namespace csg::detail {

std::uint64_t search_shard_scalar(const ShardTask& task, const SearchHooks& hooks) {
  return BitsetSearch<simd::scalar::Ops>(task, hooks).run();
}

}  // namespace csg::detail
