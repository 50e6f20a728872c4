#pragma once

#include <bit>

#include "simd/search.hpp"

namespace csg::detail {

template <class Ops>
class BitsetSearch {
 public:
  BitsetSearch(const ShardTask& task, const SearchHooks& hooks)
      : box_(*task.box), task_(task), hooks_(hooks), words_(box_.words) {}

  std::uint64_t run() {
    const int i = task_.first;
    const std::size_t w0 = static_cast<std::size_t>(i) / 64;
    if (((task_.allowed[w0] >> (i % 64)) & 1U) == 0) return 0;
    step(0, task_.allowed, i, 0);
    return found_;
  }

 private:
  // Chooses candidate i as row `depth` (0-based) on top of the antichain
  // whose remaining candidates are `src`, then explores below it.
  void step(int depth, const std::uint64_t* src, int i, std::uint64_t mask) {
    const std::uint64_t cm = mask | box_.cond4[i];
    task_.chosen[depth] = i;
    const int rows = depth + 1;
    if (task_.row_limit != 0 && rows == task_.row_limit) {
      if (cm == box_.full_mask) accept(rows);
      return;
    }

    std::uint64_t* child = task_.arena + static_cast<std::size_t>(rows) * words_;
    const std::size_t w0 = static_cast<std::size_t>(i) / 64;
    for (std::size_t w = 0; w < w0; ++w) child[w] = 0;
    Ops::andnot(child + w0, src + w0, box_.down + static_cast<std::size_t>(i) * words_ + w0, words_ - w0);
    // Keep only candidates after i.
    const unsigned bit = static_cast<unsigned>(i % 64);
    child[w0] &= bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));

    // Every condition-4 index still missing needs a witness among the
    // remaining candidates, or nothing below (including here) is accepted.
    for (std::uint64_t missing = box_.full_mask & ~cm; missing != 0; missing &= missing - 1) {
      const auto k = static_cast<std::size_t>(std::countr_zero(missing));
      if (!Ops::intersects(child + w0, box_.cond_sets + k * words_ + w0, words_ - w0)) return;
    }
    if (cm == box_.full_mask && task_.row_limit == 0) accept(rows);
    if (!Ops::any(child + w0, words_ - w0)) return;

    for (std::size_t w = w0; w < words_; ++w) {
      for (std::uint64_t bits = child[w]; bits != 0; bits &= bits - 1) {
        const int j = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        step(rows, child, j, cm);
      }
    }
  }

  void accept(int rows) {
    if (hooks_.visit == nullptr || hooks_.visit(hooks_.ctx, task_.chosen, rows)) ++found_;
  }

  const BoxView& box_;
  const ShardTask& task_;
  const SearchHooks& hooks_;
  const std::size_t words_;
  std::uint64_t found_ = 0;
};

}  // namespace csg::detail
