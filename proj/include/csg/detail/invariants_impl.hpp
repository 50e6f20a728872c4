#pragma once

#include <cstddef>

namespace csg {

namespace detail {

// Every profile strictly below p in the delta order is dominated by one of
// p - e_j + e_l (j < l) or p - e_j, so p is delta-minimal among winning
// profiles iff all of these that lie in the box are losing.
template <typename WinFn>
bool has_winning_lower_neighbour(const ProfileBox& box, std::vector<int>& counts, WinFn& winning) {
  const int t = box.t();
  for (int j = 0; j < t; ++j) {
    auto& cj = counts[static_cast<std::size_t>(j)];
    if (cj == 0) continue;
    --cj;
    if (winning(Profile(counts))) {
      ++cj;
      return true;
    }
    for (int l = j + 1; l < t; ++l) {
      auto& cl = counts[static_cast<std::size_t>(l)];
      if (cl == box.sizes()[static_cast<std::size_t>(l)]) continue;
      ++cl;
      const bool w = winning(Profile(counts));
      --cl;
      if (w) {
        ++cj;
        return true;
      }
    }
    ++cj;
  }
  return false;
}

}  // namespace detail

template <typename WinFn>
Matrix delta_minimal_rows(const ProfileBox& box, WinFn&& winning) {
  Matrix rows;
  std::vector<int> counts = box.sizes();
  do {
    if (winning(Profile(counts)) && !detail::has_winning_lower_neighbour(box, counts, winning)) rows.push_back(counts);
  } while (box.step_down(counts));
  return rows;
}

}  // namespace csg
