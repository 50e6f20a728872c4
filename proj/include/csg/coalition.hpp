#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace csg {

inline constexpr int kMaxPlayers = 64;

/// A set of players. Player i (1-based) is bit i-1 of the mask.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}
  Coalition(std::initializer_list<int> players);

  static Coalition from_players(const std::vector<int>& players);
  /// {1..n}
  static constexpr Coalition grand(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr Coalition singleton(int player) {
    return Coalition(std::uint64_t{1} << (player - 1));
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const { return (mask_ >> (player - 1)) & 1U; }
  constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }
  /// Highest player index present, 0 when empty.
  constexpr int max_player() const { return 64 - std::countl_zero(mask_); }

  constexpr Coalition with(int player) const { return Coalition(mask_ | singleton(player).mask_); }
  constexpr Coalition without(int player) const { return Coalition(mask_ & ~singleton(player).mask_); }
  constexpr Coalition operator|(Coalition o) const { return Coalition(mask_ | o.mask_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(mask_ & o.mask_); }

  /// Ascending 1-based member list.
  std::vector<int> players() const;

  constexpr bool operator==(const Coalition&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Lexicographic order on ascending member lists ({1,2} < {1,2,3} < {1,3} < {2}).
bool lex_less(Coalition a, Coalition b);

}  // namespace csg
