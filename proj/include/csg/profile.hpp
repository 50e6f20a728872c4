#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "csg/coalition.hpp"
#include "csg/simple_game.hpp"

namespace csg {

/// Per-class member counts of a coalition, with the matching prefix sums.
/// Both vectors are built together and never mutated independently.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<int> counts);

  const std::vector<int>& counts() const { return counts_; }
  const std::vector<int>& prefix() const { return prefix_; }
  int size() const { return static_cast<int>(counts_.size()); }
  int operator[](int k) const { return counts_[static_cast<std::size_t>(k)]; }
  int total() const { return prefix_.empty() ? 0 : prefix_.back(); }

  bool operator==(const Profile& o) const { return counts_ == o.counts_; }
  /// Plain lexicographic order on the counts.
  std::strong_ordering operator<=>(const Profile& o) const { return counts_ <=> o.counts_; }

 private:
  std::vector<int> counts_;
  std::vector<int> prefix_;
};

enum class DeltaOrder { Dominates, DominatedBy, Equal, Incomparable };

/// Compare by prefix sums. Throws InputError on a length mismatch.
DeltaOrder delta_compare(const Profile& p, const Profile& q);

/// p dominates-or-equals q in the delta order.
bool delta_geq(const Profile& p, const Profile& q);

/// The box I_{n_1} x ... x I_{n_t}.
class ProfileBox {
 public:
  explicit ProfileBox(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int t() const { return static_cast<int>(sizes_.size()); }
  int n() const;
  /// prod (n_i + 1), saturating at UINT64_MAX.
  std::uint64_t volume() const;
  bool contains(const Profile& p) const;
  Profile top() const { return Profile(sizes_); }

  /// All profiles, in decreasing lexicographic order of counts.
  std::vector<Profile> profiles() const;

  /// Advance `counts` to the next lexicographically smaller profile of the
  /// box. Returns false once `counts` was the zero profile.
  bool step_down(std::vector<int>& counts) const;

 private:
  std::vector<int> sizes_;
};

/// counts[k] = |s ∩ class k|.
Profile profile_of(const TypePartition& partition, Coalition s);

}  // namespace csg
