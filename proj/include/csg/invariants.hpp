#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csg/profile.hpp"
#include "csg/simple_game.hpp"

namespace csg {

using Matrix = std::vector<std::vector<int>>;

/// Characteristic invariants (n̄, M) of a complete simple game: class sizes
/// and the delta-minimal winning profiles as rows, in strictly decreasing
/// lexicographic order. Only validate() and the library's own constructions
/// produce values of this type.
class Invariants {
 public:
  const std::vector<int>& n_bar() const { return n_bar_; }
  const Matrix& rows() const { return rows_; }
  int t() const { return static_cast<int>(n_bar_.size()); }
  int r() const { return static_cast<int>(rows_.size()); }
  int n() const;
  ProfileBox box() const { return ProfileBox(n_bar_); }
  std::vector<Profile> row_profiles() const;

  bool operator==(const Invariants&) const = default;
  auto operator<=>(const Invariants&) const = default;

  /// Builds without checking; callers guarantee validity. Rows are sorted.
  static Invariants trusted(std::vector<int> n_bar, Matrix rows);

 private:
  std::vector<int> n_bar_;
  Matrix rows_;
};

/// One violated condition, e.g. {"condition_3", "rows 1 and 2 are delta-comparable"}.
struct Violation {
  std::string condition;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

/// Either the typed invariants or every violated condition.
using ValidationResult = std::variant<Invariants, std::vector<Violation>>;

/// Checks conditions 1-4, m_11 > 0 and the canonical row order. Throws
/// InputError for an empty n̄, no rows, or a ragged matrix.
ValidationResult validate(const std::vector<int>& n_bar, const Matrix& rows);

/// validate() that throws ValidationError listing the violations.
Invariants make_invariants(const std::vector<int>& n_bar, const Matrix& rows);

/// Same as make_invariants after sorting rows into canonical order.
Invariants make_invariants_unsorted(const std::vector<int>& n_bar, Matrix rows);

/// Profile-level membership test; no materialization.
bool is_winning_profile(const Invariants& inv, const Profile& p);

inline constexpr std::uint64_t kMaxMaterializedProfiles = 1'000'000;

/// Delta-upward closure of the rows, in decreasing lex order. Throws
/// CapacityError above kMaxMaterializedProfiles box entries.
std::vector<Profile> winning_profiles(const Invariants& inv);

/// The extensional game with class k holding consecutive player indices.
SimpleGame expand(const Invariants& inv);

/// Invariants of a game, or nullopt when the game is not complete.
std::optional<Invariants> extract(const SimpleGame& game);

/// Rows of the delta-minimal elements of a winning-profile predicate over a box.
template <typename WinFn>
Matrix delta_minimal_rows(const ProfileBox& box, WinFn&& winning);

/// Players holding each class under the consecutive labeling used by expand.
TypePartition consecutive_partition(const std::vector<int>& n_bar);

}  // namespace csg

#include "csg/detail/invariants_impl.hpp"
