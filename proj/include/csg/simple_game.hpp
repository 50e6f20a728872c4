#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/bigint.hpp"
#include "csg/coalition.hpp"

namespace csg {

/// A simple game held extensionally by its minimal winning coalitions.
///
/// Construction always goes through normalize_min_winning (or a routine that
/// produces an antichain directly), so the coalition list is an antichain
/// sorted by lex_less and never contains the empty set.
class SimpleGame {
 public:
  SimpleGame(int n, std::vector<Coalition> min_winning);

  int n() const { return n_; }
  const std::vector<Coalition>& min_winning() const { return min_winning_; }
  Coalition grand() const { return Coalition::grand(n_); }

  bool operator==(const SimpleGame&) const = default;

 private:
  int n_;
  std::vector<Coalition> min_winning_;
};

enum class Desirability { MoreDesirable, EquallyDesirable, LessDesirable, Incomparable };

std::string to_string(Desirability d);

/// Ordered classes N_1 > ... > N_t of a complete game.
struct TypePartition {
  std::vector<std::vector<int>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  std::vector<int> sizes() const;
  /// 0-based class index of a 1-based player.
  int class_of(int player) const;
  std::vector<Coalition> class_masks() const;

  bool operator==(const TypePartition&) const = default;
};

/// [q; w_1..w_n] with exact rational entries.
struct WeightedRepresentation {
  BigRational quota;
  std::vector<BigRational> weights;
};

/// True iff some minimal winning coalition is contained in s.
bool is_winning(const SimpleGame& game, Coalition s);

/// Inclusion-minimal elements of raw. Throws ValidationError on empty input
/// or an empty coalition, InputError on players outside 1..n.
SimpleGame normalize_min_winning(int n, const std::vector<Coalition>& raw);

/// Exact desirability relation between players i and j by direct iteration
/// over the 2^(n-2) coalitions avoiding both. Capped at n <= 25.
Desirability desirability(const SimpleGame& game, int i, int j);

/// The ordered type partition, or nullopt when some pair is incomparable.
std::optional<TypePartition> type_partition(const SimpleGame& game);

SimpleGame from_weighted(const WeightedRepresentation& rep);

/// Winning indicator for all 2^n coalitions, indexed by mask. n <= 25.
class WinTable {
 public:
  explicit WinTable(const SimpleGame& game);
  bool winning(Coalition s) const { return bits_[s.mask()] != 0; }
  int n() const { return n_; }

 private:
  int n_;
  std::vector<unsigned char> bits_;
};

inline constexpr int kMaxTabulatedPlayers = 25;

}  // namespace csg
