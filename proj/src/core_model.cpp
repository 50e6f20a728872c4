#include <algorithm>
#include <numeric>

#include "csg/error.hpp"
#include "csg/simple_game.hpp"

namespace csg {

Coalition::Coalition(std::initializer_list<int> players) {
  for (int p : players) mask_ |= singleton(p).mask_;
}

Coalition Coalition::from_players(const std::vector<int>& players) {
  Coalition c;
  for (int p : players) {
    if (p < 1 || p > kMaxPlayers) throw InputError("player index " + std::to_string(p) + " out of range");
    c = c.with(p);
  }
  return c;
}

std::vector<int> Coalition::players() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

bool lex_less(Coalition a, Coalition b) {
  // Compare member lists element by element; a proper prefix sorts first.
  std::uint64_t x = a.mask();
  std::uint64_t y = b.mask();
  while (x != 0 && y != 0) {
    int px = std::countr_zero(x);
    int py = std::countr_zero(y);
    if (px != py) return px < py;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

SimpleGame::SimpleGame(int n, std::vector<Coalition> min_winning)
    : n_(n), min_winning_(std::move(min_winning)) {
  if (n_ < 1 || n_ > kMaxPlayers) throw InputError("player count must be in 1..64");
  if (min_winning_.empty()) throw ValidationError("a simple game needs at least one minimal winning coalition");
  std::sort(min_winning_.begin(), min_winning_.end(), lex_less);
}

std::string to_string(Desirability d) {
  switch (d) {
    case Desirability::MoreDesirable: return "more_desirable";
    case Desirability::EquallyDesirable: return "equally_desirable";
    case Desirability::LessDesirable: return "less_desirable";
    case Desirability::Incomparable: return "incomparable";
  }
  return "?";
}

std::vector<int> TypePartition::sizes() const {
  std::vector<int> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(static_cast<int>(c.size()));
  return out;
}

int TypePartition::class_of(int player) const {
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (std::find(classes[k].begin(), classes[k].end(), player) != classes[k].end()) return static_cast<int>(k);
  }
  throw InputError("player " + std::to_string(player) + " not in partition");
}

std::vector<Coalition> TypePartition::class_masks() const {
  std::vector<Coalition> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(Coalition::from_players(c));
  return out;
}

bool is_winning(const SimpleGame& game, Coalition s) {
  if (!s.subset_of(game.grand())) throw InputError("coalition has a member outside 1.." + std::to_string(game.n()));
  return std::any_of(game.min_winning().begin(), game.min_winning().end(),
                     [s](Coalition m) { return m.subset_of(s); });
}

SimpleGame normalize_min_winning(int n, const std::vector<Coalition>& raw) {
  if (n < 1 || n > kMaxPlayers) throw InputError("player count must be in 1..64");
  if (raw.empty()) throw ValidationError("no winning coalitions given");
  const Coalition grand = Coalition::grand(n);
  std::vector<Coalition> sorted = raw;
  for (Coalition c : sorted) {
    if (c.empty()) throw ValidationError("the empty coalition cannot be winning");
    if (!c.subset_of(grand)) throw InputError("coalition has a member outside 1.." + std::to_string(n));
  }
  // Smaller coalitions first, so a kept coalition is never a superset of a
  // later one.
  std::sort(sorted.begin(), sorted.end(), [](Coalition a, Coalition b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Coalition> kept;
  for (Coalition c : sorted) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [c](Coalition k) { return k.subset_of(c); });
    if (!dominated) kept.push_back(c);
  }
  return SimpleGame(n, std::move(kept));
}

namespace {

// Calls fn(S) for every subset S of `pool`, including the empty set.
template <typename Fn>
bool all_submasks(std::uint64_t pool, Fn&& fn) {
  std::uint64_t s = pool;
  while (true) {
    if (!fn(Coalition(s))) return false;
    if (s == 0) return true;
    s = (s - 1) & pool;
  }
}

template <typename WinFn>
Desirability compare_players(int n, int i, int j, WinFn&& win) {
  const std::uint64_t pool = Coalition::grand(n).without(i).without(j).mask();
  bool i_ge_j = true;
  bool j_ge_i = true;
  all_submasks(pool, [&](Coalition s) {
    bool wi = win(s.with(i));
    bool wj = win(s.with(j));
    if (wj && !wi) i_ge_j = false;
    if (wi && !wj) j_ge_i = false;
    return i_ge_j || j_ge_i;
  });
  if (i_ge_j && j_ge_i) return Desirability::EquallyDesirable;
  if (i_ge_j) return Desirability::MoreDesirable;
  if (j_ge_i) return Desirability::LessDesirable;
  return Desirability::Incomparable;
}

void check_player(const SimpleGame& game, int p) {
  if (p < 1 || p > game.n()) throw InputError("player " + std::to_string(p) + " out of range 1.." + std::to_string(game.n()));
}

}  // namespace

Desirability desirability(const SimpleGame& game, int i, int j) {
  check_player(game, i);
  check_player(game, j);
  if (i == j) throw InputError("desirability needs two distinct players");
  if (game.n() > kMaxTabulatedPlayers) throw CapacityError("desirability is limited to n <= 25");
  return compare_players(game.n(), i, j, [&](Coalition s) { return is_winning(game, s); });
}

WinTable::WinTable(const SimpleGame& game) : n_(game.n()) {
  if (n_ > kMaxTabulatedPlayers) throw CapacityError("coalition tables are limited to n <= 25");
  const std::size_t size = std::size_t{1} << n_;
  bits_.assign(size, 0);
  for (Coalition m : game.min_winning()) bits_[m.mask()] = 1;
  // Upward closure, one player at a time.
  for (int b = 0; b < n_; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < size; ++s) {
      if ((s & bit) == 0 && bits_[s] != 0) bits_[s | bit] = 1;
    }
  }
}

std::optional<TypePartition> type_partition(const SimpleGame& game) {
  const int n = game.n();
  if (n > kMaxTabulatedPlayers) throw CapacityError("type_partition is limited to n <= 25");
  if (n == 1) return TypePartition{{{1}}};
  const WinTable table(game);
  auto win = [&](Coalition s) { return table.winning(s); };

  // rel[i][j] for 0-based players.
  std::vector<std::vector<Desirability>> rel(n, std::vector<Desirability>(n, Desirability::EquallyDesirable));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Desirability d = compare_players(n, i, j, win);
      if (d == Desirability::Incomparable) return std::nullopt;
      rel[i - 1][j - 1] = d;
      rel[j - 1][i - 1] = d == Desirability::MoreDesirable   ? Desirability::LessDesirable
                          : d == Desirability::LessDesirable ? Desirability::MoreDesirable
                                                             : d;
    }
  }
  // In a complete preorder, the number of strictly weaker players ranks classes.
  std::vector<int> weaker(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j] == Desirability::MoreDesirable) ++weaker[i];

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weaker[a - 1] > weaker[b - 1]; });

  TypePartition part;
  for (int p : order) {
    if (!part.classes.empty() && rel[part.classes.back().front() - 1][p - 1] == Desirability::EquallyDesirable) {
      part.classes.back().push_back(p);
    } else {
      part.classes.push_back({p});
    }
  }
  return part;
}

SimpleGame from_weighted(const WeightedRepresentation& rep) {
  const int n = static_cast<int>(rep.weights.size());
  if (n < 1) throw InputError("weighted representation needs at least one player");
  if (n > kMaxTabulatedPlayers) throw CapacityError("weighted ingestion is limited to n <= 25");
  BigRational total = 0;
  for (const auto& w : rep.weights) {
    if (w < 0) throw ValidationError("weights must be nonnegative");
    total += w;
  }
  if (rep.quota < 0) throw ValidationError("quota must be nonnegative");
  if (rep.quota > total) throw ValidationError("quota exceeds the total weight, so no coalition wins");
  if (rep.quota == 0) throw ValidationError("a zero quota makes the empty coalition winning");

  std::vector<Coalition> minimal;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < size; ++s) {
    BigRational sum = 0;
    BigRational lightest = -1;
    for (std::uint64_t m = s; m != 0; m &= m - 1) {
      const auto& w = rep.weights[static_cast<std::size_t>(std::countr_zero(m))];
      sum += w;
      if (lightest < 0 || w < lightest) lightest = w;
    }
    // Minimal iff winning and dropping the lightest member loses.
    if (sum >= rep.quota && sum - lightest < rep.quota) minimal.push_back(Coalition(s));
  }
  return SimpleGame(n, std::move(minimal));
}

}  // namespace csg
