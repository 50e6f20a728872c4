#include <algorithm>
#include <functional>
#include <numeric>

#include "csg/error.hpp"
#include "csg/invariants.hpp"

namespace csg {

int Invariants::n() const { return std::accumulate(n_bar_.begin(), n_bar_.end(), 0); }

std::vector<Profile> Invariants::row_profiles() const {
  std::vector<Profile> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.emplace_back(row);
  return out;
}

Invariants Invariants::trusted(std::vector<int> n_bar, Matrix rows) {
  Invariants inv;
  inv.n_bar_ = std::move(n_bar);
  inv.rows_ = std::move(rows);
  std::sort(inv.rows_.begin(), inv.rows_.end(), std::greater<>());
  return inv;
}

namespace {

std::string row_label(std::size_t i) { return "row " + std::to_string(i + 1); }

}  // namespace

ValidationResult validate(const std::vector<int>& n_bar, const Matrix& rows) {
  const std::size_t t = n_bar.size();
  if (t == 0) throw InputError("n_bar must have at least one class");
  if (rows.empty()) throw InputError("M must have at least one row");
  for (const auto& row : rows)
    if (row.size() != t) throw InputError("M is ragged or does not match the length of n_bar");

  std::vector<Violation> v;
  for (std::size_t k = 0; k < t; ++k)
    if (n_bar[k] <= 0) v.push_back({"condition_1", "n_" + std::to_string(k + 1) + " is not positive"});

  bool in_box = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < t; ++k) {
      if (rows[i][k] < 0 || rows[i][k] > n_bar[k]) {
        v.push_back({"condition_2", row_label(i) + " leaves the box at column " + std::to_string(k + 1)});
        in_box = false;
      }
    }
  }

  if (in_box) {
    std::vector<Profile> profiles;
    profiles.reserve(rows.size());
    for (const auto& row : rows) profiles.emplace_back(row);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (delta_compare(profiles[i], profiles[j]) != DeltaOrder::Incomparable)
          v.push_back({"condition_3", row_label(i) + " and " + row_label(j) + " are delta-comparable"});
      }
    }
  }

  for (std::size_t k = 0; k + 1 < t; ++k) {
    const bool ok = std::any_of(rows.begin(), rows.end(),
                                [&](const auto& row) { return row[k] > 0 && row[k + 1] < n_bar[k + 1]; });
    if (!ok)
      v.push_back({"condition_4", "no row has m_k > 0 and m_{k+1} < n_{k+1} for k=" + std::to_string(k + 1)});
  }

  if (rows.front()[0] <= 0) v.push_back({"m11_positive", "m_11 must be positive"});

  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!(rows[i] > rows[i + 1]))
      v.push_back({"row_order", row_label(i) + " is not lexicographically greater than " + row_label(i + 1)});
  }

  if (!v.empty()) return v;
  return Invariants::trusted(n_bar, rows);
}

Invariants make_invariants(const std::vector<int>& n_bar, const Matrix& rows) {
  auto res = validate(n_bar, rows);
  if (auto* inv = std::get_if<Invariants>(&res)) return *inv;
  std::string msg = "invalid invariants:";
  for (const auto& viol : std::get<std::vector<Violation>>(res)) msg += " " + viol.condition + " (" + viol.detail + ");";
  throw ValidationError(msg);
}

Invariants make_invariants_unsorted(const std::vector<int>& n_bar, Matrix rows) {
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return make_invariants(n_bar, rows);
}

bool is_winning_profile(const Invariants& inv, const Profile& p) {
  if (!inv.box().contains(p)) throw InputError("profile outside the box");
  for (const auto& row : inv.rows()) {
    if (delta_geq(p, Profile(row))) return true;
  }
  return false;
}

std::vector<Profile> winning_profiles(const Invariants& inv) {
  const ProfileBox box = inv.box();
  if (box.volume() > kMaxMaterializedProfiles)
    throw CapacityError("winning profile closure exceeds 10^6 profiles; query membership instead");
  const auto rows = inv.row_profiles();
  std::vector<Profile> out;
  for (auto& p : box.profiles()) {
    if (std::any_of(rows.begin(), rows.end(), [&](const Profile& r) { return delta_geq(p, r); })) out.push_back(std::move(p));
  }
  return out;
}

TypePartition consecutive_partition(const std::vector<int>& n_bar) {
  TypePartition part;
  int next = 1;
  for (int size : n_bar) {
    std::vector<int> cls(static_cast<std::size_t>(size));
    std::iota(cls.begin(), cls.end(), next);
    next += size;
    part.classes.push_back(std::move(cls));
  }
  return part;
}

namespace {

// Calls fn for each subset of `pool` of exactly k elements.
void for_each_k_subset(const std::vector<int>& pool, int k, const std::function<void(Coalition)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  const int m = static_cast<int>(pool.size());
  if (k > m) return;
  while (true) {
    Coalition c;
    for (int i : idx) c = c.with(pool[static_cast<std::size_t>(i)]);
    fn(c);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr double kMaxExpandedCoalitions = 1e7;

}  // namespace

SimpleGame expand(const Invariants& inv) {
  if (inv.n() > kMaxPlayers) throw CapacityError("expand is limited to n <= 64");
  const ProfileBox box = inv.box();
  const TypePartition part = consecutive_partition(inv.n_bar());
  const auto win = [&](const Profile& p) { return is_winning_profile(inv, p); };

  std::vector<std::vector<int>> minimal;
  double total = 0;
  std::vector<int> counts = box.sizes();
  do {
    if (!win(Profile(counts))) continue;
    bool is_min = true;
    for (std::size_t k = 0; k < counts.size() && is_min; ++k) {
      if (counts[k] == 0) continue;
      --counts[k];
      if (win(Profile(counts))) is_min = false;
      ++counts[k];
    }
    if (!is_min) continue;
    double ways = 1;
    for (std::size_t k = 0; k < counts.size(); ++k) ways *= binomial(inv.n_bar()[k], counts[k]);
    total += ways;
    if (total > kMaxExpandedCoalitions) throw CapacityError("expanded game has more than 10^7 minimal winning coalitions");
    minimal.push_back(counts);
  } while (box.step_down(counts));

  std::vector<Coalition> coalitions;
  coalitions.reserve(static_cast<std::size_t>(total));
  for (const auto& p : minimal) {
    // Cartesian product of per-class choices.
    std::vector<Coalition> partial{Coalition{}};
    for (std::size_t k = 0; k < p.size(); ++k) {
      std::vector<Coalition> next;
      for_each_k_subset(part.classes[k], p[k], [&](Coalition c) {
        for (Coalition base : partial) next.push_back(base | c);
      });
      partial = std::move(next);
    }
    coalitions.insert(coalitions.end(), partial.begin(), partial.end());
  }
  return SimpleGame(inv.n(), std::move(coalitions));
}

std::optional<Invariants> extract(const SimpleGame& game) {
  const auto part = type_partition(game);
  if (!part) return std::nullopt;
  const ProfileBox box(part->sizes());
  const WinTable table(game);
  const auto win = [&](const Profile& p) {
    Coalition rep;
    for (int k = 0; k < p.size(); ++k)
      for (int i = 0; i < p[k]; ++i) rep = rep.with(part->classes[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
    return table.winning(rep);
  };
  return Invariants::trusted(part->sizes(), delta_minimal_rows(box, win));
}

}  // namespace csg
