#include <algorithm>
#include <sstream>

#include "csg/error.hpp"
#include "csg/json_io.hpp"
#include "csg/roles.hpp"

namespace csg {

std::vector<Role> RoleSet::roles() const {
  std::vector<Role> out;
  for (Role r : kAllRoles)
    if (contains(r)) out.push_back(r);
  return out;
}

std::string role_name(Role r) {
  switch (r) {
    case Role::Dictator: return "dictator";
    case Role::Vetoer: return "vetoer";
    case Role::Passer: return "passer";
    case Role::Null: return "null";
    case Role::SemiVetoer: return "semi_vetoer";
    case Role::SemiPasser: return "semi_passer";
  }
  return "?";
}

std::optional<Role> parse_role(const std::string& raw) {
  std::string s;
  for (char c : raw) s.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "dictator" || s == "d") return Role::Dictator;
  if (s == "vetoer" || s == "veto" || s == "v") return Role::Vetoer;
  if (s == "passer" || s == "p") return Role::Passer;
  if (s == "null" || s == "n") return Role::Null;
  if (s == "semi_vetoer" || s == "semi_veto" || s == "semiveto" || s == "sv") return Role::SemiVetoer;
  if (s == "semi_passer" || s == "semipasser" || s == "sp") return Role::SemiPasser;
  return std::nullopt;
}

std::string role_set_name(RoleSet s) {
  std::string out;
  for (Role r : s.roles()) {
    if (!out.empty()) out += '+';
    out += role_name(r);
  }
  return out.empty() ? "none" : out;
}

RoleReport semantic_roles(const SimpleGame& game) {
  const int n = game.n();
  const Coalition grand = game.grand();
  const auto& mw = game.min_winning();
  RoleReport rep;
  for (int i = 1; i <= n; ++i) {
    RoleSet roles;
    const Coalition solo = Coalition::singleton(i);
    if (mw.size() == 1 && mw.front() == solo) roles.insert(Role::Dictator);
    // Every winning coalition contains a minimal one, so these reduce to W^m.
    if (std::all_of(mw.begin(), mw.end(), [i](Coalition c) { return c.contains(i); })) roles.insert(Role::Vetoer);
    if (is_winning(game, solo)) roles.insert(Role::Passer);
    if (std::none_of(mw.begin(), mw.end(), [i](Coalition c) { return c.contains(i); })) roles.insert(Role::Null);

    const Coalition rest = grand.without(i);
    if (is_winning(game, rest) &&
        std::all_of(mw.begin(), mw.end(), [&](Coalition c) { return c.contains(i) || c == rest; })) {
      roles.insert(Role::SemiVetoer);
    }

    if (!is_winning(game, solo)) {
      bool all_pairs = true;
      for (int j = 1; j <= n && all_pairs; ++j)
        if (j != i && !is_winning(game, solo.with(j))) all_pairs = false;
      if (all_pairs) roles.insert(Role::SemiPasser);
    }
    rep.per_player[i] = roles;
    rep.present = rep.present | roles;
  }
  if (n <= kMaxTabulatedPlayers) {
    if (auto part = type_partition(game)) {
      rep.class_count = part->class_count();
      for (int k = 0; k < part->class_count(); ++k)
        rep.per_class[k + 1] = rep.per_player.at(part->classes[static_cast<std::size_t>(k)].front());
    }
  }
  return rep;
}

namespace {

// Winning test on raw counts against the rows' prefix sums.
class ProfileOracle {
 public:
  explicit ProfileOracle(const Invariants& inv) : t_(inv.t()), n_bar_(inv.n_bar()) {
    if (t_ > 64) throw CapacityError("role detection is limited to t <= 64");
    for (const auto& row : inv.rows()) {
      int acc = 0;
      for (int v : row) prefix_.push_back(acc += v);
    }
  }

  bool winning(const std::vector<int>& counts) const {
    int p[64];
    int acc = 0;
    for (int k = 0; k < t_; ++k) p[k] = acc += counts[static_cast<std::size_t>(k)];
    for (std::size_t base = 0; base < prefix_.size(); base += static_cast<std::size_t>(t_)) {
      bool ge = true;
      for (int k = 0; k < t_ && ge; ++k) ge = p[k] >= prefix_[base + static_cast<std::size_t>(k)];
      if (ge) return true;
    }
    return false;
  }

  int t() const { return t_; }
  const std::vector<int>& n_bar() const { return n_bar_; }

 private:
  int t_;
  std::vector<int> n_bar_;
  std::vector<int> prefix_;
};

RoleSet class_roles(const Invariants& inv, const ProfileOracle& oracle, int c) {
  const int t = inv.t();
  const auto& nb = inv.n_bar();
  const auto cu = static_cast<std::size_t>(c);
  RoleSet roles;

  std::vector<int> e(static_cast<std::size_t>(t), 0);
  e[cu] = 1;
  const bool solo_wins = oracle.winning(e);

  if (nb[cu] == 1 && inv.r() == 1 && inv.rows().front() == e) roles.insert(Role::Dictator);

  std::vector<int> rest = nb;
  rest[cu] -= 1;
  const bool rest_wins = oracle.winning(rest);
  if (!rest_wins) roles.insert(Role::Vetoer);
  if (solo_wins) roles.insert(Role::Passer);
  if (t >= 2 && c == t - 1 && std::all_of(inv.rows().begin(), inv.rows().end(), [&](const auto& row) { return row[cu] == 0; }))
    roles.insert(Role::Null);

  if (rest_wins) {
    // Any other winning profile avoiding a member of class c lies below one of
    // these componentwise covers of n̄ - e_c.
    bool unique = true;
    for (int d = 0; d < t && unique; ++d) {
      auto& v = rest[static_cast<std::size_t>(d)];
      if (v == 0) continue;
      --v;
      if (oracle.winning(rest)) unique = false;
      ++v;
    }
    if (unique) roles.insert(Role::SemiVetoer);
  }

  if (!solo_wins) {
    bool pairs = true;
    for (int d = 0; d < t && pairs; ++d) {
      const auto du = static_cast<std::size_t>(d);
      if (d == c && nb[cu] < 2) continue;
      e[du] += 1;
      pairs = oracle.winning(e);
      e[du] -= 1;
    }
    if (pairs) roles.insert(Role::SemiPasser);
  }
  return roles;
}

}  // namespace

RoleSet structural_role_flags(const Invariants& inv) {
  const ProfileOracle oracle(inv);
  RoleSet present;
  for (int c = 0; c < inv.t(); ++c) present = present | class_roles(inv, oracle, c);
  return present;
}

RoleReport structural_roles(const Invariants& inv) {
  const ProfileOracle oracle(inv);
  RoleReport rep;
  rep.class_count = inv.t();
  int player = 1;
  for (int c = 0; c < inv.t(); ++c) {
    const RoleSet roles = class_roles(inv, oracle, c);
    rep.per_class[c + 1] = roles;
    rep.present = rep.present | roles;
    for (int i = 0; i < inv.n_bar()[static_cast<std::size_t>(c)]; ++i) rep.per_player[player++] = roles;
  }
  return rep;
}

namespace {

// Smallest invariants win, so merged tallies do not depend on shard order.
void keep_smaller(std::optional<Invariants>& slot, const Invariants& inv) {
  if (!slot || inv < *slot) slot = inv;
}

}  // namespace

void RoleAudit::note(std::uint8_t key, const Invariants& inv, std::uint64_t count, const std::optional<Invariants>& example) {
  auto& entry = combos_[key];
  entry.count += count;
  keep_smaller(entry.example, example ? *example : inv);
}

void RoleAudit::add(const Invariants& inv) {
  ++games_;
  const RoleSet present = structural_role_flags(inv);
  if (present.contains(Role::Dictator)) {
    ++dictator_.count;
    keep_smaller(dictator_.example, inv);
    return;
  }
  const auto bits = present.bits();
  // Every sub-combination of size two or three.
  for (std::uint8_t sub = bits; sub != 0; sub = static_cast<std::uint8_t>((sub - 1) & bits)) {
    const int sz = __builtin_popcount(sub);
    if (sz == 2 || sz == 3) note(sub, inv, 1, std::nullopt);
  }
}

void RoleAudit::merge(const RoleAudit& other) {
  games_ += other.games_;
  dictator_.count += other.dictator_.count;
  if (other.dictator_.example) keep_smaller(dictator_.example, *other.dictator_.example);
  for (const auto& [key, entry] : other.combos_) {
    auto& mine = combos_[key];
    mine.count += entry.count;
    if (entry.example) keep_smaller(mine.example, *entry.example);
  }
}

std::string RoleAudit::to_csv() const {
  std::ostringstream out;
  out << "combination,count,example\n";
  auto quoted = [](const std::optional<Invariants>& inv) {
    if (!inv) return std::string();
    std::string s = invariants_to_json(*inv).dump();
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  out << "dictator," << dictator_.count << ',' << quoted(dictator_.example) << '\n';
  for (const auto& [key, entry] : combos_)
    out << role_set_name(RoleSet::from_bits(key)) << ',' << entry.count << ',' << quoted(entry.example) << '\n';
  return out.str();
}

RoleAudit audit_role_pairs(const std::vector<Invariants>& games) {
  RoleAudit audit;
  for (const auto& g : games) audit.add(g);
  return audit;
}

}  // namespace csg
