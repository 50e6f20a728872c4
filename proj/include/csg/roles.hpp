#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csg/invariants.hpp"
#include "csg/simple_game.hpp"

namespace csg {

enum class Role : std::uint8_t { Dictator, Vetoer, Passer, Null, SemiVetoer, SemiPasser };

inline constexpr std::array<Role, 6> kAllRoles{Role::Dictator,   Role::Vetoer,     Role::Passer,
                                               Role::Null,       Role::SemiVetoer, Role::SemiPasser};

/// Small bitset over Role.
class RoleSet {
 public:
  constexpr RoleSet() = default;
  constexpr RoleSet(std::initializer_list<Role> roles) {
    for (Role r : roles) insert(r);
  }
  static constexpr RoleSet from_bits(std::uint8_t bits) {
    RoleSet s;
    s.bits_ = bits;
    return s;
  }

  constexpr void insert(Role r) { bits_ |= bit(r); }
  constexpr bool contains(Role r) const { return (bits_ & bit(r)) != 0; }
  constexpr bool contains_all(RoleSet o) const { return (bits_ & o.bits_) == o.bits_; }
  constexpr bool intersects(RoleSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return __builtin_popcount(bits_); }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr RoleSet operator|(RoleSet o) const { return from_bits(bits_ | o.bits_); }
  std::vector<Role> roles() const;

  constexpr bool operator==(const RoleSet&) const = default;

 private:
  static constexpr std::uint8_t bit(Role r) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(r)); }
  std::uint8_t bits_ = 0;
};

/// Lowercase role name: "dictator", "vetoer", "passer", "null", "semi_vetoer", "semi_passer".
std::string role_name(Role r);
/// Accepts the canonical names plus short aliases (veto, semi-veto, sv, ...).
std::optional<Role> parse_role(const std::string& name);
/// Role names joined by '+', in enum order.
std::string role_set_name(RoleSet s);

struct RoleReport {
  std::map<int, RoleSet> per_player;  // 1-based players
  std::map<int, RoleSet> per_class;   // 1-based classes; empty for incomplete games
  int class_count = 0;
  RoleSet present;                    // union over players

  bool operator==(const RoleReport&) const = default;
};

/// Literal coalition-level evaluation of the six role definitions.
RoleReport semantic_roles(const SimpleGame& game);

/// The same roles decided on invariants alone, players labelled consecutively
/// by class as expand() does.
RoleReport structural_roles(const Invariants& inv);

/// Presence flags only; the hot path used by enumeration filters.
RoleSet structural_role_flags(const Invariants& inv);

/// Combination tally over a stream of games.
class RoleAudit {
 public:
  void add(const Invariants& inv);
  /// Associative merge of another shard's tally.
  void merge(const RoleAudit& other);

  struct Entry {
    std::uint64_t count = 0;
    std::optional<Invariants> example;
  };
  /// Keyed by role bits; only pair and triple sub-combinations of the
  /// non-dictator games.
  const std::map<std::uint8_t, Entry>& combinations() const { return combos_; }
  const Entry& dictator_games() const { return dictator_; }
  std::uint64_t games() const { return games_; }

  /// "combination,count,example" rows, dictator bucket first.
  std::string to_csv() const;

 private:
  void note(std::uint8_t key, const Invariants& inv, std::uint64_t count, const std::optional<Invariants>& example);
  std::map<std::uint8_t, Entry> combos_;
  Entry dictator_;
  std::uint64_t games_ = 0;
};

RoleAudit audit_role_pairs(const std::vector<Invariants>& games);

}  // namespace csg
