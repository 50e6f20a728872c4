#pragma once

#include <optional>
#include <string>

#include "csg/invariants.hpp"
#include "csg/roles.hpp"
#include "csg/simple_game.hpp"

namespace csg {

/// W* = {S : N \ S not in W}. Extensional; n <= 25.
SimpleGame dual(const SimpleGame& game);

/// Dual on invariants, computed on profiles: p wins in the dual iff n̄ - p
/// loses. Class sizes and order are unchanged.
Invariants dual_inv(const Invariants& inv);

enum class BijectionId { F_VetoToNull, G_PasserToNull, H_VetoToSemiVeto, K_PasserToSemiPasser, HPrime_Dual, HSecond_VsvToVn };

inline constexpr std::array<BijectionId, 6> kAllBijections{
    BijectionId::F_VetoToNull,     BijectionId::G_PasserToNull, BijectionId::H_VetoToSemiVeto,
    BijectionId::K_PasserToSemiPasser, BijectionId::HPrime_Dual, BijectionId::HSecond_VsvToVn};

/// CLI names: f, g, h, k, h1, h2.
std::string bijection_name(BijectionId id);
std::optional<BijectionId> parse_bijection(const std::string& name);

/// A class of games defined by roles that must all be present.
struct GameClass {
  RoleSet required;
  int min_t = 1;
  int min_n = 1;
  bool contains(const Invariants& inv) const;
  bool contains(const Invariants& inv, RoleSet present) const;
};

/// Domain and codomain of a bijection. h' has two (domain, codomain) pairs:
/// VN -> PN and VSV -> PSP; `variant` selects one of them.
struct BijectionClasses {
  GameClass domain;
  GameClass codomain;
};
std::vector<BijectionClasses> bijection_classes(BijectionId id);

/// Applies the map. Throws DomainError when inv is outside the domain.
Invariants apply_bijection(BijectionId id, const Invariants& inv);

/// The inverse map on the codomain. Throws DomainError outside it.
Invariants apply_inverse(BijectionId id, const Invariants& inv);

}  // namespace csg
