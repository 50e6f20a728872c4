#include <algorithm>

#include "csg/error.hpp"
#include "csg/transforms.hpp"

namespace csg {

SimpleGame dual(const SimpleGame& game) {
  const int n = game.n();
  const WinTable table(game);
  const std::uint64_t all = Coalition::grand(n).mask();
  std::vector<Coalition> minimal;
  for (std::uint64_t s = 1; s <= all; ++s) {
    if (table.winning(Coalition(all & ~s))) continue;  // s does not block
    bool is_min = true;
    for (std::uint64_t m = s; m != 0 && is_min; m &= m - 1) {
      const std::uint64_t smaller = s & ~(m & (~m + 1));
      if (!table.winning(Coalition(all & ~smaller))) is_min = false;
    }
    if (is_min) minimal.push_back(Coalition(s));
  }
  return SimpleGame(n, std::move(minimal));
}

Invariants dual_inv(const Invariants& inv) {
  const ProfileBox box = inv.box();
  const auto& nb = inv.n_bar();
  std::vector<int> complement(nb.size());
  const auto win = [&](const Profile& p) {
    for (std::size_t k = 0; k < nb.size(); ++k) complement[k] = nb[k] - p[static_cast<int>(k)];
    return !is_winning_profile(inv, Profile(complement));
  };
  return Invariants::trusted(nb, delta_minimal_rows(box, win));
}

std::string bijection_name(BijectionId id) {
  switch (id) {
    case BijectionId::F_VetoToNull: return "f";
    case BijectionId::G_PasserToNull: return "g";
    case BijectionId::H_VetoToSemiVeto: return "h";
    case BijectionId::K_PasserToSemiPasser: return "k";
    case BijectionId::HPrime_Dual: return "h1";
    case BijectionId::HSecond_VsvToVn: return "h2";
  }
  return "?";
}

std::optional<BijectionId> parse_bijection(const std::string& name) {
  for (BijectionId id : kAllBijections)
    if (bijection_name(id) == name) return id;
  if (name == "h'" || name == "hprime") return BijectionId::HPrime_Dual;
  if (name == "h''" || name == "hsecond") return BijectionId::HSecond_VsvToVn;
  return std::nullopt;
}

bool GameClass::contains(const Invariants& inv, RoleSet present) const {
  return inv.t() >= min_t && inv.n() >= min_n && present.contains_all(required);
}

bool GameClass::contains(const Invariants& inv) const { return contains(inv, structural_role_flags(inv)); }

std::vector<BijectionClasses> bijection_classes(BijectionId id) {
  using R = Role;
  switch (id) {
    case BijectionId::F_VetoToNull: return {{{{R::Vetoer}, 2, 1}, {{R::Null}, 2, 1}}};
    case BijectionId::G_PasserToNull: return {{{{R::Passer}, 2, 1}, {{R::Null}, 2, 1}}};
    case BijectionId::H_VetoToSemiVeto: return {{{{R::Vetoer}, 1, 2}, {{R::SemiVetoer}, 1, 2}}};
    case BijectionId::K_PasserToSemiPasser: return {{{{R::Passer}, 1, 2}, {{R::SemiPasser}, 1, 2}}};
    case BijectionId::HPrime_Dual:
      return {{{{R::Vetoer, R::Null}, 2, 2}, {{R::Passer, R::Null}, 2, 2}},
              {{{R::Vetoer, R::SemiVetoer}, 2, 2}, {{R::Passer, R::SemiPasser}, 2, 2}}};
    case BijectionId::HSecond_VsvToVn: return {{{{R::Vetoer, R::SemiVetoer}, 2, 2}, {{R::Vetoer, R::Null}, 2, 2}}};
  }
  return {};
}

namespace {

[[noreturn]] void outside(BijectionId id, const char* side, RoleSet required) {
  throw DomainError("map " + bijection_name(id) + " is undefined here: " + side + " requires " + role_set_name(required) +
                    " (and the class's minimum n and t)");
}

// Finds which (domain, codomain) pair applies, or throws.
RoleSet check_side(BijectionId id, const Invariants& inv, bool forward) {
  const RoleSet present = structural_role_flags(inv);
  const auto classes = bijection_classes(id);
  for (const auto& c : classes) {
    const GameClass& side = forward ? c.domain : c.codomain;
    if (side.contains(inv, present)) return present;
  }
  outside(id, forward ? "the domain" : "the codomain", forward ? classes.front().domain.required : classes.front().codomain.required);
}

std::vector<int> rotate_first_to_last(const std::vector<int>& v) {
  std::vector<int> out(v.begin() + 1, v.end());
  out.push_back(v.front());
  return out;
}

std::vector<int> rotate_last_to_first(const std::vector<int>& v) {
  std::vector<int> out{v.back()};
  out.insert(out.end(), v.begin(), v.end() - 1);
  return out;
}

Invariants finish(std::vector<int> n_bar, Matrix rows) {
  // A map result that fails validation is a defect in the construction, not
  // bad user input, so it surfaces as a hard error.
  return make_invariants_unsorted(n_bar, std::move(rows));
}

std::vector<int> unit(int t, int k) {
  std::vector<int> e(static_cast<std::size_t>(t), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return e;
}

Invariants forward(BijectionId id, const Invariants& inv, RoleSet present) {
  const int t = inv.t();
  const auto& nb = inv.n_bar();
  switch (id) {
    case BijectionId::F_VetoToNull: {
      if (present.contains(Role::Null)) return inv;
      Matrix rows;
      for (const auto& row : inv.rows()) {
        std::vector<int> r(row.begin() + 1, row.end());
        r.push_back(0);
        rows.push_back(std::move(r));
      }
      return finish(rotate_first_to_last(nb), std::move(rows));
    }
    case BijectionId::G_PasserToNull: {
      if (present.contains(Role::Null)) return inv;
      if (inv.rows().front() != unit(t, 0)) throw DomainError("g expects the first row to be (1,0,...,0)");
      Matrix rows;
      for (std::size_t i = 1; i < inv.rows().size(); ++i) {
        const auto& row = inv.rows()[i];
        std::vector<int> r(row.begin() + 1, row.end());
        r.push_back(0);
        rows.push_back(std::move(r));
      }
      return finish(rotate_first_to_last(nb), std::move(rows));
    }
    case BijectionId::H_VetoToSemiVeto: {
      if (present.contains(Role::SemiVetoer)) return inv;
      std::vector<int> extra = nb;
      extra[0] -= 1;
      if (t == 1) return finish(nb, {extra});
      Matrix rows = inv.rows();
      rows.push_back(std::move(extra));
      return finish(nb, std::move(rows));
    }
    case BijectionId::K_PasserToSemiPasser: {
      if (present.contains(Role::SemiPasser)) return inv;
      if (inv.rows().front() != unit(t, 0)) throw DomainError("k expects the first row to be (1,0,...,0)");
      Matrix rows = inv.rows();
      rows.front().back() += 1;
      return finish(nb, std::move(rows));
    }
    case BijectionId::HPrime_Dual: return dual_inv(inv);
    case BijectionId::HSecond_VsvToVn: {
      if (t == 2) {
        if (inv.r() != 1 || inv.rows().front() != std::vector<int>{nb[0], nb[1] - 1})
          throw DomainError("h2 expects M = (n_1, n_2 - 1) when t = 2");
        return finish(nb, {{nb[0], 0}});
      }
      if (inv.r() < 2) throw DomainError("h2 needs at least two rows when t >= 3");
      std::vector<int> last = nb;
      last[1] -= 1;
      if (inv.rows().back() != last) throw DomainError("h2 expects the last row (n_1, n_2 - 1, n_3, ..., n_t)");
      std::vector<int> n_bar{nb[0]};
      n_bar.insert(n_bar.end(), nb.begin() + 2, nb.end());
      n_bar.push_back(nb[1]);
      Matrix rows;
      for (std::size_t i = 0; i + 1 < inv.rows().size(); ++i) {
        const auto& row = inv.rows()[i];
        std::vector<int> r{row[0]};
        r.insert(r.end(), row.begin() + 2, row.end());
        r.push_back(0);
        rows.push_back(std::move(r));
      }
      return finish(std::move(n_bar), std::move(rows));
    }
  }
  return inv;
}

Invariants backward(BijectionId id, const Invariants& inv, RoleSet present) {
  const int t = inv.t();
  const auto& nb = inv.n_bar();
  switch (id) {
    case BijectionId::F_VetoToNull: {
      if (present.contains(Role::Vetoer)) return inv;
      Matrix rows;
      for (const auto& row : inv.rows()) {
        std::vector<int> r{nb.back()};
        r.insert(r.end(), row.begin(), row.end() - 1);
        rows.push_back(std::move(r));
      }
      return finish(rotate_last_to_first(nb), std::move(rows));
    }
    case BijectionId::G_PasserToNull: {
      if (present.contains(Role::Passer)) return inv;
      Matrix rows{unit(t, 0)};
      for (const auto& row : inv.rows()) {
        std::vector<int> r{0};
        r.insert(r.end(), row.begin(), row.end() - 1);
        rows.push_back(std::move(r));
      }
      return finish(rotate_last_to_first(nb), std::move(rows));
    }
    case BijectionId::H_VetoToSemiVeto: {
      if (present.contains(Role::Vetoer)) return inv;
      if (t == 1) return finish(nb, {nb});
      std::vector<int> extra = nb;
      extra[0] -= 1;
      Matrix rows;
      for (const auto& row : inv.rows())
        if (row != extra) rows.push_back(row);
      if (rows.size() + 1 != inv.rows().size()) throw DomainError("h inverse expects the row (n_1 - 1, n_2, ..., n_t)");
      return finish(nb, std::move(rows));
    }
    case BijectionId::K_PasserToSemiPasser: {
      if (present.contains(Role::Passer)) return inv;
      std::vector<int> first = unit(t, 0);
      first.back() += 1;
      if (inv.rows().front() != first) throw DomainError("k inverse expects the first row (1,0,...,0,1)");
      Matrix rows = inv.rows();
      rows.front().back() -= 1;
      return finish(nb, std::move(rows));
    }
    case BijectionId::HPrime_Dual: return dual_inv(inv);
    case BijectionId::HSecond_VsvToVn: {
      if (t == 2) return finish(nb, {{nb[0], nb[1] - 1}});
      // Undo the class rotation: the last class returns to position 2.
      std::vector<int> n_bar{nb[0], nb.back()};
      n_bar.insert(n_bar.end(), nb.begin() + 1, nb.end() - 1);
      Matrix rows;
      for (const auto& row : inv.rows()) {
        std::vector<int> r{row[0], nb.back()};
        r.insert(r.end(), row.begin() + 1, row.end() - 1);
        rows.push_back(std::move(r));
      }
      std::vector<int> last = n_bar;
      last[1] -= 1;
      rows.push_back(std::move(last));
      return finish(std::move(n_bar), std::move(rows));
    }
  }
  return inv;
}

}  // namespace

Invariants apply_bijection(BijectionId id, const Invariants& inv) {
  const RoleSet present = check_side(id, inv, true);
  return forward(id, inv, present);
}

Invariants apply_inverse(BijectionId id, const Invariants& inv) {
  const RoleSet present = check_side(id, inv, false);
  return backward(id, inv, present);
}

}  // namespace csg
