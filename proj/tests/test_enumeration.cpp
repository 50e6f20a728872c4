#include <doctest.h>

#include <set>

#include "csg/enumeration.hpp"
#include "csg/error.hpp"
#include "csg/json_io.hpp"

using namespace csg;

namespace {

Invariants I(std::vector<int> n_bar, Matrix rows) { return make_invariants(n_bar, rows); }

EnumSpec spec_of(int n, int t, RoleSet require = {}, RoleSet forbid = {}) {
  EnumSpec s;
  s.n = n;
  s.t = t;
  s.require = require;
  s.forbid = forbid;
  return s;
}

BigInt count_of(int n, int t, RoleSet require = {}) { return count(spec_of(n, t, require)); }

}  // namespace

TEST_CASE("compositions") {
  CHECK(compositions(3, 2) == std::vector<std::vector<int>>{{2, 1}, {1, 2}});
  CHECK(compositions(5, 2).size() == 4);
  CHECK(compositions(4, 4) == std::vector<std::vector<int>>{{1, 1, 1, 1}});
  CHECK(compositions(7, 3).size() == 15);
  const auto c = compositions(8, 4);
  CHECK(std::is_sorted(c.begin(), c.end(), std::greater<>()));
  CHECK_THROWS_AS(compositions(3, 4), InputError);
  CHECK_THROWS_AS(compositions(3, 0), InputError);
}

TEST_CASE("enumerate small cases") {
  const auto all = enumerate_all(spec_of(3, 2));
  CHECK(std::set<Invariants>(all.begin(), all.end()) ==
        std::set<Invariants>{I({1, 2}, {{1, 0}}), I({1, 2}, {{1, 1}}), I({1, 2}, {{1, 0}, {0, 2}}),
                             I({2, 1}, {{2, 0}}), I({2, 1}, {{1, 0}})});
  CHECK(all.size() == 5);
  CHECK(enumerate_all(spec_of(3, 2, {Role::Vetoer})).size() == 3);
  CHECK(enumerate_all(spec_of(3, 1)) == std::vector<Invariants>{I({3}, {{3}}), I({3}, {{2}}), I({3}, {{1}})});

  // Composition-major in decreasing lex order.
  CHECK(all.front().n_bar() == std::vector<int>{2, 1});
  CHECK(all.back().n_bar() == std::vector<int>{1, 2});
}

TEST_CASE("count") {
  CHECK(count_of(4, 3) == 6);
  CHECK(count_of(9, 3) == 15769);
  CHECK(count_of(1, 1) == 1);
  for (int n = 1; n <= 12; ++n) CHECK(count_of(n, 1) == n);
}

TEST_CASE("CG(10,4) with sharding") {
  EnumSpec s = spec_of(10, 4);
  s.count_only = true;
  s.jobs = 4;
  CHECK(count(s) == 4570902);
}

TEST_CASE("count_by_rows") {
  const auto t3 = count_by_rows(3);
  CHECK(t3.at(1, 1) == 3);
  CHECK(t3.at(2, 1) == 4);
  CHECK(t3.at(3, 1) == 0);
  CHECK(t3.row_total(1) == 7);
  CHECK(t3.at(2, 2) == 1);
  CHECK(count_by_rows(4).row_total(1) == 15);
  const auto t1 = count_by_rows(1);
  CHECK(t1.cells.size() == 1);
  CHECK(t1.at(1, 1) == 1);
  for (int n = 1; n <= 7; ++n) {
    const auto table = count_by_rows(n, 2);
    for (int t = 1; t <= n; ++t) CHECK(table.type_total(t) == count_of(n, t));
    for (int r = 1; r <= 4; ++r)
      for (int t = 1; t <= n; ++t) {
        EnumSpec s = spec_of(n, t);
        s.rows = r;
        CHECK(table.at(t, r) == count(s));
      }
  }
}

TEST_CASE("every emitted game is valid and distinct") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::size_t> hashes;
    std::size_t emitted = 0;
    for (int t = 1; t <= n; ++t) {
      enumerate(spec_of(n, t), [&](const Invariants& inv) {
        ++emitted;
        const auto v = validate(inv.n_bar(), inv.rows());
        if (n <= 6) CHECK(std::holds_alternative<Invariants>(v));
        hashes.insert(std::hash<std::string>{}(canonical(invariants_to_json(inv))));
      });
    }
    CHECK(hashes.size() == emitted);
  }
}

TEST_CASE("engines and worker counts agree") {
  for (int n = 1; n <= 7; ++n)
    for (int t = 1; t <= n; ++t)
      for (RoleSet req : {RoleSet{}, RoleSet{Role::Vetoer}, RoleSet{Role::Null}, RoleSet{Role::SemiPasser},
                          RoleSet{Role::Vetoer, Role::Null}}) {
        EnumSpec a = spec_of(n, t, req);
        EnumSpec b = a;
        b.engine = Engine::PrefixScan;
        EnumSpec c = a;
        c.jobs = 3;
        const auto ea = enumerate_all(a);
        CHECK(enumerate_all(b) == ea);
        CHECK(enumerate_all(c) == ea);
        CHECK(count(c) == ea.size());
      }
}

TEST_CASE("filters") {
  // Forbidding everything that is required elsewhere partitions the games.
  for (int n = 2; n <= 7; ++n)
    for (int t = 1; t <= std::min(n, 4); ++t) {
      const BigInt all = count_of(n, t);
      for (Role r : kAllRoles) {
        const BigInt with = count(spec_of(n, t, RoleSet{r}));
        const BigInt without = count(spec_of(n, t, {}, RoleSet{r}));
        CHECK(with + without == all);
      }
      EnumSpec rows = spec_of(n, t, RoleSet{Role::Vetoer});
      rows.rows = 1;
      for (const auto& g : enumerate_all(rows)) CHECK(g.r() == 1);
    }
  CHECK(count(spec_of(4, 1, RoleSet{Role::Null})) == 0);
  CHECK_THROWS_AS(count(spec_of(4, 2, RoleSet{Role::Vetoer}, RoleSet{Role::Vetoer})), InputError);
}

TEST_CASE("corollary filter consistency") {
  for (int n = 2; n <= 8; ++n)
    for (int t = 1; t <= std::min(n, 4); ++t) {
      CAPTURE(n);
      CAPTURE(t);
      const BigInt v = count_of(n, t, {Role::Vetoer});
      CHECK(count_of(n, t, {Role::Passer}) == v);
      CHECK(count_of(n, t, {Role::SemiVetoer}) == v);
      CHECK(count_of(n, t, {Role::SemiPasser}) == v);
      if (t >= 2) {
        CHECK(count_of(n, t, {Role::Null}) == v);
        const BigInt vn = count_of(n, t, {Role::Vetoer, Role::Null});
        CHECK(count_of(n, t, {Role::Passer, Role::Null}) == vn);
        CHECK(count_of(n, t, {Role::Vetoer, Role::SemiVetoer}) == vn);
        CHECK(count_of(n, t, {Role::Passer, Role::SemiPasser}) == vn);
      } else {
        CHECK(count_of(n, t, {Role::Null}) == 0);
      }
    }
  // A single player is a dictator but neither semi-role applies.
  CHECK(count_of(1, 1, {Role::Vetoer}) == 1);
  CHECK(count_of(1, 1, {Role::SemiVetoer}) == 0);
  CHECK(count_of(1, 1, {Role::SemiPasser}) == 0);
}

TEST_CASE("spec checks and capacity") {
  CHECK_THROWS_AS(count(spec_of(3, 4)), InputError);
  CHECK_THROWS_AS(count(spec_of(0, 1)), InputError);
  CHECK_THROWS_AS(count(spec_of(65, 1)), InputError);
  EnumSpec bad = spec_of(4, 2);
  bad.rows = 0;
  CHECK_THROWS_AS(count(bad), InputError);
  bad = spec_of(4, 2);
  bad.jobs = 0;
  CHECK_THROWS_AS(count(bad), InputError);
  CHECK_THROWS_AS(count(spec_of(64, 32)), CapacityError);
  CHECK_THROWS_AS(count(spec_of(60, 20)), CapacityError);
  EnumSpec forced = spec_of(60, 3);
  forced.engine = Engine::Bitset;
  CHECK_THROWS_AS(count(forced), InputError);
}

TEST_CASE("prefix-scan engine on larger boxes") {
  for (int t = 2; t <= 4; ++t) {
    EnumSpec a = spec_of(9, t);
    a.count_only = true;
    EnumSpec b = a;
    b.engine = Engine::PrefixScan;
    CHECK(count(a) == count(b));
  }
}

TEST_CASE("one-row games over a wide range of n") {
  EnumSpec s = spec_of(64, 2);
  s.rows = 1;
  s.count_only = true;
  // One-row games with t = 2: every (n1, n2) and row with 0 < m1 and m2 < n2.
  BigInt expected = 0;
  for (int n1 = 1; n1 < 64; ++n1) expected += BigInt(n1) * (64 - n1);
  CHECK(count(s) == expected);
}
