#include <doctest.h>

#include <set>

#include "csg/enumeration.hpp"
#include "csg/error.hpp"
#include "csg/invariants.hpp"
#include "csg/roles.hpp"
#include "csg/transforms.hpp"

using namespace csg;

namespace {

Invariants I(std::vector<int> n_bar, Matrix rows) { return make_invariants(n_bar, rows); }

std::set<Invariants> members(const GameClass& cls, int n, int t) {
  std::set<Invariants> out;
  if (cls.min_t > t || cls.min_n > n) return out;
  EnumSpec spec;
  spec.n = n;
  spec.t = t;
  spec.require = cls.required;
  for (auto& g : enumerate_all(spec))
    if (cls.contains(g)) out.insert(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("dual") {
  const SimpleGame dict(3, {{1}});
  CHECK(dual(dict) == dict);
  for (int n = 1; n <= 5; ++n) CHECK(dual_inv(I({n}, {{n}})) == I({n}, {{1}}));
  CHECK(dual(SimpleGame(3, {{1, 2, 3}})) == SimpleGame(3, {{1}, {2}, {3}}));
  const SimpleGame ex1(3, {{1, 2}, {1, 3}});
  CHECK(dual(ex1) == SimpleGame(3, {{1}, {2, 3}}));
}

TEST_CASE("dual is an involution on all games with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Coalition> chosen;
    std::size_t games = 0;
    auto rec = [&](auto&& self, std::uint64_t start) -> void {
      for (std::uint64_t m = start; m < (std::uint64_t{1} << n); ++m) {
        bool ok = true;
        for (Coalition c : chosen) ok = ok && (c.mask() & m) != c.mask() && (c.mask() & m) != m;
        if (!ok) continue;
        chosen.emplace_back(m);
        const SimpleGame g(n, chosen);
        const SimpleGame d = dual(g);
        CHECK(dual(d) == g);
        ++games;
        self(self, m + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 1);
    CHECK(games > 0);
  }
}

TEST_CASE("bijection examples") {
  CHECK(apply_bijection(BijectionId::F_VetoToNull, I({1, 2}, {{1, 1}})) == I({2, 1}, {{1, 0}}));
  CHECK(apply_bijection(BijectionId::H_VetoToSemiVeto, I({1, 2}, {{1, 0}})) == I({1, 2}, {{1, 0}, {0, 2}}));
  CHECK(apply_bijection(BijectionId::K_PasserToSemiPasser, I({1, 2}, {{1, 0}})) == I({1, 2}, {{1, 1}}));
  CHECK(apply_bijection(BijectionId::HSecond_VsvToVn, I({1, 2}, {{1, 1}})) == I({1, 2}, {{1, 0}}));
  CHECK(apply_bijection(BijectionId::HSecond_VsvToVn, I({2, 1}, {{2, 0}})) == I({2, 1}, {{2, 0}}));
  // Identity when the target role is already present.
  CHECK(apply_bijection(BijectionId::F_VetoToNull, I({2, 1}, {{2, 0}})) == I({2, 1}, {{2, 0}}));
  CHECK(apply_bijection(BijectionId::HPrime_Dual, I({2, 1}, {{2, 0}})) == dual_inv(I({2, 1}, {{2, 0}})));

  CHECK(apply_inverse(BijectionId::F_VetoToNull, I({2, 1}, {{1, 0}})) == I({1, 2}, {{1, 1}}));
  CHECK(apply_inverse(BijectionId::H_VetoToSemiVeto, I({1, 2}, {{1, 0}, {0, 2}})) == I({1, 2}, {{1, 0}}));
}

TEST_CASE("bijection names") {
  for (BijectionId id : kAllBijections) CHECK(parse_bijection(bijection_name(id)) == id);
  CHECK(bijection_name(BijectionId::HPrime_Dual) == "h1");
  CHECK(bijection_name(BijectionId::HSecond_VsvToVn) == "h2");
  CHECK_FALSE(parse_bijection("z").has_value());
}

TEST_CASE("domain checks are strict") {
  // ex_2 has no distinguished roles.
  const auto plain = I({2, 3}, {{2, 0}, {0, 3}});
  for (BijectionId id : kAllBijections) {
    CHECK_THROWS_AS(apply_bijection(id, plain), DomainError);
    CHECK_THROWS_AS(apply_inverse(id, plain), DomainError);
  }
  // f needs two classes.
  CHECK_THROWS_AS(apply_bijection(BijectionId::F_VetoToNull, I({3}, {{3}})), DomainError);
}

TEST_CASE("bijections are bijective by exhaustion") {
  for (int n = 1; n <= 7; ++n)
    for (int t = 1; t <= std::min(n, 4); ++t)
      for (BijectionId id : kAllBijections)
        for (const auto& cls : bijection_classes(id)) {
          if (id == BijectionId::HSecond_VsvToVn && t >= 3) continue;
          CAPTURE(n);
          CAPTURE(t);
          CAPTURE(bijection_name(id));
          const auto dom = members(cls.domain, n, t);
          const auto cod = members(cls.codomain, n, t);
          std::set<Invariants> image;
          for (const auto& g : dom) {
            const auto m = apply_bijection(id, g);
            CHECK(std::holds_alternative<Invariants>(validate(m.n_bar(), m.rows())));
            CHECK(cod.contains(m));
            CHECK(apply_inverse(id, m) == g);
            image.insert(m);
          }
          CHECK(image.size() == dom.size());
          CHECK(image == cod);
        }
}

TEST_CASE("h2 beyond two classes") {
  // The shift construction breaks once a third class exists.
  const auto g = I({1, 1, 2}, {{1, 1, 0}, {1, 0, 2}});
  CHECK(structural_role_flags(g).contains(Role::SemiVetoer));
  CHECK_THROWS_AS(apply_bijection(BijectionId::HSecond_VsvToVn, g), ValidationError);

  const auto cls = bijection_classes(BijectionId::HSecond_VsvToVn).front();
  const auto dom = members(cls.domain, 6, 4);
  const auto cod = members(cls.codomain, 6, 4);
  std::set<Invariants> image;
  int invalid = 0;
  for (const auto& d : dom) {
    try {
      image.insert(apply_bijection(BijectionId::HSecond_VsvToVn, d));
    } catch (const ValidationError&) {
      ++invalid;
    }
  }
  CHECK(dom.size() == 8);
  CHECK(invalid == 5);
  CHECK(image != cod);

  // The classes still have equal sizes.
  for (int n = 4; n <= 7; ++n)
    for (int t = 3; t <= std::min(n, 4); ++t) {
      CAPTURE(n);
      CAPTURE(t);
      CHECK(members(cls.domain, n, t).size() == members(cls.codomain, n, t).size());
    }
}

TEST_CASE("dual_inv matches the extensional dual") {
  for (int n = 1; n <= 6; ++n)
    for (int t = 1; t <= n; ++t)
      for (const auto& inv : enumerate_all(EnumSpec{n, t})) {
        const auto d = dual_inv(inv);
        CHECK(d.n_bar() == inv.n_bar());
        CHECK(*extract(dual(expand(inv))) == d);
        CHECK(dual_inv(d) == inv);
        const auto a = structural_role_flags(inv);
        const auto b = structural_role_flags(d);
        CHECK(a.contains(Role::Vetoer) == b.contains(Role::Passer));
        CHECK(a.contains(Role::SemiVetoer) == b.contains(Role::SemiPasser));
        CHECK(a.contains(Role::Null) == b.contains(Role::Null));
      }
}
