#include "csg/verify.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "csg/enumeration.hpp"
#include "csg/error.hpp"
#include "csg/formulas.hpp"
#include "csg/roles.hpp"
#include "csg/transforms.hpp"

namespace csg {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string str(const BigInt& v) { return v.str(); }

BigInt enum_count(int n, int t, RoleSet require, int jobs, std::optional<int> rows = std::nullopt) {
  EnumSpec spec;
  spec.n = n;
  spec.t = t;
  spec.rows = rows;
  spec.require = require;
  spec.count_only = true;
  spec.jobs = jobs;
  return count(spec);
}

std::string filter_label(RoleSet s) { return s.empty() ? "none" : role_set_name(s); }

SuiteResult formulas_suite(int max_n, int jobs) {
  std::ostringstream os;
  os << "family,n,formula,enumerated,match\n";
  bool ok = true;
  auto row = [&](FormulaFamily f, int n, std::optional<int> t, const BigInt& enumerated) {
    const BigInt expected = evaluate(f, n, t);
    const bool match = expected == enumerated;
    ok = ok && match;
    std::string name = family_name(f);
    if (t) name += "(t=" + std::to_string(*t) + ")";
    os << name << ',' << n << ',' << str(expected) << ',' << str(enumerated) << ',' << yes_no(match) << '\n';
  };

  const RoleSet none;
  const RoleSet veto{Role::Vetoer};
  const RoleSet vn{Role::Vetoer, Role::Null};
  for (int n = 1; n <= std::min(max_n, 12); ++n) row(FormulaFamily::CG_t1, n, {}, enum_count(n, 1, none, jobs));
  for (int n = 2; n <= std::min(max_n, 12); ++n) row(FormulaFamily::CG_t2, n, {}, enum_count(n, 2, none, jobs));
  for (int n = 1; n <= std::min(max_n, 10); ++n) row(FormulaFamily::CGV_t1, n, {}, enum_count(n, 1, veto, jobs));
  for (int n = 2; n <= std::min(max_n, 10); ++n) row(FormulaFamily::CGV_t2, n, {}, enum_count(n, 2, veto, jobs));
  for (int n = 4; n <= std::min(max_n, 9); ++n) row(FormulaFamily::CGV_t3, n, {}, enum_count(n, 3, veto, jobs));
  for (int n = 2; n <= std::min(max_n, 10); ++n) row(FormulaFamily::CGVN_t2, n, {}, enum_count(n, 2, vn, jobs));
  for (int n = 4; n <= std::min(max_n, 9); ++n) row(FormulaFamily::CGVN_t3, n, {}, enum_count(n, 3, vn, jobs));
  for (int n = 5; n <= std::min(max_n, 9); ++n) row(FormulaFamily::CGVN_t4, n, {}, enum_count(n, 4, vn, jobs));

  struct Piecewise {
    FormulaFamily total;
    FormulaFamily per_t;
    RoleSet roles;
  };
  const std::vector<Piecewise> piecewise{
      {FormulaFamily::CGD, FormulaFamily::CGD_nt, RoleSet{Role::Dictator}},
      {FormulaFamily::CGDN, FormulaFamily::CGDN_nt, RoleSet{Role::Dictator, Role::Null}},
      {FormulaFamily::CGSVSP, FormulaFamily::CGSVSP_nt, RoleSet{Role::SemiVetoer, Role::SemiPasser}},
      {FormulaFamily::CGVSP, FormulaFamily::CGVSP_nt, RoleSet{Role::Vetoer, Role::SemiPasser}},
      {FormulaFamily::CGPSV, FormulaFamily::CGPSV_nt, RoleSet{Role::Passer, Role::SemiVetoer}},
  };
  for (const auto& fam : piecewise) {
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
      BigInt total = 0;
      for (int t = 1; t <= n; ++t) {
        const BigInt c = enum_count(n, t, fam.roles, jobs);
        total += c;
        row(fam.per_t, n, t, c);
      }
      row(fam.total, n, {}, total);
    }
  }
  return {os.str(), ok};
}

SuiteResult bijections_suite(int max_n, int jobs) {
  std::ostringstream os;
  os << "n,t,bijection,domain,codomain,domain_size,codomain_size,bijective\n";
  bool ok = true;
  for (int n = 2; n <= max_n; ++n) {
    for (int t = 1; t <= std::min(n, 4); ++t) {
      for (BijectionId id : kAllBijections) {
        for (const auto& cls : bijection_classes(id)) {
          std::vector<Invariants> dom;
          std::set<Invariants> cod;
          if (cls.domain.min_t <= t && cls.domain.min_n <= n) {
            EnumSpec spec{n, t, std::nullopt, cls.domain.required, {}, false, jobs, Engine::Auto};
            for (auto& g : enumerate_all(spec))
              if (cls.domain.contains(g)) dom.push_back(std::move(g));
          }
          if (cls.codomain.min_t <= t && cls.codomain.min_n <= n) {
            EnumSpec spec{n, t, std::nullopt, cls.codomain.required, {}, false, jobs, Engine::Auto};
            for (auto& g : enumerate_all(spec))
              if (cls.codomain.contains(g)) cod.insert(std::move(g));
          }
          std::set<Invariants> image;
          bool good = true;
          for (const auto& g : dom) {
            try {
              Invariants m = apply_bijection(id, g);
              good = good && cod.contains(m) && apply_inverse(id, m) == g;
              image.insert(std::move(m));
            } catch (const Error&) {
              good = false;
            }
          }
          good = good && image.size() == dom.size() && image == cod;
          ok = ok && good;
          os << n << ',' << t << ',' << bijection_name(id) << ',' << filter_label(cls.domain.required) << ','
             << filter_label(cls.codomain.required) << ',' << dom.size() << ',' << cod.size() << ',' << yes_no(good)
             << '\n';
        }
      }
    }
  }
  return {os.str(), ok};
}

SuiteResult duality_suite(int max_n, int jobs) {
  std::ostringstream os;
  os << "n,games,involution,profile_agreement,match\n";
  bool ok = true;
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    std::uint64_t games = 0;
    bool involution = true;
    bool agree = true;
    for (int t = 1; t <= n; ++t) {
      EnumSpec spec{n, t, std::nullopt, {}, {}, false, jobs, Engine::Auto};
      enumerate(spec, [&](const Invariants& inv) {
        ++games;
        const SimpleGame g = expand(inv);
        const SimpleGame d = dual(g);
        involution = involution && dual(d) == g && dual_inv(dual_inv(inv)) == inv;
        const auto e = extract(d);
        agree = agree && e && *e == dual_inv(inv);
      });
    }
    ok = ok && involution && agree;
    os << n << ',' << games << ',' << yes_no(involution) << ',' << yes_no(agree) << ',' << yes_no(involution && agree)
       << '\n';
  }
  return {os.str(), ok};
}

const std::vector<RoleSet>& oracle_filters() {
  static const std::vector<RoleSet> filters{
      RoleSet{},
      RoleSet{Role::Dictator},
      RoleSet{Role::Vetoer},
      RoleSet{Role::Passer},
      RoleSet{Role::Null},
      RoleSet{Role::SemiVetoer},
      RoleSet{Role::SemiPasser},
      RoleSet{Role::Vetoer, Role::Null},
      RoleSet{Role::Passer, Role::Null},
      RoleSet{Role::Vetoer, Role::SemiVetoer},
      RoleSet{Role::Passer, Role::SemiPasser},
      RoleSet{Role::Vetoer, Role::SemiPasser},
      RoleSet{Role::Passer, Role::SemiVetoer},
      RoleSet{Role::SemiVetoer, Role::SemiPasser},
      RoleSet{Role::Dictator, Role::Null},
  };
  return filters;
}

SuiteResult oracle_suite(int max_n, int jobs) {
  std::ostringstream os;
  os << "n,t,filter,oracle,enumerated,match\n";
  bool ok = true;
  for (int n = 1; n <= std::min(max_n, kMaxExtensionalPlayers); ++n) {
    std::map<std::pair<int, int>, std::uint64_t> tally;  // (t, filter index)
    for (const auto& g : all_simple_games(n)) {
      const auto inv = extract(g);
      if (!inv || expand(*inv) != g) continue;
      const RoleSet present = semantic_roles(g).present;
      const auto& filters = oracle_filters();
      for (std::size_t f = 0; f < filters.size(); ++f)
        if (present.contains_all(filters[f])) ++tally[{inv->t(), static_cast<int>(f)}];
    }
    for (int t = 1; t <= n; ++t) {
      const auto& filters = oracle_filters();
      for (std::size_t f = 0; f < filters.size(); ++f) {
        const std::uint64_t expected = tally[{t, static_cast<int>(f)}];
        const BigInt got = enum_count(n, t, filters[f], jobs);
        const bool match = got == expected;
        ok = ok && match;
        os << n << ',' << t << ',' << filter_label(filters[f]) << ',' << expected << ',' << str(got) << ','
           << yes_no(match) << '\n';
      }
    }
  }
  return {os.str(), ok};
}

SuiteResult rows_suite(int max_n, int jobs) {
  std::ostringstream os;
  os << "n,sum,expected,match\n";
  bool ok = true;
  for (int n = 1; n <= std::min(max_n, 12); ++n) {
    BigInt sum = 0;
    for (int t = 1; t <= n; ++t) sum += enum_count(n, t, {}, jobs, 1);
    const BigInt expected = (BigInt(1) << n) - 1;
    const bool match = sum == expected;
    ok = ok && match;
    os << n << ',' << str(sum) << ',' << str(expected) << ',' << yes_no(match) << '\n';
  }
  return {os.str(), ok};
}

SuiteResult sequences_suite(int max_n, int jobs) {
  struct Sequence {
    const char* name;
    int t;
    RoleSet roles;
    int first_n;
    std::vector<std::uint64_t> values;
  };
  const std::vector<Sequence> tables{
      {"cg_t3",
       3,
       {},
       4,
       {6, 50, 262, 1114, 4278, 15769, 58147, 221089, 886411, 3806475, 17681979, 89337562, 492188528, 2959459154,
        19424078142, 139141985438, 1087614361775, 9274721292503}},
      {"cg_t4", 4, {}, 10, {4570902, 59776637, 1047858496, 26000281487}},
      {"cg_t5", 5, {}, 10, {412734188, 29086472429}},
      {"cg_t6", 6, {}, 10, {42427707348}},
      {"cgv_t3", 3, {Role::Vetoer}, 4, {2, 11, 37, 98, 225, 470, 919, 1713, 3082, 5400}},
      {"cgvn_t4", 4, {Role::Vetoer, Role::Null}, 5, {1, 8, 35, 113, 303, 717, 1552, 3145, 6062, 11242}},
  };
  std::ostringstream os;
  os << "sequence,n,expected,enumerated,match\n";
  bool ok = true;
  for (const auto& seq : tables) {
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      const int n = seq.first_n + static_cast<int>(i);
      if (n > max_n) break;
      const BigInt got = enum_count(n, seq.t, seq.roles, jobs);
      const bool match = got == seq.values[i];
      ok = ok && match;
      os << seq.name << ',' << n << ',' << seq.values[i] << ',' << str(got) << ',' << yes_no(match) << '\n';
    }
  }
  return {os.str(), ok};
}

// Antichains of nonempty coalitions, each new minimal coalition larger in
// mask order than the previous and incomparable with all chosen ones.
void antichains(int n, std::uint64_t start, std::vector<Coalition>& chosen, std::vector<SimpleGame>& out) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = start; m < limit; ++m) {
    bool free = true;
    for (Coalition c : chosen) {
      if ((c.mask() & m) == c.mask() || (c.mask() & m) == m) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    chosen.emplace_back(m);
    out.emplace_back(n, chosen);
    antichains(n, m + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"formulas", "bijections", "duality", "oracle", "rows", "sequences"};
  return names;
}

SuiteResult run_suite(const std::string& name, int max_n, int jobs) {
  if (max_n < 1) throw InputError("max-n must be positive");
  if (name == "formulas") return formulas_suite(max_n, jobs);
  if (name == "bijections") return bijections_suite(max_n, jobs);
  if (name == "duality") return duality_suite(max_n, jobs);
  if (name == "oracle") return oracle_suite(max_n, jobs);
  if (name == "rows") return rows_suite(max_n, jobs);
  if (name == "sequences") return sequences_suite(max_n, jobs);
  throw InputError("unknown suite '" + name + "'");
}

std::vector<SimpleGame> all_simple_games(int n) {
  if (n < 1) throw InputError("n must be positive");
  if (n > kMaxExtensionalPlayers)
    throw CapacityError("extensional enumeration is limited to n ≤ " + std::to_string(kMaxExtensionalPlayers));
  std::vector<SimpleGame> out;
  std::vector<Coalition> chosen;
  antichains(n, 1, chosen, out);
  return out;
}

}  // namespace csg
