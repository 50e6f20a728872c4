#include "csg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "csg/enumeration.hpp"
#include "csg/error.hpp"
#include "csg/formulas.hpp"
#include "csg/json_io.hpp"
#include "csg/roles.hpp"
#include "csg/transforms.hpp"
#include "csg/verify.hpp"

namespace csg::cli {

namespace {

struct VerifyFailed {};

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

SimpleGame as_game(const GameInput& g) {
  if (const auto* s = std::get_if<SimpleGame>(&g)) return *s;
  if (const auto* inv = std::get_if<Invariants>(&g)) return expand(*inv);
  return from_weighted(std::get<WeightedRepresentation>(g));
}

Invariants as_invariants(const GameInput& g) {
  if (const auto* inv = std::get_if<Invariants>(&g)) return *inv;
  auto e = extract(as_game(g));
  if (!e) throw ValidationError("game is not complete");
  return *e;
}

RoleSet parse_roles(const std::vector<std::string>& names) {
  RoleSet s;
  for (const auto& name : names) {
    auto r = parse_role(name);
    if (!r) throw CLI::ValidationError("unknown role '" + name + "'");
    s.insert(*r);
  }
  return s;
}

std::string filter_label(RoleSet require, RoleSet forbid) {
  if (require.empty() && forbid.empty()) return "none";
  std::string s;
  for (Role r : require.roles()) s += (s.empty() ? "" : "+") + role_name(r);
  for (Role r : forbid.roles()) s += (s.empty() ? "!" : "+!") + role_name(r);
  return s;
}

Json count_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

struct Options {
  std::string input = "-";
  int n = 0;
  int t = 0;
  int rows = 0;
  std::vector<std::string> with;
  std::vector<std::string> without;
  bool count_only = false;
  bool by_rows = false;
  int jobs = 1;
  std::string format;
  std::string bijection;
  bool inverse = false;
  std::string family;
  std::string suite;
  int max_n = 6;
};

EnumSpec make_spec(const Options& o, CLI::App* sub, int t) {
  EnumSpec spec;
  spec.n = o.n;
  spec.t = t;
  if (sub->count("--rows") != 0) spec.rows = o.rows;
  spec.require = parse_roles(o.with);
  spec.forbid = parse_roles(o.without);
  spec.count_only = o.count_only;
  spec.jobs = o.jobs;
  return spec;
}

void write_count_csv_header(std::ostream& out) { out << "n,t,r,filter,count\n"; }

void write_count_row(std::ostream& out, const EnumSpec& spec, const BigInt& c, std::string_view format) {
  const std::string r = spec.rows ? std::to_string(*spec.rows) : "any";
  const std::string filter = filter_label(spec.require, spec.forbid);
  if (format == "jsonl") {
    Json row{{"n", spec.n}, {"t", spec.t}, {"r", r}, {"filter", filter}, {"count", count_json(c)}};
    if (spec.rows) row["r"] = *spec.rows;
    out << canonical(row) << '\n';
  } else {
    out << spec.n << ',' << spec.t << ',' << r << ',' << filter << ',' << c.str() << '\n';
  }
}

int dispatch(CLI::App& app, const Options& o, std::istream& in, std::ostream& out) {
  auto used = [&](const char* name) { return app.got_subcommand(name); };
  auto sub = [&](const char* name) { return app.get_subcommand(name); };

  if (used("validate")) {
    const Json j = read_json(o.input, in);
    if (j.is_object() && j.contains("n_bar")) {
      auto [n_bar, rows] = raw_invariants_from_json(j);
      auto res = validate(n_bar, rows);
      if (const auto* inv = std::get_if<Invariants>(&res)) {
        out << canonical(Json{{"valid", true}, {"invariants", invariants_to_json(*inv)}}) << '\n';
        return kOk;
      }
      const auto& v = std::get<std::vector<Violation>>(res);
      out << canonical(Json{{"valid", false}, {"violations", violations_to_json(v)}}) << '\n';
      std::string msg = "invalid invariants:";
      for (const auto& viol : v) msg += " " + viol.condition;
      throw ValidationError(msg);
    }
    const SimpleGame g = as_game(parse_game_input(j));
    out << canonical(Json{{"valid", true}, {"complete", extract(g).has_value()}}) << '\n';
    return kOk;
  }
  if (used("expand")) {
    out << canonical(game_to_json(as_game(parse_game_input(read_json(o.input, in))))) << '\n';
    return kOk;
  }
  if (used("extract")) {
    out << canonical(invariants_to_json(as_invariants(parse_game_input(read_json(o.input, in))))) << '\n';
    return kOk;
  }
  if (used("classify")) {
    const GameInput g = parse_game_input(read_json(o.input, in));
    const RoleReport rep =
        std::holds_alternative<Invariants>(g) ? structural_roles(std::get<Invariants>(g)) : semantic_roles(as_game(g));
    out << canonical(role_report_to_json(rep)) << '\n';
    return kOk;
  }
  if (used("dual")) {
    const GameInput g = parse_game_input(read_json(o.input, in));
    if (const auto* inv = std::get_if<Invariants>(&g))
      out << canonical(invariants_to_json(dual_inv(*inv))) << '\n';
    else
      out << canonical(game_to_json(dual(as_game(g)))) << '\n';
    return kOk;
  }
  if (used("map")) {
    const auto id = parse_bijection(o.bijection);
    if (!id) throw CLI::ValidationError("unknown bijection '" + o.bijection + "'");
    const Invariants inv = as_invariants(parse_game_input(read_json(o.input, in)));
    const Invariants res = o.inverse ? apply_inverse(*id, inv) : apply_bijection(*id, inv);
    out << canonical(invariants_to_json(res)) << '\n';
    return kOk;
  }
  if (used("enumerate")) {
    const EnumSpec spec = make_spec(o, sub("enumerate"), o.t);
    const std::string format = o.format.empty() ? "jsonl" : o.format;
    if (o.count_only || format == "csv") {
      const BigInt c = count(spec);
      if (format == "csv") write_count_csv_header(out);
      write_count_row(out, spec, c, format);
      return kOk;
    }
    enumerate(spec, [&](const Invariants& inv) { out << canonical(invariants_to_json(inv)) << '\n'; });
    return kOk;
  }
  if (used("count")) {
    CLI::App* s = sub("count");
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format == "csv") write_count_csv_header(out);
    if (o.by_rows) {
      if (s->count("--t") != 0 || s->count("--rows") != 0 || !o.with.empty() || !o.without.empty())
        throw CLI::ValidationError("--by-rows cannot be combined with --t, --rows, --with or --without");
      const RowTable table = count_by_rows(o.n, o.jobs);
      for (const auto& [key, c] : table.cells) {
        EnumSpec spec;
        spec.n = o.n;
        spec.t = key.first;
        spec.rows = key.second;
        write_count_row(out, spec, c, format);
      }
      return kOk;
    }
    const int t_lo = s->count("--t") != 0 ? o.t : 1;
    const int t_hi = s->count("--t") != 0 ? o.t : o.n;
    for (int t = t_lo; t <= t_hi; ++t) {
      EnumSpec spec = make_spec(o, s, t);
      spec.count_only = true;
      write_count_row(out, spec, count(spec), format);
    }
    return kOk;
  }
  if (used("formula")) {
    CLI::App* s = sub("formula");
    std::optional<int> t;
    if (s->count("--t") != 0) t = o.t;
    out << evaluate(parse_family(o.family), o.n, t).str() << '\n';
    return kOk;
  }
  if (used("verify")) {
    const SuiteResult res = run_suite(o.suite, o.max_n, o.jobs);
    out << res.csv;
    if (!res.passed) throw VerifyFailed{};
    return kOk;
  }
  if (used("audit")) {
    RoleAudit audit;
    for (int n = 1; n <= o.max_n; ++n) {
      for (int t = 1; t <= n; ++t) {
        EnumSpec spec;
        spec.n = n;
        spec.t = t;
        spec.jobs = o.jobs;
        enumerate(spec, [&](const Invariants& inv) { audit.add(inv); });
      }
    }
    out << audit.to_csv();
    return kOk;
  }
  throw CLI::CallForHelp();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complete simple games: invariants, roles, transforms, enumeration and counting formulas", "csg"};
  app.require_subcommand(1, 1);
  Options o;

  auto input = [&](CLI::App* s) { s->add_option("input", o.input, "JSON file, or - for standard input"); };
  auto jobs = [&](CLI::App* s) { s->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber); };

  input(app.add_subcommand("validate", "Check invariants or a game"));
  input(app.add_subcommand("expand", "Invariants to the extensional game"));
  input(app.add_subcommand("extract", "Game to its invariants"));
  input(app.add_subcommand("classify", "Role report"));
  input(app.add_subcommand("dual", "Dual game or dual invariants"));

  auto* map = app.add_subcommand("map", "Apply a bijection between role classes");
  input(map);
  map->add_option("--bijection,-b", o.bijection, "f, g, h, k, h1 or h2")->required();
  map->add_flag("--inverse", o.inverse, "Apply the inverse map");

  auto filters = [&](CLI::App* s) {
    s->add_option("--n", o.n, "Players")->required()->check(CLI::Range(1, 64));
    s->add_option("--rows,-r", o.rows, "Exact row count")->check(CLI::PositiveNumber);
    s->add_option("--with", o.with, "Required role (repeatable)");
    s->add_option("--without", o.without, "Forbidden role (repeatable)");
    jobs(s);
  };
  auto* en = app.add_subcommand("enumerate", "Stream complete simple games");
  filters(en);
  en->add_option("--t", o.t, "Types")->required()->check(CLI::PositiveNumber);
  en->add_flag("--count-only", o.count_only, "Print the count only");
  en->add_option("--format", o.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));

  auto* cnt = app.add_subcommand("count", "Count complete simple games");
  filters(cnt);
  cnt->add_option("--t", o.t, "Types (all when omitted)")->check(CLI::PositiveNumber);
  cnt->add_flag("--by-rows", o.by_rows, "Table over (t, r)");
  cnt->add_option("--format", o.format, "csv or jsonl")->check(CLI::IsMember({"jsonl", "csv"}));

  auto* fo = app.add_subcommand("formula", "Evaluate a closed form");
  fo->add_option("--family", o.family, "Formula family")->required();
  fo->add_option("--n", o.n, "n")->required();
  fo->add_option("--t", o.t, "t, for the per-type families");

  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  ve->add_option("--max-n", o.max_n, "Largest n")->check(CLI::PositiveNumber);
  jobs(ve);

  auto* au = app.add_subcommand("audit", "Tally role combinations over all games up to --max-n");
  au->add_option("--max-n", o.max_n, "Largest n")->check(CLI::Range(1, 10));
  jobs(au);

  std::vector<const char*> argv{"csg"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kUsage;
  }

  try {
    return dispatch(app, o, in, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kUsage;
  } catch (const VerifyFailed&) {
    err << "error: verification suite '" << o.suite << "' has mismatches\n";
    return kVerifyFailed;
  } catch (const CapacityError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kInvalid;
  }
}

}  // namespace csg::cli
