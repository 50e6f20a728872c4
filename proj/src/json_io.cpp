#include <algorithm>

#include "csg/error.hpp"
#include "csg/json_io.hpp"

namespace csg {

std::string canonical(const Json& j) { return j.dump(); }

Json game_to_json(const SimpleGame& game) {
  Json mw = Json::array();
  for (Coalition c : game.min_winning()) mw.push_back(c.players());
  return Json{{"n", game.n()}, {"min_winning", mw}};
}

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

}  // namespace

SimpleGame game_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 1 || n > kMaxPlayers) throw InputError("n must be in 1..64");
  const Json& mw = field(j, "min_winning");
  if (!mw.is_array()) throw InputError("min_winning must be an array");
  std::vector<Coalition> raw;
  for (const auto& c : mw) {
    auto players = int_array(c, "coalition");
    for (int p : players)
      if (p < 1 || p > n) throw InputError("player " + std::to_string(p) + " outside 1.." + std::to_string(n));
    raw.push_back(Coalition::from_players(players));
  }
  return normalize_min_winning(n, raw);
}

Json invariants_to_json(const Invariants& inv) { return Json{{"n_bar", inv.n_bar()}, {"M", inv.rows()}}; }

std::pair<std::vector<int>, Matrix> raw_invariants_from_json(const Json& j) {
  auto n_bar = int_array(field(j, "n_bar"), "n_bar");
  const Json& m = field(j, "M");
  if (!m.is_array()) throw InputError("M must be an array of rows");
  Matrix rows;
  for (const auto& row : m) rows.push_back(int_array(row, "M row"));
  return {std::move(n_bar), std::move(rows)};
}

Invariants invariants_from_json(const Json& j) {
  auto [n_bar, rows] = raw_invariants_from_json(j);
  return make_invariants(n_bar, rows);
}

BigRational parse_rational(const std::string& text) {
  auto bad = [&] { return InputError("not an exact decimal or fraction: \"" + text + "\""); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    auto digits = [](const std::string& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!digits(num) || !digits(den)) throw bad();
    BigInt d(den);
    if (d == 0) throw bad();
    return BigRational(BigInt(num), d);
  }
  std::string s = text;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  const auto dot = s.find('.');
  std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw bad();
  for (char c : whole + frac)
    if (c < '0' || c > '9') throw bad();
  BigInt num(whole.empty() ? std::string("0") : whole);
  BigInt den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  BigRational r(num, den);
  return negative ? BigRational(-r) : r;
}

namespace {

BigRational rational_value(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long long>());
  throw InputError("weights and quota must be decimal strings or integers");
}

}  // namespace

WeightedRepresentation weighted_from_json(const Json& j) {
  WeightedRepresentation rep;
  rep.quota = rational_value(field(j, "quota"));
  const Json& w = field(j, "weights");
  if (!w.is_array()) throw InputError("weights must be an array");
  for (const auto& v : w) rep.weights.push_back(rational_value(v));
  return rep;
}

Json profile_to_json(const Profile& p) { return Json(p.counts()); }

namespace {

Json role_list(RoleSet s) {
  Json out = Json::array();
  for (Role r : s.roles()) out.push_back(role_name(r));
  return out;
}

}  // namespace

Json role_report_to_json(const RoleReport& rep) {
  Json per_player = Json::object();
  for (const auto& [p, s] : rep.per_player) per_player[std::to_string(p)] = role_list(s);
  Json per_class = Json::object();
  for (const auto& [c, s] : rep.per_class) per_class[std::to_string(c)] = role_list(s);
  Json flags = Json::object();
  for (Role r : kAllRoles) flags[role_name(r)] = rep.present.contains(r);
  return Json{{"per_player", per_player}, {"per_class", per_class}, {"class_count", rep.class_count}, {"flags", flags}};
}

Json violations_to_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const auto& viol : v) out.push_back(Json{{"condition", viol.condition}, {"detail", viol.detail}});
  return out;
}

GameInput parse_game_input(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("n_bar")) return invariants_from_json(j);
  if (j.contains("min_winning")) return game_from_json(j);
  if (j.contains("quota")) return weighted_from_json(j);
  throw InputError("object is neither a game, an invariant pair, nor a weighted representation");
}

}  // namespace csg
