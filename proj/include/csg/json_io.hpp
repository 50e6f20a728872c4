#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "csg/invariants.hpp"
#include "csg/roles.hpp"
#include "csg/simple_game.hpp"

namespace csg {

using Json = nlohmann::json;

/// {"min_winning":[[1,2],[1,3]],"n":3}
Json game_to_json(const SimpleGame& game);
SimpleGame game_from_json(const Json& j);

/// {"M":[[2,0],[0,3]],"n_bar":[2,3]}
Json invariants_to_json(const Invariants& inv);
/// Validates; throws ValidationError with the violated conditions.
Invariants invariants_from_json(const Json& j);
/// Raw (n̄, M) without validation, for the validate command.
std::pair<std::vector<int>, Matrix> raw_invariants_from_json(const Json& j);

/// {"quota":"12","weights":["4","4",...]}; decimals or p/q strings, or plain numbers.
WeightedRepresentation weighted_from_json(const Json& j);
BigRational parse_rational(const std::string& text);

Json profile_to_json(const Profile& p);
Json role_report_to_json(const RoleReport& rep);
Json violations_to_json(const std::vector<Violation>& v);

/// Any of the three object shapes the CLI accepts where a game is expected.
using GameInput = std::variant<SimpleGame, Invariants, WeightedRepresentation>;
GameInput parse_game_input(const Json& j);

/// Compact dump with sorted keys; byte-stable for golden files.
std::string canonical(const Json& j);

}  // namespace csg
