#pragma once

#include <string>
#include <vector>

#include "csg/simple_game.hpp"

namespace csg {

/// CSV table plus overall verdict of one verification suite.
struct SuiteResult {
  std::string csv;
  bool passed = true;
};

/// formulas, bijections, duality, oracle, rows, sequences.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite or max_n < 1.
SuiteResult run_suite(const std::string& name, int max_n, int jobs = 1);

inline constexpr int kMaxExtensionalPlayers = 5;

/// Every simple game on n players (nonempty antichains of nonempty
/// coalitions), in generation order. Throws CapacityError above
/// kMaxExtensionalPlayers.
std::vector<SimpleGame> all_simple_games(int n);

}  // namespace csg
