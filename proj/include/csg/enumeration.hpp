#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "csg/bigint.hpp"
#include "csg/invariants.hpp"
#include "csg/roles.hpp"

namespace csg {

enum class Engine {
  Auto,
  /// Precomputed dominance bitsets; boxes up to kMaxBitsetCandidates.
  Bitset,
  /// Prefix sums compared against the chosen rows; any box size.
  PrefixScan,
};

inline constexpr std::size_t kMaxBitsetCandidates = 8192;
/// Boxes with more profiles than this abort with CapacityError.
inline constexpr std::uint64_t kMaxBoxProfiles = std::uint64_t{1} << 30;

struct EnumSpec {
  int n = 1;
  int t = 1;
  /// Exact row count of M.
  std::optional<int> rows;
  RoleSet require;
  RoleSet forbid;
  /// Matrices are not materialized unless a role filter needs them.
  bool count_only = false;
  int jobs = 1;
  Engine engine = Engine::Auto;
};

/// Throws InputError unless 1 <= t <= n <= 64, rows >= 1 and jobs >= 1.
void check_spec(const EnumSpec& spec);

/// All class-size vectors of n into t positive parts, decreasing lex order.
std::vector<std::vector<int>> compositions(int n, int t);

using InvariantsSink = std::function<void(const Invariants&)>;

/// Streams every complete simple game matching the spec, composition-major
/// and in search order within a composition. Returns the number emitted.
/// Order does not depend on spec.jobs.
BigInt enumerate(const EnumSpec& spec, const InvariantsSink& sink);

std::vector<Invariants> enumerate_all(const EnumSpec& spec);

BigInt count(const EnumSpec& spec);

/// Counts per (t, r) for all t.
struct RowTable {
  int n = 0;
  std::map<std::pair<int, int>, BigInt> cells;

  BigInt at(int t, int r) const;
  BigInt row_total(int r) const;
  BigInt type_total(int t) const;
};

RowTable count_by_rows(int n, int jobs = 1);

}  // namespace csg
