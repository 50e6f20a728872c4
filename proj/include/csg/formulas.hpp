#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csg/bigint.hpp"

namespace csg {

enum class FormulaFamily {
  Fib,
  CG_t1,
  CG_t2,
  CGV_t1,
  CGV_t2,
  CGV_t3,
  CGVN_t2,
  CGVN_t3,
  CGVN_t4,
  CGD,
  CGD_nt,
  CGDN,
  CGDN_nt,
  CGSVSP,
  CGSVSP_nt,
  CGVSP,
  CGVSP_nt,
  CGPSV,
  CGPSV_nt,
};

extern const std::vector<FormulaFamily> kAllFamilies;

/// Lower-case name, e.g. "cgv_t3".
std::string family_name(FormulaFamily f);
/// Case-insensitive; throws InputError on unknown names.
FormulaFamily parse_family(std::string_view name);

/// Smallest n accepted by evaluate(). The _nt families also take 1 <= t <= n.
int family_min_n(FormulaFamily f);
bool family_takes_t(FormulaFamily f);

/// F(k); throws DomainError for k < 0.
BigInt fib(int k);

/// Exact value. Throws DomainError outside the family's domain, naming the
/// violated constraint.
BigInt evaluate(FormulaFamily f, int n, std::optional<int> t = std::nullopt);

/// Exact bounds on |num(n)/den(n) - target|, target being the golden ratio
/// for (CGV_t3, CG_t2) and its square for (CGVN_t4, CG_t2).
struct GapBounds {
  BigRational lower;
  BigRational upper;
};

GapBounds golden_ratio_gap(FormulaFamily numerator, FormulaFamily denominator, int n);

/// [lo, hi] containing the golden ratio with hi - lo < 1 / F(k)^2.
struct RationalInterval {
  BigRational lo;
  BigRational hi;
};

RationalInterval golden_ratio_enclosure(int k);

}  // namespace csg
