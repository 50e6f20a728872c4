#include "csg/formulas.hpp"

#include <algorithm>
#include <cctype>

#include "csg/error.hpp"

namespace csg {

const std::vector<FormulaFamily> kAllFamilies{
    FormulaFamily::Fib,     FormulaFamily::CG_t1,    FormulaFamily::CG_t2,     FormulaFamily::CGV_t1,
    FormulaFamily::CGV_t2,  FormulaFamily::CGV_t3,   FormulaFamily::CGVN_t2,   FormulaFamily::CGVN_t3,
    FormulaFamily::CGVN_t4, FormulaFamily::CGD,      FormulaFamily::CGD_nt,    FormulaFamily::CGDN,
    FormulaFamily::CGDN_nt, FormulaFamily::CGSVSP,   FormulaFamily::CGSVSP_nt, FormulaFamily::CGVSP,
    FormulaFamily::CGVSP_nt, FormulaFamily::CGPSV,   FormulaFamily::CGPSV_nt,
};

std::string family_name(FormulaFamily f) {
  switch (f) {
    case FormulaFamily::Fib: return "fib";
    case FormulaFamily::CG_t1: return "cg_t1";
    case FormulaFamily::CG_t2: return "cg_t2";
    case FormulaFamily::CGV_t1: return "cgv_t1";
    case FormulaFamily::CGV_t2: return "cgv_t2";
    case FormulaFamily::CGV_t3: return "cgv_t3";
    case FormulaFamily::CGVN_t2: return "cgvn_t2";
    case FormulaFamily::CGVN_t3: return "cgvn_t3";
    case FormulaFamily::CGVN_t4: return "cgvn_t4";
    case FormulaFamily::CGD: return "cgd";
    case FormulaFamily::CGD_nt: return "cgd_nt";
    case FormulaFamily::CGDN: return "cgdn";
    case FormulaFamily::CGDN_nt: return "cgdn_nt";
    case FormulaFamily::CGSVSP: return "cgsvsp";
    case FormulaFamily::CGSVSP_nt: return "cgsvsp_nt";
    case FormulaFamily::CGVSP: return "cgvsp";
    case FormulaFamily::CGVSP_nt: return "cgvsp_nt";
    case FormulaFamily::CGPSV: return "cgpsv";
    case FormulaFamily::CGPSV_nt: return "cgpsv_nt";
  }
  return "?";
}

FormulaFamily parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto f : kAllFamilies)
    if (family_name(f) == lower) return f;
  throw InputError("unknown formula family '" + std::string(name) + "'");
}

int family_min_n(FormulaFamily f) {
  switch (f) {
    case FormulaFamily::Fib: return 0;
    case FormulaFamily::CGV_t2:
    case FormulaFamily::CGVN_t2: return 2;
    case FormulaFamily::CGV_t3:
    case FormulaFamily::CGVN_t3: return 4;
    case FormulaFamily::CGVN_t4: return 5;
    default: return 1;
  }
}

bool family_takes_t(FormulaFamily f) {
  switch (f) {
    case FormulaFamily::CGD_nt:
    case FormulaFamily::CGDN_nt:
    case FormulaFamily::CGSVSP_nt:
    case FormulaFamily::CGVSP_nt:
    case FormulaFamily::CGPSV_nt: return true;
    default: return false;
  }
}

BigInt fib(int k) {
  if (k < 0) throw DomainError("fib requires k ≥ 0");
  BigInt a = 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

namespace {

int one_if(bool c) { return c ? 1 : 0; }

}  // namespace

BigInt evaluate(FormulaFamily f, int n, std::optional<int> t) {
  const int min_n = family_min_n(f);
  if (n < min_n)
    throw DomainError(f == FormulaFamily::Fib ? "fib requires k ≥ 0" : family_name(f) + " requires n ≥ " + std::to_string(min_n));
  if (family_takes_t(f)) {
    if (!t) throw DomainError(family_name(f) + " requires t");
    if (*t < 1 || *t > n) throw DomainError(family_name(f) + " requires 1 ≤ t ≤ n");
  } else if (t) {
    throw DomainError(family_name(f) + " does not take t");
  }
  const BigInt N = n;
  const int tt = t.value_or(0);
  switch (f) {
    case FormulaFamily::Fib: return fib(n);
    case FormulaFamily::CG_t1: return N;
    case FormulaFamily::CG_t2: return fib(n + 6) - (N * N + 4 * N + 8);
    case FormulaFamily::CGV_t1: return 1;
    case FormulaFamily::CGV_t2: return N * (N - 1) / 2;
    case FormulaFamily::CGV_t3: return fib(n + 7) - (N * N * N + 2 * N * N + 13 * N + 26) / 2;
    case FormulaFamily::CGVN_t2: return N - 1;
    case FormulaFamily::CGVN_t3: return (N - 1) * (N - 2) * (N - 3) / 6;
    case FormulaFamily::CGVN_t4: return fib(n + 8) - (N * N * N * N - 2 * N * N * N + 26 * N * N + 47 * N + 132) / 6;
    case FormulaFamily::CGD: return 1;
    case FormulaFamily::CGD_nt: return one_if((tt == 1 && n == 1) || (tt == 2 && n >= 2));
    case FormulaFamily::CGDN: return one_if(n >= 2);
    case FormulaFamily::CGDN_nt: return one_if(tt == 2 && n >= 2);
    case FormulaFamily::CGSVSP: return n == 1 ? 0 : n == 3 ? 2 : 1;
    case FormulaFamily::CGSVSP_nt: return one_if((tt == 1 && n == 3) || (tt == 2 && n >= 2));
    case FormulaFamily::CGVSP:
    case FormulaFamily::CGPSV: return n == 1 ? 0 : n == 2 ? 2 : 1;
    case FormulaFamily::CGVSP_nt:
    case FormulaFamily::CGPSV_nt: return one_if((tt == 1 && n == 2) || (tt == 2 && n >= 2));
  }
  throw DomainError("unknown family");
}

RationalInterval golden_ratio_enclosure(int k) {
  if (k < 1) throw DomainError("golden ratio enclosure requires k ≥ 1");
  // Consecutive Fibonacci quotients lie on alternate sides of the limit.
  const BigInt fk = fib(k);
  const BigInt fk1 = fib(k + 1);
  const BigInt fk2 = fk + fk1;
  BigRational a(fk1, fk);
  BigRational b(fk2, fk1);
  if (a > b) std::swap(a, b);
  return {a, b};
}

GapBounds golden_ratio_gap(FormulaFamily numerator, FormulaFamily denominator, int n) {
  bool squared = false;
  if (numerator == FormulaFamily::CGV_t3 && denominator == FormulaFamily::CG_t2)
    squared = false;
  else if (numerator == FormulaFamily::CGVN_t4 && denominator == FormulaFamily::CG_t2)
    squared = true;
  else
    throw DomainError("no golden-ratio limit for " + family_name(numerator) + "/" + family_name(denominator));

  const BigInt num = evaluate(numerator, n);
  const BigInt den = evaluate(denominator, n);
  if (den == 0) throw DomainError(family_name(denominator) + " is zero at n = " + std::to_string(n));
  const BigRational x(num, den);

  // Width below 1/F(k)^2 with F(k) well beyond the ratio's own precision.
  auto [lo, hi] = golden_ratio_enclosure(std::max(64, 4 * n));
  if (squared) {
    lo += 1;
    hi += 1;
  }
  GapBounds g;
  g.lower = 0;
  if (x < lo) g.lower = lo - x;
  if (x > hi) g.lower = x - hi;
  const BigRational dlo = x > lo ? BigRational(x - lo) : BigRational(lo - x);
  const BigRational dhi = x > hi ? BigRational(x - hi) : BigRational(hi - x);
  g.upper = std::max(dlo, dhi);
  return g;
}

}  // namespace csg
