#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropgr/rational.hpp"

namespace tropgr {

// Laurent series in t with rational exponents on a uniform grid: a term
// (e, c) represents c * t^(e/ram). Invariants: terms sorted by exponent,
// no zero coefficients, and when inexact every stored exponent < prec.
// `exact` means all coefficients are known (a Laurent polynomial);
// otherwise coefficients at grid exponents >= prec are unknown.
struct Series {
  long ram = 1;
  std::vector<std::pair<long long, Rational>> terms;
  bool exact = true;
  long long prec = 0;  // grid cutoff, meaningful only when !exact

  static Series zero() { return Series{}; }
  static Series constant(const Rational& c);
  // c * t^e; ramification taken from den(e)
  static Series monomial(const Rational& e, const Rational& c);

  bool is_zero_known() const { return exact && terms.empty(); }
  bool has_leading() const { return !terms.empty(); }

  // valuation in t units; error "indeterminate-valuation" when no term
  Rational valuation() const;
  Rational neg_val() const { return -valuation(); }
  const Rational& leading_coeff() const;
  bool positive_leading() const;

  // precision bound in t units (nullopt = exact)
  std::optional<Rational> precision_t() const;

  std::string str() const;  // human-readable, for diagnostics
};

// default relative precision for truncating divisions, in grid units
// above the valuation (24 unless overridden at startup via CLI --precision)
long long series_default_precision();
void set_series_default_precision(long long grid_units);

Series sadd(const Series& a, const Series& b);
Series ssub(const Series& a, const Series& b);
Series sneg(const Series& a);
Series smul(const Series& a, const Series& b);
// reciprocal; exact when `a` is a single term, else truncated
Series sinv(const Series& a);
Series sdiv(const Series& a, const Series& b);
Series spow(const Series& a, long e);

// equality of all coefficients below the common precision bound
bool series_eq(const Series& a, const Series& b);

// rescale both to a common ramification (lcm)
void unify_ram(Series& a, Series& b);
Series with_ram(const Series& a, long ram);

// positive-leading refinement: the semifield K_{>0}. Construction and
// every operation assert the invariant (div may truncate; the leading
// term is always known).
struct PosSeries {
  Series s;
  PosSeries() : s(Series::constant(rat(1))) {}
  explicit PosSeries(Series v);
  Rational neg_val() const { return s.neg_val(); }
};

PosSeries padd(const PosSeries& a, const PosSeries& b);
PosSeries pmul(const PosSeries& a, const PosSeries& b);
PosSeries pdiv(const PosSeries& a, const PosSeries& b);

}  // namespace tropgr
