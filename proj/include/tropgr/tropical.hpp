#pragma once

#include <algorithm>

#include "tropgr/rational.hpp"
#include "tropgr/series.hpp"

namespace tropgr {

// Semifields share one interface so subtraction-free formulas (cluster
// exchange, p-map, coordinate labels) evaluate uniformly:
//   Value, add (semifield plus), mul, div, one(), pow(v, e) for e in Z.

// (Q, max, +): the target of coordinate-wise tropicalization.
struct TropSF {
  using Value = Rational;
  static Value add(const Value& a, const Value& b) { return std::max(a, b); }
  static Value mul(const Value& a, const Value& b) { return a + b; }
  static Value div(const Value& a, const Value& b) { return a - b; }
  static Value one() { return Rational(0); }
  static Value pow(const Value& a, long e) { return Value(rat(e) * a); }
};

// (Q_{>0}, +, *): totally positive rational points.
struct RatSF {
  using Value = Rational;
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value div(const Value& a, const Value& b) {
    require(b != 0, "semifield: division by zero");
    return a / b;
  }
  static Value one() { return Rational(1); }
  static Value pow(const Value& a, long e) {
    Value out = one(), base = e < 0 ? div(one(), a) : a;
    for (long i = 0, n = e < 0 ? -e : e; i < n; ++i) out = mul(out, base);
    return out;
  }
};

// Laurent series with positive leading coefficient: points over K_{>0},
// whose term-by-term valuations realize tropical points.
struct SeriesSF {
  using Value = PosSeries;
  static Value add(const Value& a, const Value& b) { return padd(a, b); }
  static Value mul(const Value& a, const Value& b) { return pmul(a, b); }
  static Value div(const Value& a, const Value& b) { return pdiv(a, b); }
  static Value one() { return PosSeries(); }
  static Value pow(const Value& a, long e) { return Value(spow(a.s, e)); }
};

}  // namespace tropgr
