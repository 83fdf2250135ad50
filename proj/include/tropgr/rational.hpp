#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tropgr/error.hpp"

namespace tropgr {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced, positive denominator) under its own operators; the helpers
// below cover construction, integer parts and printing.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  require(d != 0, "rational: zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational rat_parse(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) fail("rational: unparsable '" + s + "'");
  q.canonicalize();
  require(q.get_den() != 0, "rational: zero denominator");
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
  require(is_integer(q), "rational: not an integer: " + q.get_str());
  require(q.get_num().fits_slong_p(), "rational: integer overflow");
  return q.get_num().get_si();
}

// floor(q) as an exact integer rational
inline Rational rat_floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(f);
}

inline Rational rat_ceil(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(c);
}

inline int sign(const Rational& q) { return sgn(q); }

inline std::string rat_str(const Rational& q) { return q.get_str(); }

// least common multiple of positive denominators
inline long lcm_den(long acc, const Rational& q) {
  mpz_class l;
  mpz_class a(acc);
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), q.get_den().get_mpz_t());
  require(l.fits_slong_p(), "rational: denominator lcm overflow");
  return l.get_si();
}

}  // namespace tropgr
