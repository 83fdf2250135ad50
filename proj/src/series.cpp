#include "tropgr/series.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>

namespace tropgr {

namespace {

std::atomic<long long> g_default_prec{24};

// drop zero coefficients and, when inexact, terms at/above the cutoff
void normalize(Series& s) {
  std::vector<std::pair<long long, Rational>> out;
  out.reserve(s.terms.size());
  for (auto& [e, c] : s.terms) {
    if (c == 0) continue;
    if (!s.exact && e >= s.prec) continue;
    out.emplace_back(e, c);
  }
  s.terms = std::move(out);
}

long long val_grid_bound(const Series& s) {
  // lower bound for the valuation grid exponent (= actual when a term exists)
  if (!s.terms.empty()) return s.terms.front().first;
  if (!s.exact) return s.prec;
  fail("indeterminate-valuation: exact zero has no valuation");
}

}  // namespace

long long series_default_precision() { return g_default_prec.load(); }
void set_series_default_precision(long long g) {
  require(g > 0, "series precision must be positive");
  g_default_prec.store(g);
}

Series Series::constant(const Rational& c) {
  Series s;
  if (c != 0) s.terms.emplace_back(0, c);
  return s;
}

Series Series::monomial(const Rational& e, const Rational& c) {
  Series s;
  s.ram = static_cast<long>(e.get_den().get_si());
  if (c != 0) {
    Rational num = e * s.ram;
    s.terms.emplace_back(to_long(num), c);
  }
  return s;
}

Rational Series::valuation() const {
  if (terms.empty())
    fail(exact ? "indeterminate-valuation: exact zero has no valuation"
               : "indeterminate-valuation: all coefficients vanish within precision");
  return rat(static_cast<long>(terms.front().first), ram);
}

const Rational& Series::leading_coeff() const {
  if (terms.empty()) fail("indeterminate-valuation: no leading term");
  return terms.front().second;
}

bool Series::positive_leading() const {
  return !terms.empty() && sign(terms.front().second) > 0;
}

std::optional<Rational> Series::precision_t() const {
  if (exact) return std::nullopt;
  return rat(static_cast<long>(prec), ram);
}

std::string Series::str() const {
  std::ostringstream os;
  if (terms.empty()) os << "0";
  bool first = true;
  for (auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_str(c) << ")t^(" << e << "/" << ram << ")";
  }
  if (!exact) os << " + O(t^(" << prec << "/" << ram << "))";
  return os.str();
}

Series with_ram(const Series& a, long ram) {
  require(ram % a.ram == 0, "ramification refinement must be a multiple");
  long f = ram / a.ram;
  if (f == 1) return a;
  Series out = a;
  out.ram = ram;
  for (auto& [e, c] : out.terms) e *= f;
  if (!out.exact) out.prec *= f;
  return out;
}

void unify_ram(Series& a, Series& b) {
  if (a.ram == b.ram) return;
  long l = std::lcm(a.ram, b.ram);
  a = with_ram(a, l);
  b = with_ram(b, l);
}

Series sadd(const Series& a0, const Series& b0) {
  Series a = a0, b = b0;
  unify_ram(a, b);
  Series out;
  out.ram = a.ram;
  out.exact = a.exact && b.exact;
  if (!out.exact) {
    long long pa = a.exact ? std::numeric_limits<long long>::max() : a.prec;
    long long pb = b.exact ? std::numeric_limits<long long>::max() : b.prec;
    out.prec = std::min(pa, pb);
  }
  auto ia = a.terms.begin(), ib = b.terms.begin();
  while (ia != a.terms.end() || ib != b.terms.end()) {
    if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) {
      out.terms.push_back(*ia++);
    } else if (ia == a.terms.end() || ib->first < ia->first) {
      out.terms.push_back(*ib++);
    } else {
      Rational c = ia->second + ib->second;
      if (c != 0) out.terms.emplace_back(ia->first, c);
      ++ia;
      ++ib;
    }
  }
  normalize(out);
  return out;
}

Series sneg(const Series& a) {
  Series out = a;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

Series ssub(const Series& a, const Series& b) { return sadd(a, sneg(b)); }

Series smul(const Series& a0, const Series& b0) {
  Series a = a0, b = b0;
  unify_ram(a, b);
  Series out;
  out.ram = a.ram;
  if (a.is_zero_known() || b.is_zero_known()) return Series{.ram = a.ram};
  out.exact = a.exact && b.exact;
  if (!out.exact) {
    // unknown tail of one factor enters at its cutoff plus the other's valuation
    long long inf = std::numeric_limits<long long>::max();
    long long pa = a.exact ? inf : a.prec + val_grid_bound(b);
    long long pb = b.exact ? inf : b.prec + val_grid_bound(a);
    out.prec = std::min(pa, pb);
  }
  std::vector<std::pair<long long, Rational>> acc;
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) acc.emplace_back(ea + eb, ca * cb);
  std::sort(acc.begin(), acc.end(),
            [](auto& x, auto& y) { return x.first < y.first; });
  for (auto& [e, c] : acc) {
    if (!out.terms.empty() && out.terms.back().first == e)
      out.terms.back().second += c;
    else
      out.terms.emplace_back(e, c);
  }
  normalize(out);
  return out;
}

Series sinv(const Series& a) {
  require(a.has_leading(),
          "indeterminate-valuation: cannot invert a series with unknown "
          "leading term");
  long long v = a.terms.front().first;
  const Rational& lc = a.terms.front().second;
  if (a.terms.size() == 1 && a.exact) {  // monomial: exact reciprocal
    Series out;
    out.ram = a.ram;
    out.terms.emplace_back(-v, 1 / lc);
    return out;
  }
  // a = lc t^v (1 + u); invert by geometric series to relative precision
  long long rel = a.exact ? series_default_precision() : a.prec - v;
  Series u;
  u.ram = a.ram;
  for (size_t i = 1; i < a.terms.size(); ++i)
    u.terms.emplace_back(a.terms[i].first - v, a.terms[i].second / lc);
  if (u.terms.empty()) {  // inexact monomial: reciprocal known to same relative precision
    Series out;
    out.ram = a.ram;
    out.terms.emplace_back(-v, 1 / lc);
    out.exact = false;
    out.prec = -v + rel;
    return out;
  }
  Series geo = Series::constant(rat(1));
  geo.ram = a.ram;
  geo.exact = false;
  geo.prec = rel;
  Series upow = geo;  // running (-u)^m, truncated
  long long uval = u.terms.front().first;
  Series numu = sneg(u);
  numu.exact = false;
  numu.prec = rel;
  normalize(numu);
  for (long long reach = uval; reach < rel; reach += uval) {
    upow = smul(upow, numu);
    upow.exact = false;
    upow.prec = rel;
    normalize(upow);
    geo = sadd(geo, upow);
  }
  Series lead;
  lead.ram = a.ram;
  lead.terms.emplace_back(-v, 1 / lc);
  Series out = smul(lead, geo);
  out.exact = false;
  out.prec = -v + rel;
  normalize(out);
  return out;
}

Series sdiv(const Series& a, const Series& b) { return smul(a, sinv(b)); }

Series spow(const Series& a, long e) {
  if (e < 0) return sinv(spow(a, -e));
  Series out = Series::constant(rat(1));
  Series base = a;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) out = smul(out, base);
    base = (n >>= 1) ? smul(base, base) : base;
  }
  return out;
}

bool series_eq(const Series& a0, const Series& b0) {
  Series a = a0, b = b0;
  unify_ram(a, b);
  long long inf = std::numeric_limits<long long>::max();
  long long common = std::min(a.exact ? inf : a.prec, b.exact ? inf : b.prec);
  auto below = [&](const Series& s) {
    std::vector<std::pair<long long, Rational>> v;
    for (auto& t : s.terms)
      if (t.first < common) v.push_back(t);
    return v;
  };
  return below(a) == below(b);
}

PosSeries::PosSeries(Series v) : s(std::move(v)) {
  require(s.positive_leading(),
          "positive-series: leading coefficient must be known and positive");
}

PosSeries padd(const PosSeries& a, const PosSeries& b) {
  return PosSeries(sadd(a.s, b.s));
}
PosSeries pmul(const PosSeries& a, const PosSeries& b) {
  return PosSeries(smul(a.s, b.s));
}
PosSeries pdiv(const PosSeries& a, const PosSeries& b) {
  return PosSeries(sdiv(a.s, b.s));
}

}  // namespace tropgr
