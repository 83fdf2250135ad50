#pragma once

#include <cstdint>
#include <map>

#include "tropgr/catalog.hpp"
#include "tropgr/cluster.hpp"
#include "tropgr/rng.hpp"
#include "tropgr/seed.hpp"
#include "tropgr/tropical.hpp"

namespace tropgr {

using TropPoint = Point<TropSF>;
using SeriesPoint = Point<SeriesSF>;
using RatPoint = Point<RatSF>;

// coordinate f -> monomial t^{-f}; with an RNG, leading coefficients are
// randomized positive rationals (for genericity), else 1
inline SeriesPoint lift_to_series(const TropPoint& p, Rng* rng = nullptr) {
  SeriesPoint out;
  out.chart = p.chart;
  out.coords.reserve(p.coords.size());
  for (auto& f : p.coords) {
    Rational c = rng ? rng->positive() : rat(1);
    out.coords.emplace_back(Series::monomial(-f, c));
  }
  return out;
}

// coordinate-wise -valuation; the series-to-tropical projection
inline TropPoint tropicalize(const SeriesPoint& x) {
  TropPoint out;
  out.chart = x.chart;
  out.coords.reserve(x.coords.size());
  for (auto& s : x.coords) out.coords.push_back(s.neg_val());
  return out;
}

inline TropPoint change_chart(const TropPoint& p, const std::vector<int>& path) {
  return apply_path(p, path, MutMode::A);
}

// per-vertex coweights, k entries each; the trace-adjusted pairing below
// makes every operation insensitive to all-ones shifts
struct CoweightVector {
  std::vector<std::vector<Rational>> lam;
};

struct ScalingVector {
  std::vector<Rational> c;
};

// fundamental-coweight pairing omega_j . lam = lam_1+..+lam_j - (j/k) sum(lam)
inline Rational omega_pair(int j, const std::vector<Rational>& lam) {
  int k = static_cast<int>(lam.size());
  require(0 <= j && j <= k, "omega_pair: index out of range");
  Rational head(0), total(0);
  for (int i = 0; i < k; ++i) {
    total += lam[i];
    if (i < j) head += lam[i];
  }
  return head - rat(j) * total / rat(k);
}

// flag-chart coordinate at label m gains sum_v omega_{m(v)} . lam_v
inline TropPoint act_H(const TropPoint& x, const CoweightVector& lm) {
  TropPoint out = x;
  for (int i = 0; i < x.chart->seed.size(); ++i) {
    auto* f = std::get_if<FlagMonomialLabel>(&x.chart->labels[i]);
    require(f != nullptr, "act_H: chart is not a flag chart");
    require(static_cast<int>(lm.lam.size()) == f->n, "act_H: coweight count mismatch");
    for (auto& [v, e] : f->exp) out.coords[i] += omega_pair(e, lm.lam[v - 1]);
  }
  return out;
}

// the scaling vector that matches act_H across the first-vector projection
inline ScalingVector psi_map(const CoweightVector& lm) {
  ScalingVector out;
  for (auto& l : lm.lam) out.c.push_back(omega_pair(1, l));
  return out;
}

// Plucker coordinate at J gains sum_{i in J} c_i
inline TropPoint act_T(const TropPoint& y, const ScalingVector& c) {
  TropPoint out = y;
  for (int i = 0; i < y.chart->seed.size(); ++i) {
    auto* J = std::get_if<PluckerLabel>(&y.chart->labels[i]);
    require(J != nullptr, "act_T: chart is not a Plucker chart");
    for (int v : J->J) out.coords[i] += c.c.at(v - 1);
  }
  return out;
}

inline std::map<PluckerLabel, Rational> act_T(const std::map<PluckerLabel, Rational>& P,
                                              const ScalingVector& c) {
  auto out = P;
  for (auto& [J, val] : out)
    for (int v : J.J) val += c.c.at(v - 1);
  return out;
}

// k x n series matrix whose rectangle-chart minors equal the given
// coordinates exactly; requires the chart of grassmannian_seed(k,n)
Mat<Series> realize_grassmannian(const SeriesPoint& y);

// flag configuration over the series field whose triangulation-chart
// coordinates reproduce the given point; divisions are truncated, so
// coordinates carry finite precision and failures are loud
FlagConfig<Series> realize_flags(const SeriesPoint& x);

// all C(n,k) tropicalized Plucker coordinates of a rectangle-chart point,
// computed through a monomial lift (exact); retries with randomized leading
// coefficients on degenerate lifts
std::map<PluckerLabel, Rational> plucker_vector(const TropPoint& y,
                                                std::uint64_t rng_seed = 7);

// tropical projection to the rectangle chart: label read-off where the
// pulled-back labels are chart coordinates, else the series oracle through
// a realized flag configuration
TropPoint pushforward_pi(const TropPoint& x, std::uint64_t rng_seed = 7);

}  // namespace tropgr
