#pragma once

#include <string>
#include <vector>

#include "tropgr/rng.hpp"
#include "tropgr/seed.hpp"
#include "tropgr/troppoint.hpp"

namespace tropgr::testing {

// random skew-symmetrizable seed: B = T·diag-compatible with random
// integer skew T and symmetrizer d via b_ij = t_ij d_i
inline ChartRef random_chart(Rng& rng, int m, int nfrozen, long maxw = 2) {
  Seed s;
  s.B.assign(m, std::vector<Rational>(m, Rational(0)));
  s.frozen.assign(m, false);
  s.d.assign(m, 1);
  for (int i = 0; i < m; ++i) s.d[i] = rng.uniform(1, 3);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      long t = rng.uniform(-maxw, maxw);
      s.B[i][j] = rat(t * s.d[i]);
      s.B[j][i] = rat(-t * s.d[j]);
    }
  for (int i = m - nfrozen; i < m; ++i) s.frozen[i] = true;
  std::vector<Label> labels;
  for (int i = 0; i < m; ++i) labels.push_back(OpaqueLabel{"v" + std::to_string(i)});
  validate_seed(s);
  return make_chart(std::move(s), std::move(labels));
}

inline TropPoint random_trop_point(Rng& rng, const ChartRef& chart) {
  TropPoint p;
  p.chart = chart;
  for (int i = 0; i < chart->seed.size(); ++i)
    p.coords.push_back(rng.rational(-5, 5, 2));
  return p;
}

inline RatPoint random_rat_point(Rng& rng, const ChartRef& chart) {
  RatPoint p;
  p.chart = chart;
  for (int i = 0; i < chart->seed.size(); ++i) p.coords.push_back(rng.positive());
  return p;
}

inline std::vector<int> mutable_indices(const ChartRef& chart) {
  std::vector<int> out;
  for (int i = 0; i < chart->seed.size(); ++i)
    if (!chart->seed.frozen[i]) out.push_back(i);
  return out;
}

inline std::vector<int> random_path(Rng& rng, const ChartRef& chart, int len) {
  auto mut = mutable_indices(chart);
  std::vector<int> path;
  for (int i = 0; i < len && !mut.empty(); ++i)
    path.push_back(mut[rng.uniform(0, static_cast<long>(mut.size()) - 1)]);
  return path;
}

// mark every coordinate inexact at the given relative grid precision, so
// long mutation chains stay term-bounded; valuation reads are unaffected
inline SeriesPoint with_precision(SeriesPoint sp, long long rel) {
  for (auto& c : sp.coords) {
    Series s = c.s;
    require(s.has_leading(), "with_precision: needs a leading term");
    long long cutoff = s.terms.front().first + rel;
    if (s.exact || s.prec > cutoff) {
      s.exact = false;
      s.prec = cutoff;
    }
    c = PosSeries(s);
  }
  return sp;
}

}  // namespace tropgr::testing
