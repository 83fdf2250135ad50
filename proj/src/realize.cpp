#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropgr/triangulation.hpp"
#include "tropgr/troppoint.hpp"

namespace tropgr {

namespace {

// restore the global division precision on scope exit
struct PrecGuard {
  long long saved;
  PrecGuard() : saved(series_default_precision()) {}
  ~PrecGuard() { set_series_default_precision(saved); }
  PrecGuard(const PrecGuard&) = delete;
};


// lift-and-run with escalation: unit coefficients first, then randomized
// leading coefficients, then randomized with 4x and 16x division precision
template <class Fn>
auto with_lift_retries(const TropPoint& p, std::uint64_t rng_seed, Fn&& fn) {
  PrecGuard guard;
  Rng rng(rng_seed);
  std::string last = "no attempt ran";
  for (int attempt = 0; attempt < 4; ++attempt) {
    long long scale = attempt <= 2 ? (attempt == 2 ? 4 : 1) : 16;
    set_series_default_precision(guard.saved * scale);
    try {
      SeriesPoint sp = lift_to_series(p, attempt == 0 ? nullptr : &rng);
      return fn(sp);
    } catch (const Error& e) {
      last = e.what();
    }
  }
  fail("realize: lift retries exhausted: " + last);
}

}  // namespace

Mat<Series> realize_grassmannian(const SeriesPoint& y) {
  const auto& labels = y.chart->labels;
  require(!labels.empty(), "realize: empty chart");
  auto* head = std::get_if<PluckerLabel>(&labels[0]);
  require(head != nullptr, "realize: chart is not a Plucker chart");
  int k = static_cast<int>(head->J.size());
  int n = 0;
  for (auto& l : labels) {
    auto* p = std::get_if<PluckerLabel>(&l);
    require(p != nullptr, "realize: chart is not a Plucker chart");
    require(static_cast<int>(p->J.size()) == k, "realize: mixed label sizes");
    n = std::max(n, p->J.back());
  }
  auto ref = grassmannian_seed(k, n);
  require(ref->seed.size() == y.chart->seed.size(), "realize: not the rectangle chart");
  for (auto& l : ref->labels)
    require(y.chart->find(l) >= 0, "realize: not the rectangle chart");

  auto value = [&](const std::vector<int>& J) -> const Series& {
    int i = y.chart->find(Label{plucker_label(J)});
    require(i >= 0, "realize: missing chart label");
    return y.coords[static_cast<size_t>(i)].s;
  };

  // columns 1..k-1 are standard basis vectors; column k carries the top
  // minor; each later entry is the unique solution of one chart equation,
  // solved bottom row up so earlier equations never see unknown entries
  Mat<Series> M(k, n);
  for (int r = 0; r + 1 < k; ++r) M.at(r, r) = Series::constant(rat(1));
  std::vector<int> top(k);
  std::iota(top.begin(), top.end(), 1);
  M.at(k - 1, k - 1) = value(top);
  for (int j = k + 1; j <= n; ++j) {
    for (int r = 0; r < k; ++r) {
      std::vector<int> J;
      for (int t = 1; t <= k - 1 - r; ++t) J.push_back(t);
      for (int t = j - r; t <= j; ++t) J.push_back(t);
      PluckerLabel lab = plucker_label(J);
      Series g0 = pluecker_eval(M, lab);
      M.at(k - 1 - r, j - 1) = Series::constant(rat(1));
      Series g1 = pluecker_eval(M, lab);
      Series slope = ssub(g1, g0);
      require(slope.has_leading(), "realize: singular solve");
      M.at(k - 1 - r, j - 1) = sdiv(ssub(value(J), g0), slope);
    }
  }
  for (int i = 0; i < y.chart->seed.size(); ++i) {
    auto& J = std::get<PluckerLabel>(labels[static_cast<size_t>(i)]);
    require(series_eq(pluecker_eval(M, J), y.coords[static_cast<size_t>(i)].s),
            "realize: chart reproduction failed");
  }
  return M;
}

FlagConfig<Series> realize_flags(const SeriesPoint& x) {
  const auto& labels = x.chart->labels;
  auto [k, n] = flag_chart_kn(x.chart);

  auto coord = [&](const FlagMonomialLabel& f) -> const Series& {
    int i = x.chart->find(Label{f});
    require(i >= 0, "realize: chart missing label " + label_str(Label{f}));
    return x.coords[static_cast<size_t>(i)].s;
  };

  // widen the division window so cancellations across the coordinate
  // valuation spread cannot empty it; the caller's default is the floor
  Rational vlo = x.coords[0].s.valuation(), vhi = vlo;
  long common_ram = 1;
  for (auto& c : x.coords) {
    Rational v = c.s.valuation();
    vlo = std::min(vlo, v);
    vhi = std::max(vhi, v);
    common_ram = std::lcm(common_ram, c.s.ram);
  }
  PrecGuard guard;
  long long work =
      guard.saved + 3LL * (k + 1) * to_long(rat_ceil(vhi - vlo)) * common_ram;
  require(work <= 200000, "realize: precision demand too large");
  set_series_default_precision(work);

  Triangulation T = chart_triangulation(x.chart);

  std::map<int, Mat<Series>> frame;

  // the label's minor matrix on the partially built frames; a label with
  // exponent m at vertex w reads only columns 1..m there
  auto label_matrix = [&](const FlagMonomialLabel& f) {
    Mat<Series> M(k, k);
    int col = 0;
    for (auto& [v, e] : f.exp) {
      const Mat<Series>& F = frame.at(v);
      for (int j = 0; j < e; ++j, ++col)
        for (int i = 0; i < k; ++i) M.at(i, col) = F.at(i, j);
    }
    return M;
  };

  // solve the frame of vertex w against the realized edge (a, b): for
  // m = 1..k the labels with exponent m at w are linear in the m-th
  // vector, giving k-m+1 equation rows (cofactors of the unknown column);
  // the span of the earlier vectors is gauge freedom, fixed by zeroing
  // m-1 entries chosen for the valuation-dominant square system
  auto solve_vertex = [&](int w, int a, int b) {
    frame.emplace(w, Mat<Series>(k, k));
    Mat<Series>& F = frame.at(w);
    for (int m = 1; m <= k; ++m) {
      int rows = k - m + 1;
      Mat<Series> E(rows, k);
      std::vector<Series> rhs;
      for (int ia = 0; ia <= k - m; ++ia) {
        int ib = k - m - ia;
        FlagMonomialLabel f{n, {}};
        if (ia > 0) f.exp[a] = ia;
        if (ib > 0) f.exp[b] = ib;
        f.exp[w] = m;
        rhs.push_back(m == k ? Series::constant(rat(1)) : coord(f));
        int pos = m - 1;
        for (auto& [v, e] : f.exp)
          if (v < w) pos += e;
        Mat<Series> M = label_matrix(f);
        for (int i = 0; i < k; ++i) {
          Series c = det(minor_matrix(M, i, pos));
          E.at(ia, i) = (i + pos) % 2 == 0 ? c : sneg(c);
        }
      }
      int best = -1;
      Rational best_val;
      std::vector<std::vector<int>> keeps;
      for (auto& gauge : k_subsets(k, m - 1)) {
        std::vector<int> keep;
        for (int i = 1; i <= k; ++i)
          if (std::find(gauge.begin(), gauge.end(), i) == gauge.end()) keep.push_back(i - 1);
        keeps.push_back(keep);
        Series d = det(select_cols(E, keep));
        if (!d.has_leading()) continue;
        if (best < 0 || d.valuation() < best_val) {
          best = static_cast<int>(keeps.size()) - 1;
          best_val = d.valuation();
        }
      }
      require(best >= 0, "realize: singular flag solve");
      auto& keep = keeps[static_cast<size_t>(best)];
      auto sol = cramer_solve(select_cols(E, keep), rhs);
      for (int t = 0; t < k; ++t) F.at(t, m - 1) = Series::zero();
      for (size_t t = 0; t < keep.size(); ++t) F.at(keep[t], m - 1) = sol[t];
    }
  };

  // first triangle: identity frame, then the anti-diagonal frame whose
  // telescoping column scalars reproduce the shared-edge coordinates
  auto& first = T.triangles[0];
  int p = first[0], q = first[1], r = first[2];
  frame.emplace(p, Mat<Series>::identity(k));
  frame.emplace(q, Mat<Series>(k, k));
  Series beta_prev = Series::constant(rat(1));
  for (int j = 1; j <= k; ++j) {
    Series beta = Series::constant(rat(1));
    if (j < k) {
      FlagMonomialLabel f{n, {}};
      f.exp[p] = k - j;
      f.exp[q] = j;
      beta = coord(f);
    }
    Series c = sdiv(beta, beta_prev);
    if (j % 2 == 0) c = sneg(c);
    frame.at(q).at(k - j, j - 1) = c;
    beta_prev = beta;
  }
  solve_vertex(r, p, q);

  // remaining triangles in dual-tree order: each attaches along one
  // realized edge and contributes exactly one new vertex
  std::vector<std::array<int, 3>> pending(T.triangles.begin() + 1, T.triangles.end());
  while (!pending.empty()) {
    bool advanced = false;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      std::vector<int> known, fresh;
      for (int v : *it) (frame.count(v) ? known : fresh).push_back(v);
      if (fresh.empty()) {
        pending.erase(it);
        advanced = true;
        break;
      }
      if (known.size() == 2) {
        solve_vertex(fresh[0], known[0], known[1]);
        pending.erase(it);
        advanced = true;
        break;
      }
    }
    require(advanced, "realize: triangulation not connected");
  }

  FlagConfig<Series> C{k, n, {}};
  for (int v = 1; v <= n; ++v) C.flags.push_back(frame.at(v));

  // certify: every chart coordinate is reproduced with a determinate
  // leading term matching the input exactly, and agrees to full precision
  for (int i = 0; i < x.chart->seed.size(); ++i) {
    auto& f = std::get<FlagMonomialLabel>(labels[static_cast<size_t>(i)]);
    const Series& want = x.coords[static_cast<size_t>(i)].s;
    Series got = f_eval(C, f);
    require(got.has_leading(), "realize: chart reproduction lost to truncation");
    require(got.valuation() == want.valuation() && got.leading_coeff() == want.leading_coeff(),
            "realize: chart reproduction failed");
    require(series_eq(got, want), "realize: chart reproduction failed");
  }
  validate_flag_config(C, true);
  return C;
}

std::map<PluckerLabel, Rational> plucker_vector(const TropPoint& y, std::uint64_t rng_seed) {
  return with_lift_retries(y, rng_seed, [&](const SeriesPoint& sp) {
    Mat<Series> M = realize_grassmannian(sp);
    std::map<PluckerLabel, Rational> out;
    for (auto& J : k_subsets(M.cols, M.rows)) {
      PosSeries v(pluecker_eval(M, plucker_label(J)));
      out.emplace(plucker_label(J), v.neg_val());
    }
    return out;
  });
}

TropPoint pushforward_pi(const TropPoint& x, std::uint64_t rng_seed) {
  const auto& labels = x.chart->labels;
  require(!labels.empty(), "pushforward: empty chart");
  int n = 0, k = 0;
  for (auto& l : labels) {
    auto* f = std::get_if<FlagMonomialLabel>(&l);
    require(f != nullptr, "pushforward: chart is not a flag chart");
    n = f->n;
    k = f->degree();
  }
  auto gr = grassmannian_seed(k, n);

  // read-off path: every rectangle label pulls back to a chart coordinate
  TropPoint out{gr, {}};
  bool direct = true;
  for (auto& l : gr->labels) {
    int i = x.chart->find(Label{pi_pullback(std::get<PluckerLabel>(l), n)});
    if (i < 0) {
      direct = false;
      break;
    }
    out.coords.push_back(x.coords[static_cast<size_t>(i)]);
  }
  if (direct) return out;

  // series oracle: realize a flag configuration over the lift and take
  // valuations of the first-vector minors
  return with_lift_retries(x, rng_seed, [&](const SeriesPoint& sp) {
    FlagConfig<Series> C = realize_flags(sp);
    Mat<Series> M = first_vectors(C);
    TropPoint o{gr, {}};
    for (auto& l : gr->labels) {
      PosSeries v(pluecker_eval(M, std::get<PluckerLabel>(l)));
      o.coords.push_back(v.neg_val());
    }
    return o;
  });
}

}  // namespace tropgr
