#include "tropgr/hive.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

namespace tropgr {

namespace {

int mod0(int x, int n) { return ((x % n) + n) % n; }

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

PluckerLabel window_label(int i, int k, int n) {
  std::vector<int> J;
  for (int j = 0; j < k; ++j) J.push_back(mod1(i + j, n));
  std::sort(J.begin(), J.end());
  return plucker_label(J);
}

// {i, .., i+k-2, i+k}: the window with its last element pushed one further
PluckerLabel bumped_window_label(int i, int k, int n) {
  std::vector<int> J;
  for (int j = 0; j + 1 < k; ++j) J.push_back(mod1(i + j, n));
  J.push_back(mod1(i + k, n));
  std::sort(J.begin(), J.end());
  require(std::adjacent_find(J.begin(), J.end()) == J.end(),
          "cone: window overrun, need k < n");
  return plucker_label(J);
}

// solve M x = b exactly by Gaussian elimination with column pivoting
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> M,
                                   std::vector<Rational> b, const char* what) {
  size_t n = M.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) fail(std::string(what) + ": singular system");
    std::swap(M[col], M[piv]);
    std::swap(b[col], b[piv]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col] / M[col][col];
      for (size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / M[i][i];
  return x;
}

FlagMonomialLabel make_label(int n, const std::map<int, int>& exp) {
  FlagMonomialLabel f{n, {}};
  for (auto& [v, e] : exp)
    if (e != 0) f.exp[v] = e;
  return f;
}

std::string rhombus_id(const RhombusSlack& r) {
  std::ostringstream os;
  os << "rhombus (" << r.tri[0] << "," << r.tri[1] << "," << r.tri[2] << ") axis "
     << r.tri[static_cast<size_t>(r.axis)] << " at (" << r.p << "," << r.q << ","
     << r.r << ")";
  return os.str();
}

// shared enumeration behind hive_slacks and hive_check
void for_each_rhombus(const TropPoint& h,
                      const std::function<void(const RhombusSlack&, const Rational&,
                                               const Rational&)>& visit) {
  auto [k, n] = flag_chart_kn(h.chart);
  Triangulation T = chart_triangulation(h.chart);
  for (auto& tri : T.triangles) {
    for (int axis = 0; axis < 3; ++axis) {
      int X = tri[static_cast<size_t>(axis)];
      int Y = tri[static_cast<size_t>((axis + 1) % 3)];
      int Z = tri[static_cast<size_t>((axis + 2) % 3)];
      for (int p = 0; p <= k - 2; ++p)
        for (int q = 0; p + q <= k - 2; ++q) {
          int r = k - 2 - p - q;
          auto at = [&](int ex, int ey, int ez) {
            return hive_value(h, make_label(n, {{X, ex}, {Y, ey}, {Z, ez}}));
          };
          Rational lhs = at(p + 1, q + 1, r) + at(p + 1, q, r + 1);
          Rational rhs = at(p + 2, q, r) + at(p, q + 1, r + 1);
          RhombusSlack rs{tri, axis, p, q, r, lhs - rhs};
          visit(rs, lhs, rhs);
        }
    }
  }
}

// label value on a chart point, allowing single-vertex labels (value 0);
// returns false when the label is neither pure nor on the chart
bool try_value(const TropPoint& x, const FlagMonomialLabel& f, Rational* out) {
  if (f.exp.size() == 1) {
    *out = 0;
    return true;
  }
  int i = x.chart->find(Label{f});
  if (i < 0) return false;
  *out = x.coords[static_cast<size_t>(i)];
  return true;
}

// append every transfer instance derivable from consolidated label rhs
// (vertex v carries E >= 2 units, its predecessor none) whose split form is
// also readable through `value`
void enumerate_transfers(
    const FlagMonomialLabel& rhs, const BoundaryDistances& a, int k,
    const std::function<bool(const FlagMonomialLabel&, Rational*)>& value,
    TransferReport* rep) {
  int n = rhs.n;
  Rational rhs_value;
  if (!value(rhs, &rhs_value)) return;
  for (auto& [v, E] : rhs.exp) {
    if (E < 2) continue;
    int u = mod1(v - 1, n);
    if (rhs.exp.count(u)) continue;
    for (int i = 1; i <= E - 1; ++i) {
      auto exp = rhs.exp;
      exp[u] = i;
      exp[v] = E - i;
      FlagMonomialLabel lhs = make_label(n, exp);
      Rational lhs_value;
      if (!value(lhs, &lhs_value)) continue;
      TransferInstance t{lhs, rhs, u, i, lhs_value, rhs_value, a.at(v) / rat(k)};
      if (!t.holds()) rep->failures++;
      rep->instances.push_back(std::move(t));
    }
  }
}

}  // namespace

ConeReport summarize_ineqs(std::vector<ConeIneq> ineqs) {
  ConeReport rep;
  rep.ineqs = std::move(ineqs);
  bool first = true;
  for (auto& q : rep.ineqs) {
    Rational s = q.slack();
    if (first || s < rep.min_slack) rep.min_slack = s;
    first = false;
    if (s < 0) {
      if (rep.member) rep.first_violation = q.id;
      rep.member = false;
    } else if (s == 0) {
      rep.boundary = true;
    }
  }
  rep.boundary = rep.member && rep.boundary;
  return rep;
}

Rational hive_value(const TropPoint& h, const FlagMonomialLabel& f) {
  Rational out;
  require(try_value(h, f, &out), "hive: label " + label_str(Label{f}) + " not on this chart");
  return out;
}

std::vector<RhombusSlack> hive_slacks(const TropPoint& h) {
  std::vector<RhombusSlack> out;
  for_each_rhombus(h, [&](const RhombusSlack& rs, const Rational&, const Rational&) {
    out.push_back(rs);
  });
  return out;
}

ConeReport hive_check(const TropPoint& h) {
  std::vector<ConeIneq> ineqs;
  for_each_rhombus(h, [&](const RhombusSlack& rs, const Rational& lhs, const Rational& rhs) {
    ineqs.push_back({rhombus_id(rs), lhs, rhs});
  });
  return summarize_ineqs(std::move(ineqs));
}

std::vector<Rational> frozen_from_boundary(int k, const BoundaryDistances& a) {
  require(k >= 1, "frozen: need k >= 1");
  int n = a.n();
  require(n >= 1, "frozen: empty boundary");
  std::vector<Rational> F(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Rational s = 0;
    for (int j = 1; j <= k - 1; ++j) s += rat(j) * a.at(i + j) / rat(k);
    F[static_cast<size_t>(i - 1)] = s;
  }
  return F;
}

BoundaryDistances boundary_from_frozen(int k, const std::vector<Rational>& F) {
  int n = static_cast<int>(F.size());
  require(k >= 1 && k < n, "boundary: need 1 <= k < n");
  std::vector<std::vector<Rational>> M(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k - 1; ++j)
      M[static_cast<size_t>(i - 1)][static_cast<size_t>(mod1(i + j, n) - 1)] +=
          rat(j) / rat(k);
  return BoundaryDistances{solve_linear(std::move(M), F, "boundary_from_frozen")};
}

int vector_rank(const PluckerVector& y) {
  require(!y.empty(), "plucker vector: empty");
  return static_cast<int>(y.begin()->first.J.size());
}

int vector_points(const PluckerVector& y) {
  int k = vector_rank(y);
  int n = 0;
  for (auto& [J, v] : y) {
    require(static_cast<int>(J.J.size()) == k, "plucker vector: mixed subset sizes");
    n = std::max(n, J.J.back());
  }
  require(static_cast<long>(y.size()) == binom(n, k),
          "plucker vector: need all k-subsets of 1..n");
  return n;
}

std::vector<Rational> frozen_values(const PluckerVector& y) {
  int k = vector_rank(y), n = vector_points(y);
  std::vector<Rational> F;
  for (int i = 1; i <= n; ++i) F.push_back(y.at(window_label(i, k, n)));
  return F;
}

BoundaryDistances boundary_of(const PluckerVector& y) {
  return boundary_from_frozen(vector_rank(y), frozen_values(y));
}

Reduction reduce_to_plucker(const FlagMonomialLabel& m, const BoundaryDistances& a,
                            ReduceOrder order) {
  int n = a.n(), k = m.degree();
  require(m.n == n, "reduce: boundary size does not match the label");
  require(k <= n, "reduce: more exponent mass than vertices");
  std::map<int, int> exp = m.exp;
  for (auto& [v, e] : exp)
    require(1 <= v && v <= n && e >= 1, "reduce: bad label vertex");
  Rational offset = 0;
  long moved_units = 0;
  for (;;) {
    int v = 0;
    if (order == ReduceOrder::EarliestBlock) {
      for (auto& [w, e] : exp)
        if (e >= 2) {
          v = w;
          break;
        }
    } else {
      for (auto it = exp.rbegin(); it != exp.rend(); ++it)
        if (it->second >= 2) {
          v = it->first;
          break;
        }
    }
    if (v == 0) break;
    int units = order == ReduceOrder::LatestUnit ? 1 : exp[v] - 1;
    moved_units += units;
    require(moved_units <= static_cast<long>(k) * n, "reduction overflow");
    int u = mod1(v - 1, n);
    exp[u] += units;
    exp[v] -= units;
    offset -= rat(units) * a.at(v) / rat(k);
  }
  std::vector<int> J;
  for (auto& [w, e] : exp)
    if (e == 1) J.push_back(w);
  require(static_cast<int>(J.size()) == k, "reduce: did not reach a k-subset");
  return {plucker_label(J), offset};
}

TropPoint distinguished_lift(const PluckerVector& y, const Triangulation& T) {
  int k = vector_rank(y), n = vector_points(y);
  require(T.n == n, "lift: triangulation size mismatch");
  BoundaryDistances a = boundary_of(y);
  ChartRef chart = confA_seed(k, n, T);
  TropPoint x;
  x.chart = chart;
  for (auto& l : chart->labels) {
    auto& f = std::get<FlagMonomialLabel>(l);
    Reduction red = reduce_to_plucker(f, a);
    x.coords.push_back(y.at(red.J) + red.offset);
  }
  return x;
}

TropPoint distinguished_lift(const PluckerVector& y) {
  return distinguished_lift(y, fan_triangulation(vector_points(y), 1));
}

ConeReport cone_check(const PluckerVector& y) {
  int k = vector_rank(y), n = vector_points(y);
  require(k < n, "cone: need k < n");
  std::vector<Rational> F = frozen_values(y);
  BoundaryDistances a = boundary_from_frozen(k, F);
  std::vector<ConeIneq> ineqs;
  for (int i = 1; i <= n; ++i) {
    Rational lhs = F[static_cast<size_t>(i - 1)] + rat(k - 1) * a.at(i + k) / rat(k);
    Rational rhs = y.at(bumped_window_label(i, k, n));
    ineqs.push_back({"window " + std::to_string(i), lhs, rhs});
  }
  return summarize_ineqs(std::move(ineqs));
}

ScalingVector l_scaling(int i, int k, int n) {
  require(1 <= i && i <= n, "l_scaling: vertex out of range");
  require(2 <= k && k <= n, "l_scaling: need 2 <= k <= n");
  ScalingVector out;
  out.c.assign(static_cast<size_t>(n), Rational(0));
  for (int off = 0; off < k; ++off)
    out.c[static_cast<size_t>(mod1(i + off, n) - 1)] = rat(k - 1 - off) / rat(k);
  return out;
}

PluckerVector l_lamination(int i, int k, int n) {
  ScalingVector s = l_scaling(i, k, n);
  PluckerVector out;
  for (auto& J : k_subsets(n, k)) {
    Rational v = 0;
    for (int j : J) v += s.c[static_cast<size_t>(j - 1)];
    out[plucker_label(J)] = v;
  }
  return out;
}

PluckerVector act_lineality(const PluckerVector& y, const std::vector<Rational>& c) {
  int k = vector_rank(y), n = vector_points(y);
  require(static_cast<int>(c.size()) == n, "act_lineality: need one coefficient per vertex");
  ScalingVector total;
  total.c.assign(static_cast<size_t>(n), Rational(0));
  for (int i = 1; i <= n; ++i) {
    if (c[static_cast<size_t>(i - 1)] == 0) continue;
    ScalingVector s = l_scaling(i, k, n);
    for (int j = 0; j < n; ++j)
      total.c[static_cast<size_t>(j)] += c[static_cast<size_t>(i - 1)] * s.c[static_cast<size_t>(j)];
  }
  return act_T(y, total);
}

std::vector<Rational> lineality_coefficients(int k, const std::vector<Rational>& target) {
  int n = static_cast<int>(target.size());
  require(2 <= k && k < n, "lineality_coefficients: need 2 <= k < n");
  std::vector<std::vector<Rational>> M(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    ScalingVector s = l_scaling(i, k, n);
    for (int j = 0; j < n; ++j)
      M[static_cast<size_t>(j)][static_cast<size_t>(i - 1)] = s.c[static_cast<size_t>(j)];
  }
  return solve_linear(std::move(M), target, "lineality_coefficients");
}

// Total rhombus slack of the n lamination lifts, indexed like hive_check's
// inequality list.  One uniform unit of every l_i improves each rhombus
// slack by exactly this amount (the lift is linear along the lineality).
static std::vector<Rational> lamination_rates(int k, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<Rational> rate;
  for (int i = 1; i <= n; ++i) {
    ConeReport hv = hive_check(distinguished_lift(l_lamination(i, k, n)));
    if (rate.empty()) rate.assign(hv.ineqs.size(), Rational(0));
    require(rate.size() == hv.ineqs.size(), "lamination rates: rhombus count mismatch");
    for (size_t r = 0; r < hv.ineqs.size(); ++r) rate[r] += hv.ineqs[r].slack();
  }
  cache[key] = rate;
  return rate;
}

std::vector<Rational> cone_repair(const PluckerVector& y) {
  int k = vector_rank(y), n = vector_points(y);
  require(k >= 2, "cone_repair: need k >= 2");
  // repair to full hive membership of the lift; the window inequalities are
  // implied, so cone_check passes on the result as well
  ConeReport rep = hive_check(distinguished_lift(y));
  if (rep.member) return std::vector<Rational>(static_cast<size_t>(n), Rational(0));
  std::vector<Rational> rate = lamination_rates(k, n);
  require(rate.size() == rep.ineqs.size(), "cone_repair: rate table mismatch");
  Rational m = 0;
  for (size_t r = 0; r < rep.ineqs.size(); ++r) {
    Rational s = rep.ineqs[r].slack();
    if (s >= 0) continue;
    require(rate[r] > 0, "cone_repair: violated rhombus with no lamination slack");
    m = std::max(m, rat_ceil(-s / rate[r]));
  }
  return std::vector<Rational>(static_cast<size_t>(n), m);
}

TransferReport check_transfer_identities(const TropPoint& x, const BoundaryDistances& a) {
  auto [k, n] = flag_chart_kn(x.chart);
  require(a.n() == n, "transfer: boundary size mismatch");
  auto value = [&](const FlagMonomialLabel& f, Rational* out) { return try_value(x, f, out); };
  TransferReport rep;
  for (auto& l : x.chart->labels)
    enumerate_transfers(std::get<FlagMonomialLabel>(l), a, k, value, &rep);
  for (int v = 1; v <= n; ++v)
    enumerate_transfers(make_label(n, {{v, k}}), a, k, value, &rep);
  return rep;
}

TransferReport check_transfer_identities_global(const TropPoint& x,
                                                const BoundaryDistances& a) {
  auto [k, n] = flag_chart_kn(x.chart);
  require(a.n() == n, "transfer: boundary size mismatch");
  std::map<Triangulation, TropPoint> moved;
  std::map<FlagMonomialLabel, Rational> memo;
  auto value = [&](const FlagMonomialLabel& f, Rational* out) {
    if (static_cast<int>(f.exp.size()) > 3) return false;
    if (auto it = memo.find(f); it != memo.end()) {
      *out = it->second;
      return true;
    }
    if (!try_value(x, f, out)) {
      std::vector<int> supp;
      for (auto& [v, e] : f.exp) supp.push_back(v);
      while (supp.size() < 3) {  // pad to a triangle away from the support
        for (int w = 1; w <= n; ++w)
          if (std::find(supp.begin(), supp.end(), w) == supp.end()) {
            supp.push_back(w);
            break;
          }
      }
      std::sort(supp.begin(), supp.end());
      Triangulation T = triangulation_with_triangle(n, supp[0], supp[1], supp[2]);
      auto it = moved.find(T);
      if (it == moved.end()) it = moved.emplace(T, to_triangulation(x, T)).first;
      *out = hive_value(it->second, f);
    }
    memo.emplace(f, *out);
    return true;
  };
  TransferReport rep;
  std::set<FlagMonomialLabel> seen;
  for (int s = 1; s <= std::min(3, k); ++s)
    for (auto& supp : k_subsets(n, s))
      for (auto& comp : compositions(k, s)) {
        std::map<int, int> exp;
        for (int i = 0; i < s; ++i) exp[supp[static_cast<size_t>(i)]] = comp[static_cast<size_t>(i)];
        FlagMonomialLabel rhs = make_label(n, exp);
        if (!seen.insert(rhs).second) continue;
        enumerate_transfers(rhs, a, k, value, &rep);
      }
  return rep;
}

IntegralityReport integrality_check(const PluckerVector& y) {
  IntegralityReport rep;
  rep.a = boundary_of(y);
  rep.a_integral = true;
  rep.a_nonnegative = true;
  for (auto& v : rep.a.a) {
    if (!is_integer(v)) rep.a_integral = false;
    if (v < 0) rep.a_nonnegative = false;
  }
  rep.pluckers_integral = true;
  for (auto& [J, v] : y)
    if (!is_integer(v)) rep.pluckers_integral = false;
  return rep;
}

WeightReport weight_report(const PluckerVector& y) {
  BoundaryDistances a = boundary_of(y);
  for (auto& v : a.a)
    require(is_integer(v), "weight_report: boundary distances not integral");
  WeightReport rep;
  rep.weights = a.a;
  rep.degree = 0;
  for (auto& v : a.a) rep.degree += v;
  return rep;
}

PluckerVector rw_normalize(const PluckerVector& y, const BoundaryDistances& a) {
  int k = vector_rank(y), n = vector_points(y);
  require(a.n() == n, "rw_normalize: boundary size mismatch");
  ScalingVector c;
  Rational run = 0;
  for (int i = 1; i <= n; ++i) {
    c.c.push_back(run / rat(k));
    run += a.at(i);
  }
  return act_T(y, c);
}

namespace {

// caches shared by all chart walks: flip computations depend only on
// (k, triangulation, diagonal), canonical charts only on (k, n, triangulation)
std::mutex walk_mutex;
std::map<std::tuple<int, Triangulation, int, int>, FlipResult> flip_cache;
std::map<std::tuple<int, int, Triangulation>, ChartRef> chart_cache;

const FlipResult& cached_flip(int k, const Triangulation& T, int a, int b) {
  std::scoped_lock lock(walk_mutex);
  auto key = std::make_tuple(k, T, a, b);
  auto it = flip_cache.find(key);
  if (it == flip_cache.end()) it = flip_cache.emplace(key, flip_sequence(k, T, a, b)).first;
  return it->second;
}

ChartRef cached_chart(int k, int n, const Triangulation& T) {
  std::scoped_lock lock(walk_mutex);
  auto key = std::make_tuple(k, n, T);
  auto it = chart_cache.find(key);
  if (it == chart_cache.end()) it = chart_cache.emplace(key, confA_seed(k, n, T)).first;
  return it->second;
}

// reindex coords onto `chart` by matching labels
TropPoint remap(const ChartRef& chart, const std::vector<Label>& labels,
                const std::vector<Rational>& coords) {
  std::map<Label, int> pos;
  for (size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);
  TropPoint out;
  out.chart = chart;
  for (auto& l : chart->labels) {
    auto it = pos.find(l);
    require(it != pos.end(), "chart walk: label " + label_str(l) + " missing after flip");
    out.coords.push_back(coords[static_cast<size_t>(it->second)]);
  }
  return out;
}

TropPoint flip_once(const TropPoint& cur, int k, int n, const Triangulation& T, int a,
                    int b, Triangulation* outT) {
  const FlipResult& fr = cached_flip(k, T, a, b);
  TropPoint through = change_chart(cur, fr.path);
  *outT = fr.flipped;
  return remap(cached_chart(k, n, fr.flipped), fr.labels, through.coords);
}

}  // namespace

TropPoint to_triangulation(const TropPoint& x, const Triangulation& T) {
  auto [k, n] = flag_chart_kn(x.chart);
  require(T.n == n, "to_triangulation: polygon size mismatch");
  Triangulation cur = chart_triangulation(x.chart);
  TropPoint p = remap(cached_chart(k, n, cur), x.chart->labels, x.coords);
  if (cur == T) return p;
  for (auto [a, b] : flips_to_fan(cur, 1)) p = flip_once(p, k, n, cur, a, b, &cur);
  // play the target's fan route backwards from the fan
  std::vector<std::pair<int, int>> created;
  Triangulation s = T;
  for (auto [a, b] : flips_to_fan(T, 1)) {
    std::pair<int, int> e;
    s = flip_diagonal(s, a, b, &e);
    created.push_back(e);
  }
  for (auto it = created.rbegin(); it != created.rend(); ++it)
    p = flip_once(p, k, n, cur, it->first, it->second, &cur);
  require(cur == T, "to_triangulation: walk did not reach the target");
  return p;
}

Rational eval_flag_label(const TropPoint& x, const FlagMonomialLabel& f) {
  auto [k, n] = flag_chart_kn(x.chart);
  require(f.n == n && f.degree() == k, "eval: label shape mismatch");
  Rational out;
  if (try_value(x, f, &out)) return out;
  std::vector<int> supp;
  for (auto& [v, e] : f.exp) supp.push_back(v);
  require(supp.size() <= 3, "eval: label support exceeds a triangle");
  while (supp.size() < 3) {
    for (int w = 1; w <= n; ++w)
      if (std::find(supp.begin(), supp.end(), w) == supp.end()) {
        supp.push_back(w);
        break;
      }
  }
  std::sort(supp.begin(), supp.end());
  return hive_value(to_triangulation(x, triangulation_with_triangle(n, supp[0], supp[1], supp[2])), f);
}

}  // namespace tropgr
