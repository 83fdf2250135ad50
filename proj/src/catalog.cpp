#include "tropgr/catalog.hpp"

#include <algorithm>
#include <set>

namespace tropgr {

namespace {

// arrow u -> v with weight w; b_{vu} counts arrows into v from u
void add_arrow(Seed& s, int u, int v, const Rational& w) {
  s.B[v][u] += w;
  s.B[u][v] -= w;
}

int third_vertex(const std::array<int, 3>& t, int a, int b) {
  for (int v : t)
    if (v != a && v != b) return v;
  fail("flip: degenerate triangle");
}

bool has_edge(const std::array<int, 3>& t, int a, int b) {
  return std::count(t.begin(), t.end(), a) && std::count(t.begin(), t.end(), b);
}

}  // namespace

ChartRef grassmannian_seed(int k, int n) {
  require(2 <= k && k <= n - 2, "grassmannian_seed: need 2 <= k <= n-2");
  auto cell_exists = [&](int c, int r) {
    if (r < 0 || r > k - 1 || c < 0) return false;
    return c <= (r == 0 ? n - k : n - k - 1);
  };
  auto cell_label = [&](int c, int r) {
    std::vector<int> J;
    for (int j = 1; j <= k - 1 - r; ++j) J.push_back(j);
    int i = n - c - r;
    for (int j = i; j <= i + r; ++j) J.push_back(j);
    return Label{plucker_label(J)};
  };

  std::map<std::pair<int, int>, int> idx;
  std::vector<Label> labels;
  std::vector<bool> frozen;
  for (int r = 0; r < k; ++r)
    for (int c = 0; cell_exists(c, r); ++c) {
      idx[{c, r}] = static_cast<int>(labels.size());
      labels.push_back(cell_label(c, r));
      frozen.push_back(c == 0 || r == k - 1 || (c == n - k && r == 0));
    }

  int m = static_cast<int>(labels.size());
  Seed s{std::vector(m, std::vector<Rational>(m, Rational(0))), frozen,
         std::vector<long>(m, 1)};
  for (auto& [cell, u] : idx) {
    auto [c, r] = cell;
    if (r <= k - 2 && cell_exists(c + 1, r)) add_arrow(s, idx.at({c + 1, r}), u, 1);
    if (r <= k - 2 && c <= n - k - 1) add_arrow(s, u, idx.at({c, r + 1}), 1);
    if (r >= 1 && c <= n - k - 2) add_arrow(s, u, idx.at({c + 1, r - 1}), 1);
  }
  add_arrow(s, idx.at({n - k - 1, k - 1}), idx.at({n - k, 0}), 1);
  validate_seed(s);
  return make_chart(std::move(s), std::move(labels));
}

ChartRef confA_seed(int k, int n, const Triangulation& T) {
  require(k >= 2, "confA_seed: need k >= 2");
  require(T.n == n, "confA_seed: triangulation size mismatch");
  validate_triangulation(T);

  auto node_label = [&](const std::array<int, 3>& tri, int i1, int i2, int i3) {
    FlagMonomialLabel f{n, {}};
    if (i1) f.exp[tri[0]] = i1;
    if (i2) f.exp[tri[1]] = i2;
    if (i3) f.exp[tri[2]] = i3;
    return Label{f};
  };

  std::map<Label, int> idx;
  std::vector<Label> labels;
  std::vector<bool> frozen;
  for (auto& tri : T.triangles)
    for (int i1 = 0; i1 <= k - 1; ++i1)
      for (int i2 = 0; i2 <= k - i1; ++i2) {
        int i3 = k - i1 - i2;
        if (i2 > k - 1 || i3 > k - 1) continue;  // pure corner functions are constants
        Label l = node_label(tri, i1, i2, i3);
        if (idx.emplace(l, static_cast<int>(labels.size())).second) {
          auto& f = std::get<FlagMonomialLabel>(l);
          bool edge = f.exp.size() == 2;
          int a = f.exp.begin()->first, b = f.exp.rbegin()->first;
          labels.push_back(l);
          frozen.push_back(edge && is_boundary_edge(a, b, n));
        }
      }

  int m = static_cast<int>(labels.size());
  Seed s{std::vector(m, std::vector<Rational>(m, Rational(0))), frozen,
         std::vector<long>(m, 1)};
  Rational half = rat(1, 2);
  for (auto& tri : T.triangles)
    for (int i1 = 0; i1 <= k - 1; ++i1)
      for (int i2 = 0; i2 <= k - i1; ++i2) {
        int i3 = k - i1 - i2;
        if (i2 > k - 1 || i3 > k - 1) continue;
        int u = idx.at(node_label(tri, i1, i2, i3));
        // the three step families of a triangle chart; a step is dashed
        // (half weight) exactly when it stays inside one edge
        struct Step {
          int d1, d2, d3;
          int dash_if_zero;  // which exponent being 0 marks the dashed case
        };
        for (auto st : {Step{+1, -1, 0, 3}, Step{0, +1, -1, 1}, Step{-1, 0, +1, 2}}) {
          int j1 = i1 + st.d1, j2 = i2 + st.d2, j3 = i3 + st.d3;
          if (j1 < 0 || j2 < 0 || j3 < 0) continue;
          if (j1 > k - 1 || j2 > k - 1 || j3 > k - 1) continue;  // pure corner
          int edge_exp = st.dash_if_zero == 1 ? i1 : st.dash_if_zero == 2 ? i2 : i3;
          int v = idx.at(node_label(tri, j1, j2, j3));
          add_arrow(s, u, v, edge_exp == 0 ? half : Rational(1));
        }
      }
  validate_seed(s);
  return make_chart(std::move(s), std::move(labels));
}

FlagMonomialLabel pi_pullback(const PluckerLabel& J, int n) {
  FlagMonomialLabel f{n, {}};
  for (int v : J.J) {
    require(1 <= v && v <= n, "pi_pullback: vertex out of range");
    f.exp[v] = 1;
  }
  return f;
}

Label twisted_shift(const Label& lab, int n) {
  if (auto* p = std::get_if<PluckerLabel>(&lab)) {
    std::vector<int> J;
    for (int v : p->J) J.push_back(mod1(v - 1, n));
    std::sort(J.begin(), J.end());
    return plucker_label(std::move(J));
  }
  if (auto* f = std::get_if<FlagMonomialLabel>(&lab)) {
    require(f->n == n, "twisted_shift: label polygon size mismatch");
    FlagMonomialLabel out{n, {}};
    for (auto& [v, e] : f->exp) out.exp[mod1(v - 1, n)] = e;
    return out;
  }
  fail("twisted_shift: opaque label has no index shift");
}

FlipResult flip_sequence(int k, const Triangulation& T, int a, int b) {
  validate_triangulation(T);
  if (a > b) std::swap(a, b);
  require(1 <= a && a < b && b <= T.n, "flip: bad diagonal endpoints");
  require(!is_boundary_edge(a, b, T.n), "flip: boundary edge cannot be flipped");

  std::vector<std::array<int, 3>> adj;
  for (auto& t : T.triangles)
    if (has_edge(t, a, b)) adj.push_back(t);
  require(adj.size() == 2, "flip: not a diagonal of this triangulation");
  int r1 = third_vertex(adj[0], a, b), r2 = third_vertex(adj[1], a, b);
  // quad (A,B,C,D) in cyclic order with the old diagonal at A-C
  int A = a, C = b;
  int B = (a < r1 && r1 < b) ? r1 : r2;
  int D = (B == r1) ? r2 : r1;
  require(a < B && B < b && !(a < D && D < b), "flip: triangles on one side");

  auto chart = confA_seed(k, T.n, T);
  // track which chart vertex currently holds each quad-supported function,
  // keyed by its exponents at (A,B,C,D)
  std::map<std::array<int, 4>, int> pos;
  for (int i = 0; i < chart->seed.size(); ++i) {
    auto& f = std::get<FlagMonomialLabel>(chart->labels[i]);
    std::array<int, 4> key{0, 0, 0, 0};
    bool in_quad = true;
    for (auto& [v, e] : f.exp) {
      if (v == A) key[0] = e;
      else if (v == B) key[1] = e;
      else if (v == C) key[2] = e;
      else if (v == D) key[3] = e;
      else { in_quad = false; break; }
    }
    if (in_quad) require(pos.emplace(key, i).second, "flip: duplicate quad function");
  }

  FlipResult out;
  // octahedron-recurrence layers: each step consumes the function with both
  // diagonal exponents positive and leaves the one supported on the new
  // diagonal in its place
  for (int t = 0; t <= k - 2; ++t)
    for (int dd = 0; dd <= t; ++dd) {
      int bb = t - dd;
      for (int aa = 0; aa <= k - 2 - t; ++aa) {
        int cc = k - 2 - t - aa;
        auto it = pos.find({aa + 1, bb, cc + 1, dd});
        require(it != pos.end(), "flip: schedule lost a function");
        int vtx = it->second;
        out.path.push_back(vtx);
        pos.erase(it);
        require(pos.emplace(std::array{aa, bb + 1, cc, dd + 1}, vtx).second,
                "flip: schedule collision");
      }
    }

  out.labels = chart->labels;
  for (auto& [key, vtx] : pos) {
    FlagMonomialLabel f{T.n, {}};
    if (key[0]) f.exp[A] = key[0];
    if (key[1]) f.exp[B] = key[1];
    if (key[2]) f.exp[C] = key[2];
    if (key[3]) f.exp[D] = key[3];
    out.labels[vtx] = f;
  }

  out.flipped.n = T.n;
  for (auto& t : T.triangles)
    if (!has_edge(t, a, b)) out.flipped.triangles.push_back(t);
  std::array<int, 3> t1{A, B, D}, t2{B, C, D};
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  out.flipped.triangles.push_back(t1);
  out.flipped.triangles.push_back(t2);
  std::sort(out.flipped.triangles.begin(), out.flipped.triangles.end());
  validate_triangulation(out.flipped);
  return out;
}

std::pair<int, int> flag_chart_kn(const ChartRef& chart) {
  require(!chart->labels.empty(), "flag chart: empty chart");
  int n = 0, k = 0;
  for (auto& l : chart->labels) {
    auto* f = std::get_if<FlagMonomialLabel>(&l);
    require(f != nullptr, "flag chart: chart is not a flag chart");
    n = f->n;
    k = f->degree();
  }
  require(k >= 2 && n >= 3, "flag chart: need k >= 2 and n >= 3");
  return {k, n};
}

Triangulation chart_triangulation(const ChartRef& chart) {
  auto [k, n] = flag_chart_kn(chart);
  (void)k;
  std::set<std::pair<int, int>> edges;
  for (auto& l : chart->labels) {
    auto& f = std::get<FlagMonomialLabel>(l);
    if (f.exp.size() == 2) edges.insert({f.exp.begin()->first, f.exp.rbegin()->first});
  }
  Triangulation T{n, {}};
  for (auto& tri : k_subsets(n, 3)) {
    auto has = [&](int a, int b) { return edges.count({a, b}) > 0; };
    if (has(tri[0], tri[1]) && has(tri[1], tri[2]) && has(tri[0], tri[2]))
      T.triangles.push_back({tri[0], tri[1], tri[2]});
  }
  validate_triangulation(T);
  return T;
}

}  // namespace tropgr
