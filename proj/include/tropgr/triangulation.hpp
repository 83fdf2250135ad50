#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "tropgr/error.hpp"
#include "tropgr/labels.hpp"

namespace tropgr {

// Triangulation of the convex n-gon with vertices 1..n.  Each triangle is
// stored sorted ascending, which for polygon vertices is a representative of
// its cyclic order.
struct Triangulation {
  int n = 0;
  std::vector<std::array<int, 3>> triangles;

  auto operator<=>(const Triangulation&) const = default;
};

inline bool is_boundary_edge(int a, int b, int n) {  // a < b assumed
  return b - a == 1 || (a == 1 && b == n);
}

// diagonals (a,b) and (c,d) cross iff their endpoints strictly interleave
inline bool diagonals_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto inside = [](int v, std::pair<int, int> d) { return d.first < v && v < d.second; };
  return inside(y.first, x) != inside(y.second, x) && x != y &&
         x.first != y.first && x.first != y.second && x.second != y.first &&
         x.second != y.second;
}

inline void validate_triangulation(const Triangulation& T) {
  require(T.n >= 3, "triangulation: need at least a triangle");
  require(static_cast<int>(T.triangles.size()) == T.n - 2,
          "triangulation: wrong triangle count");
  std::map<std::pair<int, int>, int> edge_uses;
  for (auto& t : T.triangles) {
    require(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= T.n,
            "triangulation: triangle vertices out of order");
    edge_uses[{t[0], t[1]}]++;
    edge_uses[{t[1], t[2]}]++;
    edge_uses[{t[0], t[2]}]++;
  }
  std::vector<std::pair<int, int>> diagonals;
  for (auto& [e, uses] : edge_uses) {
    if (is_boundary_edge(e.first, e.second, T.n)) {
      require(uses == 1, "triangulation: boundary edge not covered exactly once");
    } else {
      require(uses == 2, "triangulation: diagonal not shared by two triangles");
      diagonals.push_back(e);
    }
  }
  for (int i = 1; i <= T.n; ++i) {
    int j = mod1(i + 1, T.n);
    auto e = std::minmax(i, j);
    require(edge_uses.count({e.first, e.second}), "triangulation: boundary edge missing");
  }
  require(static_cast<int>(diagonals.size()) == T.n - 3,
          "triangulation: wrong diagonal count");
  for (size_t i = 0; i < diagonals.size(); ++i)
    for (size_t j = i + 1; j < diagonals.size(); ++j)
      require(!diagonals_cross(diagonals[i], diagonals[j]),
              "triangulation: crossing diagonals");
}

// triangles (base, base+i, base+i+1) walking the boundary away from base
inline Triangulation fan_triangulation(int n, int base = 1) {
  Triangulation T{n, {}};
  for (int i = 1; i <= n - 2; ++i) {
    std::array<int, 3> t{base, mod1(base + i, n), mod1(base + i + 1, n)};
    std::sort(t.begin(), t.end());
    T.triangles.push_back(t);
  }
  std::sort(T.triangles.begin(), T.triangles.end());
  validate_triangulation(T);
  return T;
}

// some triangulation containing (a,b,c) as a triangle: fan the three
// remaining boundary arcs from a, b, c respectively
inline Triangulation triangulation_with_triangle(int n, int a, int b, int c) {
  require(1 <= a && a < b && b < c && c <= n, "triangulation: bad triangle");
  Triangulation T{n, {{a, b, c}}};
  auto fan_arc = [&](int lo, int hi) {  // triangles (lo, i, i+1) walking the arc lo -> hi
    for (int i = mod1(lo + 1, n); i != hi; i = mod1(i + 1, n)) {
      std::array<int, 3> t{lo, i, mod1(i + 1, n)};
      std::sort(t.begin(), t.end());
      T.triangles.push_back(t);
    }
  };
  fan_arc(a, b);
  fan_arc(b, c);
  fan_arc(c, a);
  std::sort(T.triangles.begin(), T.triangles.end());
  validate_triangulation(T);
  return T;
}

// all internal diagonals, each sorted ascending
inline std::vector<std::pair<int, int>> diagonals_of(const Triangulation& T) {
  std::vector<std::pair<int, int>> out;
  for (auto& t : T.triangles) {
    std::array<std::pair<int, int>, 3> edges{{{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}}};
    for (auto [a, b] : edges)
      if (!is_boundary_edge(a, b, T.n)) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Replace diagonal (a,b) by the other diagonal of the quadrilateral formed
// by its two adjacent triangles.  Returns the new triangulation and, via
// new_diag, the diagonal that took its place.
inline Triangulation flip_diagonal(const Triangulation& T, int a, int b,
                                   std::pair<int, int>* new_diag = nullptr) {
  if (a > b) std::swap(a, b);
  require(!is_boundary_edge(a, b, T.n), "flip: boundary edges cannot be flipped");
  std::vector<int> opposite;
  std::vector<std::array<int, 3>> rest;
  for (auto& t : T.triangles) {
    if (std::find(t.begin(), t.end(), a) != t.end() &&
        std::find(t.begin(), t.end(), b) != t.end()) {
      for (int v : t)
        if (v != a && v != b) opposite.push_back(v);
    } else {
      rest.push_back(t);
    }
  }
  require(opposite.size() == 2, "flip: edge is not a diagonal of this triangulation");
  int c = opposite[0], d = opposite[1];
  Triangulation out{T.n, std::move(rest)};
  std::array<int, 3> t1{a, c, d}, t2{b, c, d};
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  out.triangles.push_back(t1);
  out.triangles.push_back(t2);
  std::sort(out.triangles.begin(), out.triangles.end());
  validate_triangulation(out);
  if (new_diag) *new_diag = std::minmax(c, d);
  return out;
}

// Flips turning T into the fan at base: while some triangle (base, x, y) has
// (x,y) internal, flipping (x,y) raises the degree of base, so this stops at
// the fan after at most n-3 flips.  Returns the diagonals in flip order.
inline std::vector<std::pair<int, int>> flips_to_fan(Triangulation T, int base) {
  std::vector<std::pair<int, int>> moves;
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& t : T.triangles) {
      if (std::find(t.begin(), t.end(), base) == t.end()) continue;
      std::vector<int> other;
      for (int v : t)
        if (v != base) other.push_back(v);
      if (is_boundary_edge(other[0], other[1], T.n)) continue;
      moves.emplace_back(other[0], other[1]);
      T = flip_diagonal(T, other[0], other[1]);
      progress = true;
      break;
    }
  }
  require(T == fan_triangulation(T.n, base), "flips_to_fan: did not reach the fan");
  return moves;
}

}  // namespace tropgr
