#pragma once

#include "tropgr/seed.hpp"
#include "tropgr/tropical.hpp"

namespace tropgr {

// b'_ij = -b_ij when i = k or j = k, else b_ij + |b_ik| b_kj when that
// product term has positive sign (the two-case exchange-matrix rule)
inline Seed mutate_matrix(const Seed& s, int k) {
  require(k >= 0 && k < s.size(), "mutate: index out of range");
  require(!s.frozen[k], "mutate: cannot mutate a frozen index");
  Seed out = s;
  int m = s.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == k || j == k) {
        out.B[i][j] = -s.B[i][j];
      } else if (sign(s.B[i][k]) * sign(s.B[k][j]) > 0) {
        Rational add = abs(s.B[i][k]) * s.B[k][j];
        out.B[i][j] = s.B[i][j] + add;
      }
    }
  return out;
}

inline ChartRef mutate_chart(const ChartRef& c, int k) {
  Seed s = mutate_matrix(c->seed, k);
  std::vector<Label> labels = c->labels;
  labels[k] = OpaqueLabel{"mu@" + std::to_string(k) + "(" + label_str(labels[k]) + ")"};
  return make_chart(std::move(s), std::move(labels));
}

// A'_k = (prod_{b_kj>0} A_j^{b_kj} (+) prod_{b_kj<0} A_j^{-b_kj}) (/) A_k,
// written in the semifield's operations (subtraction-free exchange)
template <class SF>
Point<SF> mutate_A(const Point<SF>& p, int k) {
  const Seed& s = p.chart->seed;
  require(k >= 0 && k < s.size(), "mutate: index out of range");
  require(!s.frozen[k], "mutate: cannot mutate a frozen index");
  typename SF::Value pos = SF::one(), neg = SF::one();
  for (int j = 0; j < s.size(); ++j) {
    long b = to_long(s.B[k][j]);
    if (b > 0) pos = SF::mul(pos, SF::pow(p.coords[j], b));
    if (b < 0) neg = SF::mul(neg, SF::pow(p.coords[j], -b));
  }
  Point<SF> out;
  out.chart = mutate_chart(p.chart, k);
  out.coords = p.coords;
  out.coords[k] = SF::div(SF::add(pos, neg), p.coords[k]);
  return out;
}

// X'_k = X_k^{-1}; X'_i = X_i X_k^{[b_ik]_+} (1 (+) X_k)^{-b_ik}
template <class SF>
Point<SF> mutate_X(const Point<SF>& p, int k) {
  const Seed& s = p.chart->seed;
  require(k >= 0 && k < s.size(), "mutate: index out of range");
  require(!s.frozen[k], "mutate: cannot mutate a frozen index");
  Point<SF> out;
  out.chart = mutate_chart(p.chart, k);
  out.coords = p.coords;
  typename SF::Value onePlus = SF::add(SF::one(), p.coords[k]);
  for (int i = 0; i < s.size(); ++i) {
    if (i == k) continue;
    long b = to_long(s.B[i][k]);
    typename SF::Value v = p.coords[i];
    if (b > 0) v = SF::mul(v, SF::pow(p.coords[k], b));
    v = SF::mul(v, SF::pow(onePlus, -b));
    out.coords[i] = v;
  }
  out.coords[k] = SF::pow(p.coords[k], -1);
  return out;
}

// X_i = (x) prod_j A_j^{b_ij}; requires integral rows (glued charts can
// carry half-integer frozen-frozen entries, which this map must reject)
template <class SF>
Point<SF> p_map(const Point<SF>& p) {
  const Seed& s = p.chart->seed;
  Point<SF> out;
  out.chart = p.chart;
  out.coords.reserve(s.size());
  for (int i = 0; i < s.size(); ++i) {
    typename SF::Value x = SF::one();
    for (int j = 0; j < s.size(); ++j) {
      require(is_integer(s.B[i][j]), "p-map: non-integral exchange row");
      long b = to_long(s.B[i][j]);
      if (b != 0) x = SF::mul(x, SF::pow(p.coords[j], b));
    }
    out.coords.push_back(x);
  }
  return out;
}

enum class MutMode { A, X };

template <class SF>
Point<SF> apply_path(Point<SF> p, const std::vector<int>& path,
                     MutMode mode = MutMode::A) {
  for (int k : path) p = (mode == MutMode::A) ? mutate_A(p, k) : mutate_X(p, k);
  return p;
}

}  // namespace tropgr
