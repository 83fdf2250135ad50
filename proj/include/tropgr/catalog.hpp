#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "tropgr/matrix.hpp"
#include "tropgr/seed.hpp"
#include "tropgr/series.hpp"
#include "tropgr/triangulation.hpp"

namespace tropgr {

// Rectangle chart on the cone over Gr(k,n): k(n-k)+1 Plucker labels
// {1..k-1-r} u {i..i+r} with i = n-c-r, frozen at the n cyclic intervals.
ChartRef grassmannian_seed(int k, int n);

// Chart on configurations of n flags in SL_k from a polygon triangulation:
// k-1 minor labels per edge plus (k-1)(k-2)/2 per triangle, glued per
// triangle with half-weight arrows along edges; frozen = boundary edges.
ChartRef confA_seed(int k, int n, const Triangulation& T);

// (k, n) of a flag chart, read off its labels
std::pair<int, int> flag_chart_kn(const ChartRef& chart);

// Recover the triangulation a flag chart was built from: supports of
// two-vertex labels are the edges, and a triple is a triangle exactly when
// all three of its edges carry labels.
Triangulation chart_triangulation(const ChartRef& chart);

// Exponent-one flag label at each vertex of J: the pullback of the Plucker
// coordinate P_J under the flag -> first vector projection.
FlagMonomialLabel pi_pullback(const PluckerLabel& J, int n);

// Index shift v -> v-1 (mod n) on either label kind.
Label twisted_shift(const Label& lab, int n);

struct FlipResult {
  Triangulation flipped;
  std::vector<int> path;      // mutation path on confA_seed(k,n,T) indices
  std::vector<Label> labels;  // label held by each chart vertex afterwards
};

// Diagonal flip as a mutation path: octahedron-recurrence schedule consuming
// the k-1 diagonal functions and the quad's interior functions, producing
// the chart of the flipped triangulation up to vertex relabeling.  The
// returned labels are a claim; callers certify them against direct
// evaluation on sample configurations.
FlipResult flip_sequence(int k, const Triangulation& T, int a, int b);

// ---- evaluation over a field F (Rational or Series) ----

inline bool field_eq(const Rational& a, const Rational& b) { return a == b; }
inline bool field_eq(const Series& a, const Series& b) { return series_eq(a, b); }

// minor on the columns indexed by J (1-based labels)
template <class F>
F pluecker_eval(const Mat<F>& M, const PluckerLabel& J) {
  std::vector<int> cols;
  for (int j : J.J) {
    require(1 <= j && j <= M.cols, "pluecker: column out of range");
    cols.push_back(j - 1);
  }
  return det(select_cols(M, cols));
}

// n flags in F^k, each a k-column frame (column m spans the m-dimensional
// subspace together with its predecessors)
template <class F>
struct FlagConfig {
  int k = 0, n = 0;
  std::vector<Mat<F>> flags;
};

template <class F>
void validate_flag_config(const FlagConfig<F>& C, bool sl_mode = true) {
  require(static_cast<int>(C.flags.size()) == C.n, "config: flag count mismatch");
  for (auto& f : C.flags) {
    require(f.rows == C.k && f.cols == C.k, "config: frame shape mismatch");
    F d = det(f);
    if (sl_mode)
      require(field_eq(d, Ring<F>::one()), "config: frame not unimodular");
    else
      require(!field_eq(d, Ring<F>::zero()), "config: degenerate frame");
  }
}

// determinant of concatenated frame prefixes, vertices in ascending order
// (the cyclic-order representative used throughout)
template <class F>
F f_eval(const FlagConfig<F>& C, const FlagMonomialLabel& m) {
  require(m.degree() == C.k, "f_eval: exponents must sum to k");
  Mat<F> M(C.k, C.k);
  int col = 0;
  for (auto& [v, e] : m.exp) {  // std::map iterates vertices ascending
    require(1 <= v && v <= C.n && e >= 1, "f_eval: bad label vertex");
    for (int j = 0; j < e; ++j, ++col)
      for (int i = 0; i < C.k; ++i) M.at(i, col) = C.flags[v - 1].at(i, j);
  }
  return det(M);
}

// k x n matrix whose column v is the first frame vector of flag v
template <class F>
Mat<F> first_vectors(const FlagConfig<F>& C) {
  Mat<F> M(C.k, C.n);
  for (int v = 0; v < C.n; ++v)
    for (int i = 0; i < C.k; ++i) M.at(i, v) = C.flags[v].at(i, 0);
  return M;
}

// twisted cyclic shift on a column configuration: (v_2,..,v_n, s v_1) with
// s = (-1)^(k-1), so every minor satisfies P_J(shifted) = P_{J+1}(original)
template <class F>
Mat<F> twisted_shift(const Mat<F>& M) {
  Mat<F> out(M.rows, M.cols);
  for (int j = 0; j + 1 < M.cols; ++j)
    for (int i = 0; i < M.rows; ++i) out.at(i, j) = M.at(i, j + 1);
  for (int i = 0; i < M.rows; ++i) {
    F v = M.at(i, 0);
    out.at(i, M.cols - 1) = (M.rows % 2 == 0) ? Ring<F>::sub(Ring<F>::zero(), v) : v;
  }
  return out;
}

// twisted cyclic shift on flags: (F_2,..,F_n, s F_1) with the same sign s
// applied to the whole wrapped frame
template <class F>
FlagConfig<F> twisted_shift(const FlagConfig<F>& C) {
  FlagConfig<F> out{C.k, C.n, {}};
  for (int v = 1; v < C.n; ++v) out.flags.push_back(C.flags[v]);
  Mat<F> w = C.flags[0];
  if (C.k % 2 == 0)
    for (auto& x : w.a) x = Ring<F>::sub(Ring<F>::zero(), x);
  out.flags.push_back(w);
  return out;
}

// nk columns, blocks of k with determinant 1, to 2n flags: odd positions
// read each block forward, even positions read it reversed with signs
// alternating from the second vector on. The alternation is the unique
// sign pattern under which every reversed prefix spans with the same
// orientation as the ascending selection, so reversed frames stay
// unimodular and chart minors of positive configurations stay positive.
template <class F>
FlagConfig<F> vectors_to_flags(const Mat<F>& v) {
  int k = v.rows;
  require(k >= 1 && v.cols % k == 0, "vectors_to_flags: need n blocks of k columns");
  int n = v.cols / k;
  FlagConfig<F> out{k, 2 * n, {}};
  for (int b = 0; b < n; ++b) {
    Mat<F> fwd(k, k), rev(k, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i) {
        fwd.at(i, j) = v.at(i, b * k + j);
        int rj = k - 1 - j;
        rev.at(i, rj) = rj % 2 == 0 ? v.at(i, b * k + j)
                                    : Ring<F>::sub(Ring<F>::zero(), v.at(i, b * k + j));
      }
    require(field_eq(det(fwd), Ring<F>::one()), "vectors_to_flags: block not unimodular");
    out.flags.push_back(std::move(fwd));
    out.flags.push_back(std::move(rev));
  }
  return out;
}

}  // namespace tropgr
