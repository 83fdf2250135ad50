#pragma once

#include <vector>

#include "tropgr/rational.hpp"
#include "tropgr/series.hpp"

namespace tropgr {

// Ring adapters let determinant code run unchanged over exact rationals
// and over Laurent series.
template <class T>
struct Ring;

template <>
struct Ring<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static Rational sub(const Rational& a, const Rational& b) { return a - b; }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static Rational div(const Rational& a, const Rational& b) {
    require(b != 0, "matrix: division by zero");
    return a / b;
  }
};

template <>
struct Ring<Series> {
  static Series zero() { return Series::zero(); }
  static Series one() { return Series::constant(Rational(1)); }
  static Series add(const Series& a, const Series& b) { return sadd(a, b); }
  static Series sub(const Series& a, const Series& b) { return ssub(a, b); }
  static Series mul(const Series& a, const Series& b) { return smul(a, b); }
  static Series div(const Series& a, const Series& b) { return sdiv(a, b); }
};

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Ring<T>::zero()) {}

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Ring<T>::one();
    return m;
  }
};

// column selection (0-based indices), preserving order
template <class T>
Mat<T> select_cols(const Mat<T>& m, const std::vector<int>& cols) {
  Mat<T> out(m.rows, static_cast<int>(cols.size()));
  for (int i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j) out.at(i, static_cast<int>(j)) = m.at(i, cols[j]);
  return out;
}

template <class T>
Mat<T> select_rows(const Mat<T>& m, const std::vector<int>& rows) {
  Mat<T> out(static_cast<int>(rows.size()), m.cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < m.cols; ++j) out.at(static_cast<int>(i), j) = m.at(rows[i], j);
  return out;
}

namespace detail {
template <class T>
T det_rec(const Mat<T>& m, int row, unsigned mask) {
  if (!mask) return Ring<T>::one();
  T acc = Ring<T>::zero();
  int pos = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (!(mask & (1u << j))) continue;
    T term = Ring<T>::mul(m.at(row, j), det_rec(m, row + 1, mask & ~(1u << j)));
    acc = (pos % 2 == 0) ? Ring<T>::add(acc, term) : Ring<T>::sub(acc, term);
    ++pos;
  }
  return acc;
}
}  // namespace detail

// cofactor expansion: division-free, so exact over both rings
template <class T>
T det(const Mat<T>& m) {
  require(m.rows == m.cols, "matrix: determinant of non-square matrix");
  require(m.cols <= 16, "matrix: determinant size limit exceeded");
  if (m.rows == 0) return Ring<T>::one();
  return detail::det_rec(m, 0, (1u << m.cols) - 1);
}

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
  require(x.cols == y.rows, "matrix: incompatible product shapes");
  Mat<T> out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      T acc = Ring<T>::zero();
      for (int l = 0; l < x.cols; ++l)
        acc = Ring<T>::add(acc, Ring<T>::mul(x.at(i, l), y.at(l, j)));
      out.at(i, j) = acc;
    }
  return out;
}

// delete one row and one column
template <class T>
Mat<T> minor_matrix(const Mat<T>& m, int drop_row, int drop_col) {
  Mat<T> out(m.rows - 1, m.cols - 1);
  for (int i = 0, oi = 0; i < m.rows; ++i) {
    if (i == drop_row) continue;
    for (int j = 0, oj = 0; j < m.cols; ++j) {
      if (j == drop_col) continue;
      out.at(oi, oj) = m.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

// adj(A)·A = det(A)·I; division-free, so polynomial-exact over series
template <class T>
Mat<T> adjugate(const Mat<T>& m) {
  require(m.rows == m.cols, "matrix: adjugate of non-square matrix");
  Mat<T> out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      T c = det(minor_matrix(m, j, i));
      out.at(i, j) = ((i + j) % 2 == 0) ? c : Ring<T>::sub(Ring<T>::zero(), c);
    }
  return out;
}

// Cramer solve of A x = b; the only divisions are by det(A)
template <class T>
std::vector<T> cramer_solve(const Mat<T>& A, const std::vector<T>& b) {
  require(A.rows == A.cols && static_cast<int>(b.size()) == A.rows,
          "matrix: bad solve shape");
  T d = det(A);
  std::vector<T> x;
  x.reserve(b.size());
  for (int j = 0; j < A.cols; ++j) {
    Mat<T> Aj = A;
    for (int i = 0; i < A.rows; ++i) Aj.at(i, j) = b[i];
    x.push_back(Ring<T>::div(det(Aj), d));
  }
  return x;
}

}  // namespace tropgr
