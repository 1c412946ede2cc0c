#pragma once

#include <cmath>
#include <vector>

#include "common/matrix.hpp"

namespace holant {

template <Scalar T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form. Exact on the rational backend; the float backend
// uses partial pivoting and treats entries within tol·max|a| as zero.
template <Scalar T>
RowEchelon<T> rref(Matrix<T> a, double tol = kDefaultTol) {
  const double eps = is_exact_v<T> ? 0.0 : tol * std::max(1.0, max_abs(a));
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t best = row;
    double best_mag = -1.0;
    for (std::size_t r = row; r < a.rows(); ++r) {
      if constexpr (is_exact_v<T>) {
        if (sgn(a(r, col)) != 0) {
          best = r;
          best_mag = 1.0;
          break;
        }
      } else if (std::abs(a(r, col)) > best_mag) {
        best = r;
        best_mag = std::abs(a(r, col));
      }
    }
    if (best_mag < 0 || is_zero(a(best, col), eps)) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(best, j));
    const T piv = a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) /= piv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col), 0.0)) continue;
      const T f = a(r, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if constexpr (!is_exact_v<T>) {
    for (auto& v : a.data())
      if (std::abs(v) <= eps) v = 0.0;
  }
  return RowEchelon<T>{std::move(a), std::move(pivots)};
}

// Basis of {v : A v = 0}, one vector per free column with a 1 in that column.
template <Scalar T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a, double tol = kDefaultTol) {
  auto e = rref(a, tol);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Scalar T>
std::size_t rank(const Matrix<T>& a, double tol = kDefaultTol) {
  return rref(a, tol).pivots.size();
}

}  // namespace holant
