#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "common/matrix.hpp"
#include "tensor_core/similar_pair.hpp"

namespace holant {

Eigen::MatrixXd to_eigen(const Matrix<double>& m);
Matrix<double> from_eigen(const Eigen::MatrixXd& m);

struct JointDiagResult {
  OrthogonalMap h;                           // columns are the common eigenvectors
  std::vector<std::vector<double>> diagonals;  // diag(HᵀMᵢH), one per input
  double residual = 0.0;                     // max off-diagonal magnitude after the transform
};

// Hᵀ Mᵢ H diagonal for all i; columns sorted by descending diagonal tuples,
// each column's first entry above 1e-10 positive.
JointDiagResult joint_diagonalize(const std::vector<Matrix<double>>& mats, double tol = kDefaultTol,
                                  std::uint64_t seed = 0);

// M = Uᵀ diag(d) V with d descending.
struct SvdFactor {
  Matrix<double> u;
  std::vector<double> d;
  Matrix<double> v;
};

SvdFactor svd_factor(const Matrix<double>& m);

// Symmetric eigendecomposition M = Q diag(λ) Qᵀ, λ ascending.
struct EigenFactor {
  std::vector<double> values;
  Matrix<double> vectors;
};

EigenFactor symmetric_eigen(const Matrix<double>& m);

// Level sets of a diagonal matrix with their indicators, each a Lagrange
// polynomial in D. Values appear in order of first occurrence.
template <Scalar T>
struct IndicatorFamily {
  std::vector<T> values;
  std::vector<std::vector<int>> level_sets;
  std::vector<Matrix<T>> indicators;
};

namespace detail {

// Diagonal entries with float values merged when within a relative gap.
template <Scalar T>
std::vector<T> clustered_diagonal(const Matrix<T>& d, double cluster_tol) {
  std::vector<T> diag;
  for (std::size_t i = 0; i < d.rows(); ++i) diag.push_back(d(i, i));
  if constexpr (!is_exact_v<T>) {
    std::vector<std::size_t> order(diag.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
    double scale = 1.0;
    for (double v : diag) scale = std::max(scale, std::abs(v));
    std::vector<double> out = diag;
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i + 1;
      while (j < order.size() && diag[order[j]] - diag[order[j - 1]] <= cluster_tol * scale) ++j;
      double mean = 0;
      for (std::size_t k = i; k < j; ++k) mean += diag[order[k]];
      mean /= static_cast<double>(j - i);
      for (std::size_t k = i; k < j; ++k) out[order[k]] = mean;
      i = j;
    }
    return out;
  } else {
    (void)cluster_tol;
    return diag;
  }
}

}  // namespace detail

template <Scalar T>
IndicatorFamily<T> vandermonde_indicators(const Matrix<T>& d, double cluster_tol = 1e-6) {
  require(d.square(), ErrorCode::dimension_mismatch, "indicator interpolation needs a square matrix");
  require(is_diagonal(d, kDefaultTol), ErrorCode::invalid_argument, "indicator interpolation needs a diagonal matrix");
  const auto diag = detail::clustered_diagonal(d, cluster_tol);
  const std::size_t q = diag.size();
  Matrix<T> dm = Matrix<T>::diagonal(diag);
  IndicatorFamily<T> fam;
  for (std::size_t i = 0; i < q; ++i) {
    auto it = std::find(fam.values.begin(), fam.values.end(), diag[i]);
    if (it == fam.values.end()) {
      fam.values.push_back(diag[i]);
      fam.level_sets.push_back({static_cast<int>(i)});
    } else {
      fam.level_sets[static_cast<std::size_t>(it - fam.values.begin())].push_back(static_cast<int>(i));
    }
  }
  for (const T& a : fam.values) {
    Matrix<T> p = Matrix<T>::identity(q);
    for (const T& b : fam.values) {
      if (b == a) continue;
      Matrix<T> factor = dm - b * Matrix<T>::identity(q);
      p = T(T(1) / T(a - b)) * (p * factor);
    }
    fam.indicators.push_back(std::move(p));
  }
  return fam;
}

// Signed permutation P with P_{π(x),x} = s_x mapping each weight family a^k
// of an n_k-ary general equality to b^k: b^k_{π(x)} = s_x^{n_k} a^k_x.
// Identity and positive signs are preferred.
template <Scalar T>
std::optional<Matrix<T>> signed_perm_match(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b,
                                           const std::vector<int>& arities, double tol = 1e-8) {
  require(a.size() == b.size() && a.size() == arities.size(), ErrorCode::dimension_mismatch,
          "weight families and arities must have equal counts");
  std::size_t q = 0;
  if (!a.empty()) q = a.front().size();
  for (std::size_t k = 0; k < a.size(); ++k)
    require(a[k].size() == q && b[k].size() == q, ErrorCode::dimension_mismatch, "weight vectors must share a length");
  if (a.empty()) return std::nullopt;
  double scale = 1.0;
  for (const auto& v : a)
    for (const auto& x : v) scale = std::max(scale, magnitude(x));
  auto fits = [&](std::size_t x, std::size_t y, int sign) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      T target = a[k][x];
      if (sign < 0 && arities[k] % 2 == 1) target = -target;
      if (!near(b[k][y], target, tol, scale)) return false;
    }
    return true;
  };
  std::vector<int> image(q, -1), sign(q, 1);
  std::vector<bool> used(q, false);
  auto search = [&](auto&& self, std::size_t x) -> bool {
    if (x == q) return true;
    for (std::size_t y = 0; y < q; ++y) {
      if (used[y]) continue;
      for (int s : {1, -1}) {
        if (!fits(x, y, s)) continue;
        used[y] = true;
        image[x] = static_cast<int>(y);
        sign[x] = s;
        if (self(self, x + 1)) return true;
        used[y] = false;
      }
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  Matrix<T> p(q, q);
  for (std::size_t x = 0; x < q; ++x) p(static_cast<std::size_t>(image[x]), x) = T(sign[x]);
  return p;
}

// Polar factor X(XᵀX)^{-1/2}, the nearest orthogonal matrix.
Matrix<double> polar_orthogonal(const Matrix<double>& x);

// Haar-distributed orthogonal matrix: QR of a Gaussian matrix, diag(R) > 0.
Matrix<double> random_orthogonal(std::mt19937_64& rng, int q);

}  // namespace holant
