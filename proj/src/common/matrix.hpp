#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "common/error.hpp"
#include "common/scalar.hpp"

namespace holant {

// Dense row-major matrix over one of the two scalar backends.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, ErrorCode::dimension_mismatch, "matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(std::span<const T> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols() == b.rows(), ErrorCode::dimension_mismatch, "matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <Scalar T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::dimension_mismatch, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] += b.data()[i];
  return a;
}

template <Scalar T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::dimension_mismatch,
          "matrix difference shape mismatch");
  for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] -= b.data()[i];
  return a;
}

template <Scalar T>
Matrix<T> operator*(const T& c, Matrix<T> a) {
  for (auto& v : a.data()) v *= c;
  return a;
}

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

// (a ⊗ b)_{(i,k),(j,l)} = a_{ij} b_{kl}, first factor most significant
template <Scalar T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

template <Scalar T>
Matrix<T> kron_power(const Matrix<T>& a, int n) {
  Matrix<T> out = Matrix<T>::identity(1);
  for (int i = 0; i < n; ++i) out = kron(out, a);
  return out;
}

template <Scalar T>
T trace(const Matrix<T>& a) {
  require(a.square(), ErrorCode::dimension_mismatch, "trace of non-square matrix");
  T t(0);
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

template <Scalar T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, magnitude(v));
  return m;
}

template <Scalar T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::dimension_mismatch, "matrix shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, magnitude(T(a.data()[i] - b.data()[i])));
  return m;
}

template <Scalar T>
bool is_diagonal(const Matrix<T>& a, double tol = kDefaultTol) {
  if (!a.square()) return false;
  double scale = std::max(1.0, max_abs(a));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && !near(a(i, j), T(0), tol, scale)) return false;
  return true;
}

template <Scalar T>
bool is_symmetric_matrix(const Matrix<T>& a, double tol = kDefaultTol) {
  if (!a.square()) return false;
  double scale = std::max(1.0, max_abs(a));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!near(a(i, j), a(j, i), tol, scale)) return false;
  return true;
}

// max |AᵀA − I|; exact backend returns 0 or 1
template <Scalar T>
double orthogonality_error(const Matrix<T>& a) {
  require(a.square(), ErrorCode::dimension_mismatch, "orthogonality of non-square matrix");
  Matrix<T> g = transpose(a) * a - Matrix<T>::identity(a.rows());
  if constexpr (is_exact_v<T>) {
    for (const auto& v : g.data())
      if (sgn(v) != 0) return 1.0;
    return 0.0;
  } else {
    return max_abs(g);
  }
}

template <Scalar To, Scalar From>
Matrix<To> convert(const Matrix<From>& a) {
  std::vector<To> data;
  data.reserve(a.data().size());
  for (const auto& v : a.data()) data.push_back(scalar_cast<To>(v));
  return Matrix<To>(a.rows(), a.cols(), std::move(data));
}

}  // namespace holant
