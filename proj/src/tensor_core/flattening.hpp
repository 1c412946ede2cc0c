#pragma once

#include "common/matrix.hpp"
#include "tensor_core/signature.hpp"

namespace holant {

// Row index (x_0..x_{m-1}), column index (y_0..y_{d-1}) with y_0 most significant;
// entry (x, y) is F(x_0..x_{m-1}, y_{d-1}..y_0).
template <Scalar T>
struct Flattening {
  int q = 1;
  int m = 0;
  int d = 0;
  Matrix<T> matrix;

  friend bool operator==(const Flattening&, const Flattening&) = default;
};

// index of the digit-reversed d-tuple
inline std::size_t reversed_index(int q, int d, std::size_t idx) {
  std::size_t out = 0;
  for (int i = 0; i < d; ++i) {
    out = out * static_cast<std::size_t>(q) + idx % static_cast<std::size_t>(q);
    idx /= static_cast<std::size_t>(q);
  }
  return out;
}

template <Scalar T>
Flattening<T> flatten(const Signature<T>& f, int m, int d) {
  require(m >= 0 && d >= 0 && m + d == f.arity(), ErrorCode::arity_mismatch,
          "flatten split " + std::to_string(m) + "+" + std::to_string(d) + " does not match arity " +
              std::to_string(f.arity()));
  const int q = f.domain();
  const std::size_t rows = ipow(q, m), cols = ipow(q, d);
  Matrix<T> mat(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t tail = reversed_index(q, d, c);
    for (std::size_t r = 0; r < rows; ++r) mat(r, c) = f[r * cols + tail];
  }
  return Flattening<T>{q, m, d, std::move(mat)};
}

template <Scalar T>
Signature<T> unflatten(const Flattening<T>& fl) {
  const int q = fl.q;
  const std::size_t rows = ipow(q, fl.m), cols = ipow(q, fl.d);
  require(fl.matrix.rows() == rows && fl.matrix.cols() == cols, ErrorCode::dimension_mismatch,
          "flattening matrix shape does not match q^m x q^d");
  std::vector<T> values(rows * cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t tail = reversed_index(q, fl.d, c);
    for (std::size_t r = 0; r < rows; ++r) values[r * cols + tail] = fl.matrix(r, c);
  }
  return Signature<T>(q, fl.m + fl.d, std::move(values));
}

}  // namespace holant
