#pragma once

// Independent brute-force references. None of these call the contraction engine.

#include <vector>

#include "common/matrix.hpp"
#include "gadget/gadget.hpp"
#include "tensor_core/signature.hpp"

namespace holant::testing {

// Sum over all edge assignments of the product of vertex values, legs clamped.
template <Scalar T>
Signature<T> brute_gadget_signature(const Gadget<T>& k) {
  const int q = k.domain();
  const int e = k.edge_count();
  const int n = static_cast<int>(k.legs().size());
  std::vector<T> out(ipow(q, n), T(0));
  std::vector<int> sigma(e, 0);
  T loop(1);
  for (int i = 0; i < k.loops(); ++i) loop *= T(q);
  if (e == 0) {
    T prod(1);
    for (const auto& v : k.vertices()) prod *= k.table()[v.signature][0];
    out[0] = prod * loop;
    return Signature<T>(q, n, out);
  }
  do {
    T prod(1);
    for (const auto& v : k.vertices()) {
      std::vector<int> x;
      for (int p : v.ports) x.push_back(sigma[p]);
      prod *= k.table()[v.signature].at(x);
    }
    std::vector<int> y;
    for (int l : k.legs()) y.push_back(sigma[l]);
    out[tuple_index(q, y)] += prod * loop;
  } while (next_tuple(q, sigma));
  return Signature<T>(q, n, out);
}

// Flattening from the defining formula, without shared helpers.
template <Scalar T>
Matrix<T> brute_flatten(const Signature<T>& f, int m, int d) {
  const int q = f.domain();
  Matrix<T> out(ipow(q, m), ipow(q, d));
  std::vector<int> x(m, 0);
  std::size_t r = 0;
  do {
    std::vector<int> y(d, 0);
    std::size_t c = 0;
    do {
      std::vector<int> full = x;
      for (int j = d - 1; j >= 0; --j) full.push_back(y[j]);
      out(r, c) = f.at(full);
      ++c;
    } while (next_tuple(q, y));
    ++r;
  } while (next_tuple(q, x));
  return out;
}

template <Scalar T>
Matrix<T> naive_product(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T s(0);
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

// (HF)(y) = Σ_x Π_i H[y_i][x_i] F(x)
template <Scalar T>
Signature<T> brute_transform(const Matrix<T>& h, const Signature<T>& f) {
  const int q = f.domain(), n = f.arity();
  std::vector<T> out;
  std::vector<int> y(n, 0);
  do {
    T s(0);
    std::vector<int> x(n, 0);
    do {
      T p = f.at(x);
      for (int i = 0; i < n; ++i) p *= h(y[i], x[i]);
      s += p;
    } while (next_tuple(q, x));
    out.push_back(s);
  } while (next_tuple(q, y));
  return Signature<T>(q, n, out);
}

// Σ_x a_x e_x^{⊗n} entry by entry.
template <Scalar T>
Signature<T> brute_geneq(int n, const std::vector<T>& a) {
  const int q = static_cast<int>(a.size());
  std::vector<T> out;
  std::vector<int> x(n, 0);
  do {
    bool constant = true;
    for (int v : x) constant = constant && v == x[0];
    out.push_back(constant ? a[x[0]] : T(0));
  } while (next_tuple(q, x));
  return Signature<T>(q, n, out);
}

// (F₁*F₂)(x, y) = Σ_z F₁(x, z) F₂(y, z) by direct summation.
template <Scalar T>
Signature<T> brute_star(const Signature<T>& f1, const Signature<T>& f2) {
  const int q = f1.domain(), n1 = f1.arity() - 1, n2 = f2.arity() - 1;
  std::vector<T> out;
  std::vector<int> xy(n1 + n2, 0);
  do {
    T s(0);
    for (int z = 0; z < q; ++z) {
      std::vector<int> a(xy.begin(), xy.begin() + n1), b(xy.begin() + n1, xy.end());
      a.push_back(z);
      b.push_back(z);
      s += f1.at(a) * f2.at(b);
    }
    out.push_back(s);
  } while (next_tuple(q, xy));
  return Signature<T>(q, n1 + n2, out);
}

}  // namespace holant::testing
