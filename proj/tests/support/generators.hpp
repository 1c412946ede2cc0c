#pragma once

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <vector>

#include "common/matrix.hpp"
#include "gadget/gadget.hpp"
#include "tensor_core/signature.hpp"

namespace holant::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double uniform_real(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// small integers and halves
inline Rational random_rational(Rng& rng) {
  Rational r(uniform_int(rng, -4, 4), uniform_int(rng, 1, 2));
  r.canonicalize();
  return r;
}

template <Scalar T>
T random_scalar(Rng& rng) {
  if constexpr (is_exact_v<T>) {
    return random_rational(rng);
  } else {
    return uniform_real(rng);
  }
}

template <Scalar T>
Signature<T> random_signature(Rng& rng, int q, int n) {
  std::vector<T> v;
  for (std::size_t i = 0; i < ipow(q, n); ++i) v.push_back(random_scalar<T>(rng));
  return Signature<T>(q, n, std::move(v));
}

template <Scalar T>
Matrix<T> random_matrix(Rng& rng, int rows, int cols) {
  Matrix<T> m(rows, cols);
  for (auto& v : m.data()) v = random_scalar<T>(rng);
  return m;
}

template <Scalar T>
Signature<T> random_symmetric_signature(Rng& rng, int q, int n) {
  std::vector<T> v(ipow(q, n));
  std::vector<int> x(n, 0);
  std::vector<T> by_sorted(ipow(q, n), T(0));
  std::vector<bool> set(ipow(q, n), false);
  std::size_t idx = 0;
  do {
    std::vector<int> s = x;
    std::sort(s.begin(), s.end());
    std::size_t key = tuple_index(q, s);
    if (!set[key]) {
      by_sorted[key] = random_scalar<T>(rng);
      set[key] = true;
    }
    v[idx++] = by_sorted[key];
  } while (next_tuple(q, x));
  return Signature<T>(q, n, std::move(v));
}

// Haar-distributed via QR with sign correction.
inline Matrix<double> haar_orthogonal(Rng& rng, int q) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd a(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) a(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd qm = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  Matrix<double> out(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) out(i, j) = qm(i, j) * (r(j, j) < 0 ? -1.0 : 1.0);
  return out;
}

// Cayley transform (I − S)(I + S)^{-1} of a random rational skew-symmetric S,
// optionally times a reflection: a rational orthogonal matrix.
inline Matrix<Rational> cayley_orthogonal(Rng& rng, int q) {
  Matrix<Rational> s(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      s(i, j) = random_rational(rng);
      s(j, i) = -s(i, j);
    }
  Matrix<Rational> id = Matrix<Rational>::identity(q);
  Matrix<Rational> a = id + s;
  Matrix<Rational> inv = id;
  for (int c = 0; c < q; ++c) {
    int p = c;
    while (a(p, c) == 0) ++p;
    for (int j = 0; j < q; ++j) {
      std::swap(a(c, j), a(p, j));
      std::swap(inv(c, j), inv(p, j));
    }
    Rational piv = a(c, c);
    for (int j = 0; j < q; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int r = 0; r < q; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (int j = 0; j < q; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  Matrix<Rational> h = (id - s) * inv;
  if (uniform_int(rng, 0, 1) == 1)
    for (int j = 0; j < q; ++j) h(0, j) = -h(0, j);
  return h;
}

// Random gadget over `table`: vertices drawn from the table, then a uniform
// perfect matching of all port stubs and m+d leg stubs.
template <Scalar T>
Gadget<T> random_gadget(Rng& rng, const std::vector<Signature<T>>& table, int m, int d, int max_vertices) {
  const int q = table.front().domain();
  bool odd = false;
  for (const auto& f : table) odd = odd || f.arity() % 2 == 1;
  if (!odd && (m + d) % 2 == 1) throw std::invalid_argument("leg parity unreachable with even arities");
  for (int attempt = 0;; ++attempt) {
    int nv = uniform_int(rng, 0, max_vertices);
    std::vector<int> sigs;
    int stubs = m + d;
    for (int i = 0; i < nv; ++i) {
      sigs.push_back(uniform_int(rng, 0, static_cast<int>(table.size()) - 1));
      stubs += table[sigs.back()].arity();
    }
    if (stubs % 2 != 0) continue;
    std::vector<int> order(stubs);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> edge_of(stubs);
    for (int i = 0; i < stubs; i += 2) edge_of[order[i]] = edge_of[order[i + 1]] = i / 2;
    std::vector<Vertex> vertices;
    int s = 0;
    for (int sig : sigs) {
      Vertex v{sig, {}};
      for (int k = 0; k < table[sig].arity(); ++k) v.ports.push_back(edge_of[s++]);
      vertices.push_back(v);
    }
    std::vector<int> legs;
    for (int k = 0; k < m + d; ++k) legs.push_back(edge_of[s++]);
    return Gadget<T>(q, table, vertices, legs, m, uniform_int(rng, 0, 3) == 0 ? 1 : 0);
  }
}

}  // namespace holant::testing
