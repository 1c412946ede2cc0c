#pragma once

#include <vector>

#include "gadget/gadget.hpp"
#include "tensor_core/ops.hpp"

namespace holant::standard {

template <Scalar T>
Signature<T> gen_equality(int n, const std::vector<T>& a) {
  const int q = static_cast<int>(a.size());
  require(q >= 1, ErrorCode::invalid_argument, "generalized equality needs at least one weight");
  require(n >= 0, ErrorCode::invalid_argument, "negative arity");
  std::vector<T> v(ipow(q, n), T(0));
  if (n == 0) {
    T s(0);
    for (const auto& w : a) s += w;
    v[0] = s;
  } else {
    for (int x = 0; x < q; ++x) v[tuple_index(q, std::vector<int>(n, x))] = a[x];
  }
  return Signature<T>(q, n, std::move(v));
}

// =_0 is taken as the scalar q, the contraction of nothing over a free variable.
template <Scalar T>
Signature<T> equality(int n, int q) {
  return gen_equality<T>(n, std::vector<T>(q, T(1)));
}

template <Scalar T>
Signature<T> identity(int q) {
  return equality<T>(2, q);
}

// S(x_0..x_{n-1}, y_{n-1}..y_0) = [x_i = y_{σ(i)} for all i]
template <Scalar T>
Signature<T> braid(const std::vector<int>& sigma, int q) {
  const int n = static_cast<int>(sigma.size());
  validate_permutation(sigma, n);
  std::vector<T> v(ipow(q, 2 * n), T(0));
  std::vector<int> y(n, 0), z(2 * n);
  do {
    for (int i = 0; i < n; ++i) z[i] = y[sigma[i]];
    for (int j = 0; j < n; ++j) z[n + j] = y[n - 1 - j];
    v[tuple_index(q, z)] = T(1);
  } while (next_tuple(q, y));
  return Signature<T>(q, 2 * n, std::move(v));
}

template <Scalar T>
Signature<T> swap(int q) {
  return braid<T>({1, 0}, q);
}

// Δ_b
template <Scalar T>
Signature<T> pin(int b, int q) {
  require(b >= 0 && b < q, ErrorCode::invalid_argument, "pin value outside [q]");
  std::vector<T> v(q, T(0));
  v[b] = T(1);
  return Signature<T>(q, 1, std::move(v));
}

// binary diagonal 𝟙_Z
template <Scalar T>
Signature<T> indicator(const std::vector<int>& z, int q) {
  std::vector<T> w(q, T(0));
  for (int x : z) {
    require(x >= 0 && x < q, ErrorCode::invalid_argument, "indicator element outside [q]");
    w[x] = T(1);
  }
  return gen_equality<T>(2, w);
}

// Boolean symmetric signature [f_0, ..., f_n] indexed by Hamming weight.
template <Scalar T>
Signature<T> boolean_symmetric(const std::vector<T>& by_weight) {
  require(!by_weight.empty(), ErrorCode::invalid_argument, "symmetric signature needs n+1 values");
  const int n = static_cast<int>(by_weight.size()) - 1;
  std::vector<T> v;
  std::vector<int> x(n, 0);
  do {
    int w = 0;
    for (int b : x) w += b;
    v.push_back(by_weight[w]);
  } while (next_tuple(2, x));
  return Signature<T>(2, n, std::move(v));
}

// Boolean, 1 exactly on inputs of Hamming weight one.
template <Scalar T>
Signature<T> perfect_matching(int n) {
  std::vector<T> w(n + 1, T(0));
  require(n >= 1, ErrorCode::invalid_argument, "perfect matching signature needs arity >= 1");
  w[1] = T(1);
  return boolean_symmetric<T>(w);
}

// Product of [x_a = x_b] over the pairs of a perfect matching of the inputs.
template <Scalar T>
Signature<T> wire_signature(const std::vector<std::pair<int, int>>& pairing, int q) {
  const int n = 2 * static_cast<int>(pairing.size());
  std::vector<bool> used(n, false);
  for (auto [a, b] : pairing) {
    require(a >= 0 && b >= 0 && a < n && b < n && a != b && !used[a] && !used[b], ErrorCode::invalid_argument,
            "wire pairing is not a perfect matching");
    used[a] = used[b] = true;
  }
  std::vector<T> v;
  std::vector<int> x(n, 0);
  do {
    bool ok = true;
    for (auto [a, b] : pairing) ok = ok && x[a] == x[b];
    v.push_back(ok ? T(1) : T(0));
  } while (next_tuple(q, x));
  return Signature<T>(q, n, std::move(v));
}

// Every perfect matching of {0..n-1}, n even, in lexicographic order.
inline std::vector<std::vector<std::pair<int, int>>> all_pairings(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto& self) -> void {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(first, j);
      self(self);
      cur.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  if (n % 2 == 0) rec(rec);
  return out;
}

template <Scalar T>
Gadget<T> single_vertex(const Signature<T>& f, int m) {
  std::vector<int> ports(f.arity());
  for (int i = 0; i < f.arity(); ++i) ports[i] = i;
  return Gadget<T>(f.domain(), {f}, {Vertex{0, ports}}, ports, m);
}

template <Scalar T>
Gadget<T> wire(int q) {
  return Gadget<T>(q, {}, {}, {0, 0}, 1);
}

// I^{0,2}
template <Scalar T>
Gadget<T> cup(int q) {
  return Gadget<T>(q, {}, {}, {0, 0}, 0);
}

// I^{2,0}
template <Scalar T>
Gadget<T> cap(int q) {
  return Gadget<T>(q, {}, {}, {0, 0}, 2);
}

template <Scalar T>
Gadget<T> loop_grid(int q, int loops) {
  return Gadget<T>(q, {}, {}, {}, 0, loops);
}

// Wires only: ℓ_i joined to r_i, the identity on (ℝ^q)^{⊗n}.
template <Scalar T>
Gadget<T> wires(int q, int n) {
  std::vector<int> legs;
  for (int i = 0; i < n; ++i) legs.push_back(i);
  for (int i = n - 1; i >= 0; --i) legs.push_back(i);
  return Gadget<T>(q, {}, {}, legs, n);
}

}  // namespace holant::standard
