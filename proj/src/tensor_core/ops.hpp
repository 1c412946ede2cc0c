#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "common/matrix.hpp"
#include "tensor_core/flattening.hpp"
#include "tensor_core/signature.hpp"

namespace holant {

namespace detail {

// out(.., a, ..) = Σ_b h(a, b) in(.., b, ..) along one axis
template <Scalar T>
std::vector<T> mode_product(const std::vector<T>& in, int q, int n, int axis, const Matrix<T>& h) {
  const std::size_t inner = ipow(q, n - 1 - axis);
  const std::size_t outer = ipow(q, axis);
  const std::size_t uq = static_cast<std::size_t>(q);
  std::vector<T> out(in.size(), T(0));
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t a = 0; a < uq; ++a)
      for (std::size_t b = 0; b < uq; ++b) {
        const T& hab = h(a, b);
        if (is_zero(hab, 0.0)) continue;
        const std::size_t src = (o * uq + b) * inner, dst = (o * uq + a) * inner;
        for (std::size_t i = 0; i < inner; ++i) out[dst + i] += hab * in[src + i];
      }
  return out;
}

}  // namespace detail

// (HF)^{n,0} = H^{⊗n} f
template <Scalar T>
Signature<T> apply_transform(const Matrix<T>& h, const Signature<T>& f) {
  const int q = f.domain();
  require(h.rows() == static_cast<std::size_t>(q) && h.cols() == static_cast<std::size_t>(q),
          ErrorCode::dimension_mismatch, "transform must be q x q for q = " + std::to_string(q));
  std::vector<T> v = f.values();
  for (int axis = 0; axis < f.arity(); ++axis) v = detail::mode_product(v, q, f.arity(), axis, h);
  return Signature<T>(q, f.arity(), std::move(v));
}

// (FA)^{0,n} = F^{0,n} A^{⊗n}
template <Scalar T>
Signature<T> apply_right(const Signature<T>& f, const Matrix<T>& a) {
  return apply_transform(transpose(a), f);
}

template <Scalar T>
std::vector<Signature<T>> apply_transform(const Matrix<T>& h, const std::vector<Signature<T>>& fs) {
  std::vector<Signature<T>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(apply_transform(h, f));
  return out;
}

template <Scalar T>
T inner_product(const Signature<T>& f, const Signature<T>& g) {
  require(f.domain() == g.domain(), ErrorCode::domain_mismatch, "inner product across different domains");
  require(f.arity() == g.arity(), ErrorCode::arity_mismatch, "inner product across different arities");
  T s(0);
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s;
}

template <Scalar T>
double norm(const Signature<T>& f) {
  return std::sqrt(to_double(inner_product(f, f)));
}

template <Scalar T>
double distance(const Signature<T>& f, const Signature<T>& g) {
  require(f.domain() == g.domain() && f.arity() == g.arity(), ErrorCode::arity_mismatch,
          "distance between signatures of different shape");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double d = to_double(T(f[i] - g[i]));
    s += d * d;
  }
  return std::sqrt(s);
}

template <Scalar T>
double max_abs_diff(const Signature<T>& f, const Signature<T>& g) {
  require(f.domain() == g.domain() && f.arity() == g.arity(), ErrorCode::arity_mismatch,
          "comparing signatures of different shape");
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, magnitude(T(f[i] - g[i])));
  return m;
}

template <Scalar T>
bool approx_equal(const Signature<T>& f, const Signature<T>& g, double tol = kDefaultTol) {
  if (f.domain() != g.domain() || f.arity() != g.arity()) return false;
  if constexpr (is_exact_v<T>) {
    return f == g;
  } else {
    double scale = std::max({1.0, max_abs(f), max_abs(g)});
    return max_abs_diff(f, g) <= tol * scale;
  }
}

struct AsymmetryWitness {
  std::vector<int> x;
  std::vector<int> swapped;
};

// First adjacent transposition (in index order) that changes the value.
template <Scalar T>
std::optional<AsymmetryWitness> asymmetry_witness(const Signature<T>& f, double tol = kDefaultTol) {
  const int q = f.domain(), n = f.arity();
  if (n < 2) return std::nullopt;
  const double scale = std::max(1.0, max_abs(f));
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  do {
    for (int i = 0; i + 1 < n; ++i) {
      if (x[i] == x[i + 1]) continue;
      std::vector<int> y = x;
      std::swap(y[i], y[i + 1]);
      if (!near(f.at(x), f.at(y), tol, scale)) return AsymmetryWitness{x, y};
    }
  } while (next_tuple(q, x));
  return std::nullopt;
}

template <Scalar T>
bool is_symmetric(const Signature<T>& f, double tol = kDefaultTol) {
  return !asymmetry_witness(f, tol).has_value();
}

// Domain of g is shifted past the domain of f; mixed entries are zero.
template <Scalar T>
Signature<T> direct_sum(const Signature<T>& f, const Signature<T>& g) {
  require(f.arity() == g.arity(), ErrorCode::arity_mismatch, "direct sum needs equal arities");
  const int qf = f.domain(), qg = g.domain(), q = qf + qg, n = f.arity();
  std::vector<T> v(ipow(q, n), T(0));
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  do {
    v[tuple_index(q, x)] = f.at(x);
  } while (next_tuple(qf, x));
  std::fill(x.begin(), x.end(), 0);
  do {
    std::vector<int> y = x;
    for (auto& e : y) e += qf;
    v[tuple_index(q, y)] = g.at(x);
  } while (next_tuple(qg, x));
  return Signature<T>(q, n, std::move(v));
}

template <Scalar T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

enum class Block { X, Y };

// X ⊔ Y = [q], both nonempty.
struct BlockPartition {
  int q = 0;
  std::vector<int> x;
  std::vector<int> y;

  static BlockPartition from_x(int q, std::vector<int> x) {
    std::vector<bool> in(static_cast<std::size_t>(q), false);
    for (int v : x) {
      require(v >= 0 && v < q, ErrorCode::invalid_argument, "partition element outside [q]");
      in[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> y;
    for (int v = 0; v < q; ++v)
      if (!in[static_cast<std::size_t>(v)]) y.push_back(v);
    BlockPartition p{q, std::move(x), std::move(y)};
    p.validate();
    return p;
  }

  void validate() const {
    require(!x.empty() && !y.empty(), ErrorCode::invalid_argument, "partition blocks must be nonempty");
    std::vector<int> all = x;
    all.insert(all.end(), y.begin(), y.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expect(static_cast<std::size_t>(q));
    std::iota(expect.begin(), expect.end(), 0);
    require(all == expect, ErrorCode::invalid_argument, "partition blocks must be disjoint and cover [q]");
  }

  const std::vector<int>& part(Block b) const { return b == Block::X ? x : y; }
};

// Tensor with per-axis sizes; last axis fastest.
template <Scalar T>
struct Subtensor {
  std::vector<int> dims;
  std::vector<T> values;
};

// Axis i restricted to the listed domain elements, kept in listed order.
template <Scalar T>
Subtensor<T> restrict_axes(const Signature<T>& f, const std::vector<std::vector<int>>& axes) {
  require(static_cast<int>(axes.size()) == f.arity(), ErrorCode::arity_mismatch,
          "restriction pattern length must equal arity");
  Subtensor<T> out;
  std::size_t total = 1;
  for (const auto& a : axes) {
    for (int v : a)
      require(v >= 0 && v < f.domain(), ErrorCode::invalid_argument, "restriction element outside [q]");
    out.dims.push_back(static_cast<int>(a.size()));
    total *= a.size();
  }
  out.values.reserve(total);
  if (total == 0) return out;
  const std::size_t n = axes.size();
  std::vector<std::size_t> pos(n, 0);
  std::vector<int> x(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = axes[i][pos[i]];
    out.values.push_back(f.at(x));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < axes[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

template <Scalar T>
Subtensor<T> restrict(const Signature<T>& f, const BlockPartition& p, const std::vector<Block>& pattern) {
  p.validate();
  require(p.q == f.domain(), ErrorCode::domain_mismatch, "partition domain differs from signature domain");
  std::vector<std::vector<int>> axes;
  for (Block b : pattern) axes.push_back(p.part(b));
  return restrict_axes(f, axes);
}

// All inputs restricted to z; a signature over [|z|].
template <Scalar T>
Signature<T> restrict_uniform(const Signature<T>& f, const std::vector<int>& z) {
  require(!z.empty(), ErrorCode::invalid_argument, "restriction to an empty subdomain");
  auto sub = restrict_axes(f, std::vector<std::vector<int>>(static_cast<std::size_t>(f.arity()), z));
  return Signature<T>(static_cast<int>(z.size()), f.arity(), std::move(sub.values));
}

template <Scalar T>
Matrix<T> submatrix(const Matrix<T>& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix<T> out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = a(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
  return out;
}

// Row component i restricted to r_i, column component y_j restricted to c_j.
// Equals flatten(F restricted by r ++ reverse(c)).
template <Scalar T>
Matrix<T> block(const Flattening<T>& fl, const BlockPartition& p, const std::vector<Block>& r,
                const std::vector<Block>& c) {
  p.validate();
  require(p.q == fl.q, ErrorCode::domain_mismatch, "partition domain differs from flattening domain");
  require(static_cast<int>(r.size()) == fl.m && static_cast<int>(c.size()) == fl.d, ErrorCode::arity_mismatch,
          "block pattern lengths must equal (m, d)");
  auto tuples = [&](const std::vector<Block>& pattern) {
    std::vector<int> idx{0};
    for (Block b : pattern) {
      std::vector<int> next;
      for (int base : idx)
        for (int v : p.part(b)) next.push_back(base * fl.q + v);
      idx = std::move(next);
    }
    return idx;
  };
  return submatrix(fl.matrix, tuples(r), tuples(c));
}

// Sums the diagonal x_i = x_j; result keeps the remaining inputs in order.
template <Scalar T>
Signature<T> contract(const Signature<T>& f, int i, int j) {
  const int n = f.arity(), q = f.domain();
  require(i != j, ErrorCode::invalid_argument, "contracted inputs must differ");
  require(i >= 0 && j >= 0 && i < n && j < n, ErrorCode::invalid_argument, "contracted input out of range");
  if (i > j) std::swap(i, j);
  std::vector<T> out(ipow(q, n - 2), T(0));
  std::vector<int> rest(static_cast<std::size_t>(n - 2), 0);
  std::vector<int> x(static_cast<std::size_t>(n));
  std::size_t k = 0;
  do {
    for (int a = 0, b = 0; a < n; ++a) {
      if (a == i || a == j) continue;
      x[static_cast<std::size_t>(a)] = rest[static_cast<std::size_t>(b++)];
    }
    T s(0);
    for (int z = 0; z < q; ++z) {
      x[static_cast<std::size_t>(i)] = z;
      x[static_cast<std::size_t>(j)] = z;
      s += f.at(x);
    }
    out[k++] = s;
  } while (next_tuple(q, rest));
  return Signature<T>(q, n - 2, std::move(out));
}

template <Scalar T>
Signature<T> tensor_product(const Signature<T>& f, const Signature<T>& g) {
  require(f.domain() == g.domain(), ErrorCode::domain_mismatch, "tensor product across different domains");
  std::vector<T> v;
  v.reserve(f.size() * g.size());
  for (const auto& a : f.values())
    for (const auto& b : g.values()) v.push_back(a * b);
  return Signature<T>(f.domain(), f.arity() + g.arity(), std::move(v));
}

inline void validate_permutation(const std::vector<int>& sigma, int n) {
  require(static_cast<int>(sigma.size()) == n, ErrorCode::invalid_argument, "permutation length must equal arity");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s : sigma) {
    require(s >= 0 && s < n && !seen[static_cast<std::size_t>(s)], ErrorCode::invalid_argument,
            "not a permutation");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

// Input i of f becomes input sigma[i] of the result.
template <Scalar T>
Signature<T> permute_inputs(const Signature<T>& f, const std::vector<int>& sigma) {
  const int n = f.arity(), q = f.domain();
  validate_permutation(sigma, n);
  std::vector<T> out(f.size());
  std::vector<int> x(static_cast<std::size_t>(n), 0), y(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(sigma[i])] = x[static_cast<std::size_t>(i)];
    out[tuple_index(q, y)] = f.at(x);
  } while (next_tuple(q, x));
  return Signature<T>(q, n, std::move(out));
}

template <Scalar T>
Signature<T> scale(const T& c, const Signature<T>& f) {
  std::vector<T> v = f.values();
  for (auto& e : v) e *= c;
  return Signature<T>(f.domain(), f.arity(), std::move(v));
}

template <Scalar T>
Signature<T> add(const Signature<T>& f, const Signature<T>& g) {
  require(f.domain() == g.domain() && f.arity() == g.arity(), ErrorCode::arity_mismatch,
          "adding signatures of different shape");
  std::vector<T> v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += g[i];
  return Signature<T>(f.domain(), f.arity(), std::move(v));
}

}  // namespace holant
