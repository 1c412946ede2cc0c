#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "common/scalar.hpp"

namespace holant {

inline std::size_t ipow(int q, int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::size_t>(q);
  return r;
}

// Last input varies fastest.
inline std::size_t tuple_index(int q, std::span<const int> x) {
  std::size_t idx = 0;
  for (int v : x) idx = idx * static_cast<std::size_t>(q) + static_cast<std::size_t>(v);
  return idx;
}

inline std::vector<int> index_tuple(int q, int n, std::size_t idx) {
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    x[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(q));
    idx /= static_cast<std::size_t>(q);
  }
  return x;
}

// Advances x through [q]^n in index order; false after the last tuple.
inline bool next_tuple(int q, std::vector<int>& x) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (++x[i] < q) return true;
    x[i] = 0;
  }
  return false;
}

// Dense n-ary tensor over [q]; immutable after construction.
template <Scalar T>
class Signature {
 public:
  Signature() : q_(1), arity_(0), values_{T(0)} {}
  Signature(int q, int arity, std::vector<T> values) : q_(q), arity_(arity), values_(std::move(values)) {
    require(q >= 1, ErrorCode::invalid_argument, "signature domain size must be positive");
    require(arity >= 0, ErrorCode::invalid_argument, "signature arity must be non-negative");
    require(values_.size() == ipow(q, arity), ErrorCode::schema,
            "signature needs q^n = " + std::to_string(ipow(q, arity)) + " values, got " +
                std::to_string(values_.size()));
  }

  static Signature zero(int q, int arity) { return Signature(q, arity, std::vector<T>(ipow(q, arity), T(0))); }

  int domain() const { return q_; }
  int arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  const T& operator[](std::size_t i) const { return values_[i]; }
  const T& at(std::span<const int> x) const { return values_[tuple_index(q_, x)]; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int q_;
  int arity_;
  std::vector<T> values_;
};

template <Scalar To, Scalar From>
Signature<To> convert(const Signature<From>& f) {
  std::vector<To> v;
  v.reserve(f.size());
  for (const auto& x : f.values()) v.push_back(scalar_cast<To>(x));
  return Signature<To>(f.domain(), f.arity(), std::move(v));
}

template <Scalar To, Scalar From>
std::vector<Signature<To>> convert(const std::vector<Signature<From>>& fs) {
  std::vector<Signature<To>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(convert<To>(f));
  return out;
}

template <Scalar T>
double max_abs(const Signature<T>& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, magnitude(v));
  return m;
}

template <Scalar T>
bool is_zero_signature(const Signature<T>& f, double tol = kDefaultTol) {
  for (const auto& v : f.values())
    if (!is_zero(v, tol)) return false;
  return true;
}

}  // namespace holant
