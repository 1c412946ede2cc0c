#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace holant {

using Rational = mpq_class;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Scalar = std::is_same_v<T, Rational> || std::is_same_v<T, double>;

inline constexpr double kDefaultTol = 1e-9;

template <class To, class From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<To, double>) {
    return v.get_d();
  } else {
    // every finite double is a dyadic rational
    return Rational(v);
  }
}

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

inline double magnitude(const Rational& v) { return std::abs(v.get_d()); }
inline double magnitude(double v) { return std::abs(v); }

template <Scalar T>
bool is_zero(const T& v, double tol = kDefaultTol) {
  if constexpr (is_exact_v<T>) {
    return sgn(v) == 0;
  } else {
    return std::abs(v) <= tol;
  }
}

// exact backend ignores tol and scale
template <Scalar T>
bool near(const T& a, const T& b, double tol, double scale = 1.0) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return std::abs(a - b) <= tol * scale;
  }
}

// accepts "p/q", integers, and plain decimals such as "-1.25" or "3e-2"
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise
std::string format_rational(const Rational& v);

}  // namespace holant
