#include "common/scalar.hpp"

#include <cctype>

#include "common/error.hpp"

namespace holant {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part[0] == '-' || exp_part[0] == '+')) {
      exp_negative = exp_part[0] == '-';
      exp_part.remove_prefix(1);
    }
    require(all_digits(exp_part) && exp_part.size() < 6, ErrorCode::schema,
            "malformed exponent in number '" + std::string(text) + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    require((whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac)) &&
                !(whole.empty() && frac.empty()),
            ErrorCode::schema, "malformed number '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    require(all_digits(s), ErrorCode::schema, "malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  require(!text.empty(), ErrorCode::schema, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) num_digits.remove_prefix(1);
    require(all_digits(num_digits) && all_digits(den), ErrorCode::schema,
            "malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num_digits), 10), d(std::string(den), 10);
    require(d != 0, ErrorCode::schema, "zero denominator in '" + std::string(text) + "'");
    if (!num.empty() && num[0] == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

std::string format_rational(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

}  // namespace holant
