#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maroni {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  return Rational(Integer(num), Integer(den));
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline Integer floor_of(const Rational& r) {
  Integer q = numerator(r) / denominator(r);  // truncates toward zero
  if (r < 0 && Rational(q) != r) --q;
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (r > 0 && Rational(q) != r) ++q;
  return q;
}

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// "p/q", or "p" when the denominator is 1. Never a decimal.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
  for (char ch : text) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9'))) {
      throw std::invalid_argument("parse_rational: unexpected character in '" +
                                  std::string(text) + "'");
    }
  }
  return Rational(std::string(text));
}

inline std::int64_t to_int64(const Integer& z) {
  if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN)) {
    throw std::overflow_error("to_int64: value out of range");
  }
  return static_cast<std::int64_t>(z);
}

}  // namespace maroni
