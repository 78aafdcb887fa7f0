#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "wvg/error.hpp"

namespace wvg {

/// Arbitrary-precision signed integer. All counts, weights, and raw index
/// values use this type; nothing in the library ever rounds.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept canonical (lowest terms, positive
/// denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// 2^exp as a BigInt; exponents are small (player counts), the value is not.
inline BigInt pow2(std::size_t exp) { return BigInt(1) << exp; }

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Renders "p" for integers and "p/q" otherwise; the canonical form used by
/// every external JSON surface.
inline std::string to_string(const Rational& r) {
  BigInt den = denominator(r);
  std::string s = numerator(r).str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer; rejects anything else.
inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) fail(Errc::parse_error, "empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) fail(Errc::parse_error, "sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(Errc::parse_error,
           "invalid integer literal '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

/// Parses "p" or "p/q" with q > 0 after sign normalization.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) fail(Errc::parse_error, "zero denominator");
  return Rational(num, den);
}

/// Converts to size_t when representable; nullopt otherwise. Used to decide
/// whether a dense DP table can be indexed by this value at all.
inline std::optional<std::size_t> to_size(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return static_cast<std::size_t>(v);
}

}  // namespace wvg
