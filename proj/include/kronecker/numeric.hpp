#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "kronecker/errors.hpp"

namespace kronecker {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Parses an optionally signed decimal integer of any length.
inline Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty())
    throw InvalidParameter("expected an integer, got '" + std::string(text) + "'");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw InvalidParameter("expected an integer, got '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

/// Parses "p" or "p/q" into a reduced rational.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::string to_string(const Integer& value) { return value.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

/// Narrowing conversion for dimensions that must index real storage.
inline std::size_t to_size(const Integer& value, std::string_view what) {
  if (value < 0 || value > Integer(std::numeric_limits<std::int32_t>::max()))
    throw InvalidParameter(std::string(what) + " out of range: " + value.str());
  return value.convert_to<std::size_t>();
}

}  // namespace kronecker
