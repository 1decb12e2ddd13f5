/**
 * Exact scalar types for the rational backend.
 *
 * All exact arithmetic in the library runs on boost::multiprecision's
 * header-only integer/rational types; nothing here requires GMP.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mnlck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Parse a rational scalar from a string of the form "p" or "p/q".
 *
 * Whitespace around the number and around '/' is not accepted; signs are
 * accepted on the numerator only.
 *
 * @param text Input text, e.g. "3", "-7", "355/113".
 * @returns Parsed rational.
 * @throws std::invalid_argument If the text is not a valid rational or the
 *         denominator is zero.
 */
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto parse_integer = [&s](const std::string& part, bool allow_sign) -> Integer {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (part.size() == start) {
      throw std::invalid_argument("malformed rational literal: \"" + s + "\"");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed rational literal: \"" + s + "\"");
      }
    }
    return Integer(part);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(s, true));
  }
  const Integer num = parse_integer(s.substr(0, slash), true);
  const Integer den = parse_integer(s.substr(slash + 1), false);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in \"" + s + "\"");
  }
  return Rational(num, den);
}

/** Render a rational as "p" (integral) or "p/q" (reduced). */
inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  if (boost::multiprecision::denominator(r) == 1) {
    os << boost::multiprecision::numerator(r);
  } else {
    os << boost::multiprecision::numerator(r) << '/'
       << boost::multiprecision::denominator(r);
  }
  return os.str();
}

/** Lossy conversion for reporting only; exact code paths never round. */
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace mnlck
