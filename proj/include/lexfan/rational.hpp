#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "lexfan/errors.hpp"

namespace lexfan {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or an integer "p". Whitespace is not accepted; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || (den[0] == '-' || den[0] == '+'))
    throw ParseError("", "malformed rational '" + std::string(text) + "'");
  Integer p(std::string(strip_plus(num)), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Canonical wire form: always "p/q", q > 0, gcd-reduced.
inline std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Human-readable form: "p" for integers, otherwise "p/q".
inline std::string pretty_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return format_rational(q);
}

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

inline std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw InvalidArgument("expected an integer, got " + format_rational(q));
  return to_int64(q.get_num());
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace lexfan
