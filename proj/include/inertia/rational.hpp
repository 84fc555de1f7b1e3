// rational.hpp — exact rational scalar used by the exact linear-algebra layer.
//
// Backed by boost::multiprecision (header-only, arbitrary precision). Values
// are always kept in canonical reduced form with a positive denominator.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "inertia/errors.hpp"

namespace inertia {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

// "5", "-5" or "num/den". Integers format without the "/1" suffix.
inline std::string rational_to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "k", "k/1" and general "num/den"; whitespace is not allowed.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(errc::parse_error, "empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty())
      fail(errc::parse_error, "malformed rational '" + text + "'");
    const BigInt d(den);
    if (d == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
    return Rational(BigInt(num), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::parse_error, "malformed rational '" + text + "'");
  }
}

}  // namespace inertia
