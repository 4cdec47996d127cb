#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <string>

#include "errors.hpp"

namespace noncomm {

using Int = boost::multiprecision::cpp_int;

// Stored reduced with positive denominator; str() prints "p/q", or "p" when q = 1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& q) { return q.str(); }

namespace detail {

inline bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace detail

// Accepts "p" or "p/q" with the sign on the numerator and q > 0.
inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!detail::is_integer_token(s)) throw std::invalid_argument("bad rational: '" + s + "'");
    return Rational(Int(s));
  }
  const std::string p = s.substr(0, slash);
  const std::string q = s.substr(slash + 1);
  if (!detail::is_integer_token(p) || !detail::is_integer_token(q))
    throw std::invalid_argument("bad rational: '" + s + "'");
  Int den(q);
  if (den <= 0) throw std::invalid_argument("denominator must be positive: '" + s + "'");
  return Rational(Int(p), den);
}

inline Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0) {
    if (e < 0) throw DivisionByZeroError("zero raised to a negative power");
    return Rational(0);
  }
  Rational base = q;
  long k = e;
  if (k < 0) {
    base = Rational(1) / q;
    k = -k;
  }
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  k = std::min(k, n - k);
  Int acc(1);
  for (long i = 0; i < k; ++i) {
    acc *= Int(n - i);
    acc /= Int(i + 1);  // exact: prefix products are binomial coefficients
  }
  return acc;
}

// x(x-1)...(x-k+1) for any integer x.
inline Int falling_factorial(long x, long k) {
  Int acc(1);
  for (long t = 0; t < k; ++t) acc *= Int(x - t);
  return acc;
}

}  // namespace noncomm
