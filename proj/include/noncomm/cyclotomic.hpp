#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace noncomm {

// Dense integer polynomial in one variable; index = degree, leading coefficient nonzero.
using IntPoly = std::vector<Int>;

namespace detail {

inline void intpoly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials with monic divisor.
inline IntPoly intpoly_div_exact(IntPoly num, const IntPoly& den) {
  if (den.empty() || den.back() != 1)
    throw CertificationError("internal: divisor must be monic");
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw CertificationError("internal: bad cyclotomic division");
  IntPoly quot(num.size() - dd, Int(0));
  for (std::size_t k = num.size(); k-- > dd;) {
    Int c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  intpoly_trim(num);
  if (!num.empty()) throw CertificationError("internal: cyclotomic division has remainder");
  return quot;
}

}  // namespace detail

// Minimal polynomial of a primitive m-th root of unity: divide z^m - 1 by the
// cyclotomic polynomials of the proper divisors of m. Monic, degree phi(m).
inline IntPoly cyclotomic_polynomial(int m) {
  if (m < 1 || m > 64) throw RangeError("cyclotomic order must be in [1, 64]");
  IntPoly p(static_cast<std::size_t>(m) + 1, Int(0));
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;  // z^m - 1
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = detail::intpoly_div_exact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

inline int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

// An element of Q(zeta_m): a polynomial in zeta_m of degree < phi(m), with
// arithmetic performed modulo the m-th cyclotomic polynomial. For m in {1, 2}
// the type degenerates to a plain rational. Values with different orders mix
// only when one of them is rational (it is then embedded in the larger field).
class CycloNum {
 public:
  CycloNum() : m_(1), c_(1, Rational(0)) {}

  explicit CycloNum(const Rational& r, int m = 1)
      : m_(m), c_(static_cast<std::size_t>(euler_phi(m)), Rational(0)) {
    c_[0] = r;
  }

  static CycloNum zeta(int m, long power = 1) {
    const long k = ((power % m) + m) % m;
    std::vector<Rational> raw(static_cast<std::size_t>(k) + 1, Rational(0));
    raw.back() = 1;
    CycloNum out(Rational(0), m);
    out.c_ = reduce_mod(std::move(raw), m);
    return out;
  }

  int order() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  // True when the value lies in Q, i.e. all zeta-coefficients above degree 0 vanish.
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Rational rational_part() const {
    if (!is_rational()) throw UnsupportedError("cyclotomic value is not rational");
    return c_[0];
  }

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  CycloNum operator-() const {
    CycloNum out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    auto [x, y] = aligned(a, b);
    std::vector<Rational> raw(x.c_.size() + y.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) raw[i + j] += x.c_[i] * y.c_[j];
    }
    x.c_ = reduce_mod(std::move(raw), x.m_);
    return x;
  }

  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    auto [x, y] = aligned(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  // Multiplicative inverse via the extended euclidean algorithm against Phi_m.
  CycloNum inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero cyclotomic number");
    const IntPoly phi = cyclotomic_polynomial(m_);
    QPoly r0(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
    QPoly r1(c_.begin(), c_.end());
    qpoly_trim(r1);
    QPoly t0, t1{Rational(1)};
    while (!r1.empty()) {
      auto [q, r2] = qpoly_divmod(r0, r1);
      QPoly t2 = qpoly_sub(t0, qpoly_mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // Phi_m is irreducible over Q, so the gcd is a nonzero constant.
    if (r0.size() != 1) throw CertificationError("internal: cyclotomic gcd not constant");
    std::vector<Rational> raw = t0;
    for (auto& x : raw) x /= r0[0];
    CycloNum out(Rational(0), m_);
    out.c_ = reduce_mod(std::move(raw), m_);
    return out;
  }

  CycloNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum acc(Rational(1), m_);
    CycloNum base = *this;
    long k = e;
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += rational_to_string(c_[i]);
    }
    s += "] mod Phi_" + std::to_string(m_);
    return s;
  }

 private:
  using QPoly = std::vector<Rational>;

  static void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }

  static QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    qpoly_trim(out);
    return out;
  }

  static QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly out = a;
    if (out.size() < b.size()) out.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    qpoly_trim(out);
    return out;
  }

  static std::pair<QPoly, QPoly> qpoly_divmod(QPoly num, const QPoly& den) {
    if (den.empty()) throw DivisionByZeroError("polynomial division by zero");
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {QPoly{}, std::move(num)};
    QPoly quot(num.size() - dd, Rational(0));
    const Rational lead = den.back();
    for (std::size_t k = num.size(); k-- > dd;) {
      Rational c = num[k] / lead;
      if (c != 0) {
        quot[k - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
      }
    }
    qpoly_trim(num);
    return {std::move(quot), std::move(num)};
  }

  static std::vector<Rational> reduce_mod(std::vector<Rational> raw, int m) {
    const IntPoly phi = cyclotomic_polynomial(m);
    const std::size_t deg = phi.size() - 1;
    if (raw.size() < deg) raw.resize(deg, Rational(0));
    for (std::size_t k = raw.size(); k-- > deg;) {
      Rational c = raw[k];
      if (c == 0) continue;
      raw[k] = 0;
      for (std::size_t i = 0; i < deg; ++i) raw[k - deg + i] -= c * Rational(phi[i]);
    }
    raw.resize(deg);
    return raw;
  }

  // Common field for a binary operation: equal orders, or embed a rational side.
  static std::pair<CycloNum, CycloNum> aligned(const CycloNum& a, const CycloNum& b) {
    if (a.m_ == b.m_) return {a, b};
    if (a.is_rational()) return {CycloNum(a.c_[0], b.m_), b};
    if (b.is_rational()) return {a, CycloNum(b.c_[0], a.m_)};
    throw ShapeError("cyclotomic orders differ: " + std::to_string(a.m_) + " vs " +
                     std::to_string(b.m_));
  }

  int m_;
  std::vector<Rational> c_;  // length phi(m), reduced mod Phi_m
};

}  // namespace noncomm
