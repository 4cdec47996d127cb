#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "random_gen.hpp"
#include "weyl.hpp"

namespace noncomm {

// Element of the skew group algebra Q[t_1..t_N] * Z^N with the shift action:
// finite sums of p_k(t) sigma^k, where sigma^k p(t) = p(t - k) sigma^k.
// Coefficient polynomials are ordinary (no negative t-exponents); negative
// powers live only in sigma.
class ShiftElement {
 public:
  using TPoly = LaurentPoly<Rational>;
  using TermMap = std::map<Exp, TPoly>;

  explicit ShiftElement(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw ShapeError("nvars must be nonnegative");
  }

  static ShiftElement constant(int nvars, const Rational& c) {
    ShiftElement u(nvars);
    u.add_term(Exp(static_cast<std::size_t>(nvars), 0), TPoly::constant(nvars, c));
    return u;
  }

  static ShiftElement one(int nvars) { return constant(nvars, Rational(1)); }

  static ShiftElement t_var(int nvars, int i) {
    ShiftElement u(nvars);
    u.add_term(Exp(static_cast<std::size_t>(nvars), 0), TPoly::variable(nvars, i));
    return u;
  }

  static ShiftElement sigma(int nvars, int i, int power = 1) {
    if (i < 0 || i >= nvars) throw RangeError("coordinate index out of range");
    Exp k(static_cast<std::size_t>(nvars), 0);
    k[static_cast<std::size_t>(i)] = power;
    ShiftElement u(nvars);
    u.add_term(std::move(k), TPoly::one(nvars));
    return u;
  }

  static ShiftElement monomial(int nvars, Exp sigma_exp, TPoly poly) {
    ShiftElement u(nvars);
    u.add_term(std::move(sigma_exp), std::move(poly));
    return u;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exp& sigma_exp, const TPoly& poly) {
    if (static_cast<int>(sigma_exp.size()) != nvars_ || poly.nvars() != nvars_)
      throw ShapeError("term does not match nvars");
    if (!poly.is_polynomial())
      throw ShapeError("sigma coefficients must be ordinary polynomials in t");
    if (poly.is_zero()) return;
    auto it = terms_.find(sigma_exp);
    if (it == terms_.end()) {
      terms_.emplace(sigma_exp, poly);
    } else {
      it->second += poly;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend ShiftElement operator+(const ShiftElement& a, const ShiftElement& b) {
    a.check_shape(b);
    ShiftElement out = a;
    for (const auto& [k, p] : b.terms_) out.add_term(k, p);
    return out;
  }

  friend ShiftElement operator-(const ShiftElement& a, const ShiftElement& b) {
    a.check_shape(b);
    ShiftElement out = a;
    for (const auto& [k, p] : b.terms_) out.add_term(k, -p);
    return out;
  }

  ShiftElement operator-() const {
    ShiftElement out(nvars_);
    for (const auto& [k, p] : terms_) out.terms_.emplace(k, -p);
    return out;
  }

  friend ShiftElement operator*(const Rational& s, const ShiftElement& u) {
    ShiftElement out(u.nvars_);
    if (s == 0) return out;
    for (const auto& [k, p] : u.terms_) out.terms_.emplace(k, s * p);
    return out;
  }

  ShiftElement& operator+=(const ShiftElement& o) { return *this = *this + o; }
  ShiftElement& operator-=(const ShiftElement& o) { return *this = *this - o; }

  friend bool operator==(const ShiftElement& a, const ShiftElement& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ShiftElement& a, const ShiftElement& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "[" + it->second.to_string() + "]";
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        s += "*s" + std::to_string(i + 1);
        if (it->first[i] != 1) s += "^" + std::to_string(it->first[i]);
      }
    }
    return s;
  }

 private:
  void check_shape(const ShiftElement& o) const {
    if (nvars_ != o.nvars_) throw ShapeError("nvars mismatch between shift elements");
  }

  int nvars_;
  TermMap terms_;
};

namespace detail {

// t -> t - k, expanded by binomials coordinatewise.
inline LaurentPoly<Rational> shift_t(const LaurentPoly<Rational>& p, const Exp& k) {
  const int n = p.nvars();
  LaurentPoly<Rational> out(n);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly<Rational> acc = LaurentPoly<Rational>::constant(n, c);
    for (int j = 0; j < n; ++j) {
      const int ej = e[static_cast<std::size_t>(j)];
      if (ej == 0) continue;
      const int kj = k[static_cast<std::size_t>(j)];
      if (kj == 0) {
        acc *= LaurentPoly<Rational>::variable(n, j, ej);
        continue;
      }
      LaurentPoly<Rational> binom(n);
      for (int r = 0; r <= ej; ++r) {
        Exp m(static_cast<std::size_t>(n), 0);
        m[static_cast<std::size_t>(j)] = r;
        binom.add_term(m, Rational(binomial(ej, r)) *
                              rational_pow(Rational(-kj), ej - r));
      }
      acc *= binom;
    }
    out += acc;
  }
  return out;
}

}  // namespace detail

// Skew product: p(t) sigma^k * q(t) sigma^l = p(t) q(t - k) sigma^(k + l).
inline ShiftElement shift_mul(const ShiftElement& u, const ShiftElement& v) {
  if (u.nvars() != v.nvars()) throw ShapeError("nvars mismatch between shift elements");
  ShiftElement out(u.nvars());
  Exp sum(static_cast<std::size_t>(u.nvars()));
  for (const auto& [k, p] : u.terms())
    for (const auto& [l, q] : v.terms()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = k[i] + l[i];
      out.add_term(sum, p * detail::shift_t(q, k));
    }
  return out;
}

inline ShiftElement shift_pow(const ShiftElement& u, int k) {
  if (k < 0) throw UnsupportedError("negative shift power");
  ShiftElement acc = ShiftElement::one(u.nvars());
  for (int i = 0; i < k; ++i) acc = shift_mul(acc, u);
  return acc;
}

// The involution sigma_i -> +/- sigma_i^{-1}, t_i -> c - t_i, others fixed.
inline ShiftElement epsilon_shift(Sign sign, const Rational& c, int i, const ShiftElement& u) {
  const int n = u.nvars();
  if (i < 0 || i >= n) throw RangeError("coordinate index out of range");
  ShiftElement out(n);
  for (const auto& [k, p] : u.terms()) {
    // substitute t_i -> c - t_i in the coefficient polynomial
    LaurentPoly<Rational> np(n);
    for (const auto& [e, cc] : p.terms()) {
      const int ei = e[static_cast<std::size_t>(i)];
      LaurentPoly<Rational> acc(n);
      Exp rest = e;
      rest[static_cast<std::size_t>(i)] = 0;
      acc.add_term(rest, cc);
      if (ei > 0) {
        // (c - t_i)^ei = sum_r C(ei, r) (-1)^r c^(ei - r) t_i^r
        LaurentPoly<Rational> binom(n);
        for (int r = 0; r <= ei; ++r) {
          Exp m(static_cast<std::size_t>(n), 0);
          m[static_cast<std::size_t>(i)] = r;
          Rational coeff = Rational(binomial(ei, r)) * rational_pow(c, ei - r);
          binom.add_term(m, (r & 1) ? -coeff : coeff);
        }
        acc *= binom;
      }
      np += acc;
    }
    Exp nk = k;
    const int ki = k[static_cast<std::size_t>(i)];
    nk[static_cast<std::size_t>(i)] = -ki;
    Rational sgn(1);
    if (sign == Sign::Minus && (ki & 1)) sgn = -1;  // (-sigma^{-1})^{k_i}
    out.add_term(nk, sgn * np);
  }
  return out;
}

// Images of the localized Weyl generators inside the shift algebra:
//   x_i -> sigma_i,
//   d_i -> (t_i + 1 - c/2) sigma_i^{-1} + (1 -/+ sigma_i^{-2}).
inline ShiftElement phi_image_x(Sign, const Rational&, int nvars, int i, int power = 1) {
  return ShiftElement::sigma(nvars, i, power);
}

inline ShiftElement phi_image_d(Sign sign, const Rational& c, int nvars, int i) {
  ShiftElement out(nvars);
  Exp kinv(static_cast<std::size_t>(nvars), 0);
  kinv[static_cast<std::size_t>(i)] = -1;
  LaurentPoly<Rational> lin = LaurentPoly<Rational>::variable(nvars, i) +
                              LaurentPoly<Rational>::constant(nvars, Rational(1) - c / 2);
  out.add_term(kinv, lin);
  out += ShiftElement::one(nvars);
  Exp kinv2(static_cast<std::size_t>(nvars), 0);
  kinv2[static_cast<std::size_t>(i)] = -2;
  out.add_term(kinv2, LaurentPoly<Rational>::constant(
                          nvars, sign == Sign::Plus ? Rational(-1) : Rational(1)));
  return out;
}

// The homomorphism from the localized Weyl algebra, extended over normal-form
// terms as phi(x_1)^{a_1} ... phi(d_N)^{b_N} in that order. Each call
// re-certifies the defining relation phi(d x - x d) = 1 per coordinate.
inline ShiftElement phi(Sign sign, const Rational& c, const WeylElement& u) {
  const int n = u.nvars();
  std::vector<ShiftElement> dimg;
  dimg.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) dimg.push_back(phi_image_d(sign, c, n, i));
  for (int i = 0; i < n; ++i) {
    const ShiftElement si = ShiftElement::sigma(n, i);
    const ShiftElement comm = shift_mul(dimg[static_cast<std::size_t>(i)], si) -
                              shift_mul(si, dimg[static_cast<std::size_t>(i)]);
    if (comm != ShiftElement::one(n))
      throw CertificationError("defining relation check failed for phi");
  }
  ShiftElement out(n);
  for (const auto& [k, coef] : u.terms()) {
    ShiftElement acc = ShiftElement::monomial(
        n, k.first, LaurentPoly<Rational>::constant(n, coef));
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < k.second[static_cast<std::size_t>(i)]; ++p)
        acc = shift_mul(acc, dimg[static_cast<std::size_t>(i)]);
    out += acc;
  }
  return out;
}

// Preimages of the shift generators. The t-preimage is derived by solving
// phi(y) = t_i symbolically: y = x_i d_i + c/2 - x_i +/- x_i^{-1}
// (plus branch +x_i^{-1}, minus branch -x_i^{-1}); certified by round-trip.
inline WeylElement phi_inverse_sigma(Sign, const Rational&, int nvars, int i) {
  return WeylElement::x_var(nvars, i);
}

inline WeylElement phi_inverse_t(Sign sign, const Rational& c, int nvars, int i) {
  WeylElement out(nvars);
  Exp zero(static_cast<std::size_t>(nvars), 0);
  Exp ei(static_cast<std::size_t>(nvars), 0), di(static_cast<std::size_t>(nvars), 0);
  ei[static_cast<std::size_t>(i)] = 1;
  di[static_cast<std::size_t>(i)] = 1;
  out.add_term(ei, di, Rational(1));    // x_i d_i
  out.add_term(zero, zero, c / 2);      // c/2
  out.add_term(ei, zero, Rational(-1)); // -x_i
  Exp einv(static_cast<std::size_t>(nvars), 0);
  einv[static_cast<std::size_t>(i)] = -1;
  out.add_term(einv, zero, sign == Sign::Plus ? Rational(1) : Rational(-1));
  return out;
}

// Certifies that phi intertwines the two involution families: on the
// generators against the closed-form expected elements, then on random
// elements of the localized Weyl algebra.
struct IntertwiningReport {
  bool pass = true;
  int generator_checks = 0;
  int sample_checks = 0;
  std::vector<std::string> failures;
};

inline IntertwiningReport verify_intertwining(Sign sign, const Rational& c, int nvars,
                                              int samples, std::uint64_t seed) {
  if (nvars < 1 || nvars > 3) throw RangeError("intertwining verification limited to rank <= 3");
  IntertwiningReport report;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) {
      report.pass = false;
      report.failures.push_back(what);
    }
  };
  const Rational pm = (sign == Sign::Plus) ? Rational(-1) : Rational(1);  // the -/+ factor
  for (int i = 0; i < nvars; ++i) {
    // expected: -/+ (t_i - 1 - c/2) sigma_i + (1 -/+ sigma_i^2)
    ShiftElement expected(nvars);
    Exp kp(static_cast<std::size_t>(nvars), 0);
    kp[static_cast<std::size_t>(i)] = 1;
    expected.add_term(kp, pm * (LaurentPoly<Rational>::variable(nvars, i) +
                                LaurentPoly<Rational>::constant(nvars, Rational(-1) - c / 2)));
    expected += ShiftElement::one(nvars);
    Exp k2(static_cast<std::size_t>(nvars), 0);
    k2[static_cast<std::size_t>(i)] = 2;
    expected.add_term(k2, LaurentPoly<Rational>::constant(nvars, pm));

    const WeylElement dpart = WeylElement::d_var(nvars, i);
    const ShiftElement lhs = epsilon_shift(sign, c, i, phi(sign, c, dpart));
    const ShiftElement rhs = phi(sign, c, epsilon(sign, i, dpart));
    check(lhs == expected, "epsilon_R(phi(d)) differs from the expected element");
    check(rhs == expected, "phi(epsilon(d)) differs from the expected element");
    report.generator_checks += 2;

    const WeylElement xpart = WeylElement::x_var(nvars, i);
    const ShiftElement sx = ShiftElement::sigma(nvars, i, -1);
    const ShiftElement expected_x = (sign == Sign::Plus) ? sx : Rational(-1) * sx;
    check(epsilon_shift(sign, c, i, phi(sign, c, xpart)) == expected_x,
          "epsilon_R(phi(x)) differs from +/- sigma^{-1}");
    check(phi(sign, c, epsilon(sign, i, xpart)) == expected_x,
          "phi(epsilon(x)) differs from +/- sigma^{-1}");
    report.generator_checks += 2;

    const WeylElement xinv = WeylElement::x_var(nvars, i, -1);
    check(epsilon_shift(sign, c, i, phi(sign, c, xinv)) ==
              phi(sign, c, epsilon(sign, i, xinv)),
          "intertwining failed on x^{-1}");
    report.generator_checks += 1;
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const WeylElement u = random_weyl(rng, nvars);
    for (int i = 0; i < nvars; ++i) {
      const bool ok = epsilon_shift(sign, c, i, phi(sign, c, u)) ==
                      phi(sign, c, epsilon(sign, i, u));
      check(ok, "intertwining failed on a random element");
      report.sample_checks += 1;
    }
  }
  return report;
}

}  // namespace noncomm
