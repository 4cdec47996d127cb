#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "groups.hpp"
#include "laurent.hpp"

namespace noncomm {

// Element of the localized Weyl algebra in normal form: sum of c * x^a d^b with
// integer x-exponents and nonnegative d-exponents, all x factors to the left.
// The single rewrite axiom d_i x_i^a = x_i^a d_i + a x_i^(a-1) (any integer a)
// drives multiplication.
class WeylElement {
 public:
  using Key = std::pair<Exp, Exp>;  // (x exponents, d exponents)
  using TermMap = std::map<Key, Rational>;

  explicit WeylElement(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw ShapeError("nvars must be nonnegative");
  }

  static WeylElement constant(int nvars, const Rational& c) {
    WeylElement u(nvars);
    u.add_term(Exp(static_cast<std::size_t>(nvars), 0), Exp(static_cast<std::size_t>(nvars), 0),
               c);
    return u;
  }

  static WeylElement one(int nvars) { return constant(nvars, Rational(1)); }

  static WeylElement monomial(int nvars, Exp x, Exp d, const Rational& c) {
    WeylElement u(nvars);
    u.add_term(std::move(x), std::move(d), c);
    return u;
  }

  static WeylElement x_var(int nvars, int i, int power = 1) {
    Exp a(static_cast<std::size_t>(nvars), 0), b(static_cast<std::size_t>(nvars), 0);
    a.at(static_cast<std::size_t>(i)) = power;
    return monomial(nvars, std::move(a), std::move(b), Rational(1));
  }

  static WeylElement d_var(int nvars, int i, int power = 1) {
    if (power < 0) throw ShapeError("derivative exponents must be nonnegative");
    Exp a(static_cast<std::size_t>(nvars), 0), b(static_cast<std::size_t>(nvars), 0);
    b.at(static_cast<std::size_t>(i)) = power;
    return monomial(nvars, std::move(a), std::move(b), Rational(1));
  }

  // Embed a Laurent polynomial as the multiplication operator it defines.
  static WeylElement from_laurent(const LaurentPoly<Rational>& f) {
    WeylElement u(f.nvars());
    const Exp zero(static_cast<std::size_t>(f.nvars()), 0);
    for (const auto& [e, c] : f.terms()) u.add_term(e, zero, c);
    return u;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Member of the (unlocalized) Weyl algebra: every x-exponent nonnegative.
  bool in_polynomial_algebra() const { return min_x_exponent() >= 0; }

  int min_x_exponent() const {
    int worst = 0;
    for (const auto& [k, c] : terms_)
      for (int e : k.first) worst = std::min(worst, e);
    return worst;
  }

  void add_term(const Exp& x, const Exp& d, const Rational& c) {
    if (static_cast<int>(x.size()) != nvars_ || static_cast<int>(d.size()) != nvars_)
      throw ShapeError("exponent vectors do not match nvars");
    for (int e : d)
      if (e < 0) throw ShapeError("derivative exponents must be nonnegative");
    if (c == 0) return;
    Key key{x, d};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    a.check_shape(b);
    WeylElement out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
    return out;
  }

  friend WeylElement operator-(const WeylElement& a, const WeylElement& b) {
    a.check_shape(b);
    WeylElement out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, -c);
    return out;
  }

  WeylElement operator-() const {
    WeylElement out(nvars_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }

  friend WeylElement operator*(const Rational& s, const WeylElement& u) {
    WeylElement out(u.nvars_);
    if (s == 0) return out;
    for (const auto& [k, c] : u.terms_) out.terms_.emplace(k, s * c);
    return out;
  }

  WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
  WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + rational_to_string(it->second) + ")";
      for (std::size_t i = 0; i < it->first.first.size(); ++i) {
        const int e = it->first.first[i];
        if (e == 0) continue;
        s += "*x" + std::to_string(i + 1);
        if (e != 1) s += "^" + std::to_string(e);
      }
      for (std::size_t i = 0; i < it->first.second.size(); ++i) {
        const int e = it->first.second[i];
        if (e == 0) continue;
        s += "*d" + std::to_string(i + 1);
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void check_shape(const WeylElement& o) const {
    if (nvars_ != o.nvars_) throw ShapeError("nvars mismatch between Weyl elements");
  }

  int nvars_;
  TermMap terms_;
};

namespace detail {

// Append the normal-ordered expansion of c * (x^a d^b)(x^e d^f) into out.
// Per coordinate, d^B x^E = sum_k C(B,k) E(E-1)...(E-k+1) x^(E-k) d^(B-k),
// valid for any integer E.
inline void weyl_term_product(const Exp& a, const Exp& b, const Exp& e, const Exp& f,
                              const Rational& c, WeylElement& out) {
  const std::size_t n = a.size();
  Exp x(n), d(n);
  // iterate over contraction multi-indices k, one coordinate at a time
  std::vector<int> k(n, 0);
  while (true) {
    Int factor(1);
    bool dead = false;
    for (std::size_t i = 0; i < n && !dead; ++i) {
      if (k[i] == 0) continue;
      const Int part = binomial(b[i], k[i]) * falling_factorial(e[i], k[i]);
      if (part == 0) dead = true;
      factor *= part;
    }
    if (!dead && factor != 0) {
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = a[i] + e[i] - k[i];
        d[i] = b[i] - k[i] + f[i];
      }
      out.add_term(x, d, c * Rational(factor));
    }
    // next multi-index with 0 <= k_i <= b_i
    std::size_t pos = 0;
    while (pos < n && k[pos] == b[pos]) k[pos++] = 0;
    if (pos == n) break;
    ++k[pos];
  }
}

}  // namespace detail

inline WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) {
  if (u.nvars() != v.nvars()) throw ShapeError("nvars mismatch between Weyl elements");
  WeylElement out(u.nvars());
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms())
      detail::weyl_term_product(ku.first, ku.second, kv.first, kv.second, cu * cv, out);
  return out;
}

inline WeylElement weyl_pow(const WeylElement& u, int k) {
  if (k < 0) throw UnsupportedError("negative Weyl power");
  WeylElement acc = WeylElement::one(u.nvars());
  for (int i = 0; i < k; ++i) acc = weyl_mul(acc, u);
  return acc;
}

// The defining representation on Laurent polynomials: x^a acts by
// multiplication and d_i by the formal partial derivative. This is the
// independent oracle for the normal-ordering rule.
inline LaurentPoly<Rational> apply_to_laurent(const WeylElement& u,
                                              const LaurentPoly<Rational>& f) {
  if (u.nvars() != f.nvars()) throw ShapeError("nvars mismatch");
  LaurentPoly<Rational> out(f.nvars());
  Exp e(static_cast<std::size_t>(f.nvars()), 0);
  for (const auto& [k, c] : u.terms()) {
    const Exp& a = k.first;
    const Exp& b = k.second;
    for (const auto& [m, q] : f.terms()) {
      Int factor(1);
      for (std::size_t i = 0; i < m.size() && factor != 0; ++i)
        if (b[i] > 0) factor *= falling_factorial(m[i], b[i]);
      if (factor == 0) continue;
      for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i] - b[i] + a[i];
      out.add_term(e, c * q * Rational(factor));
    }
  }
  return out;
}

// The involutive automorphism on coordinate j determined by
//   x_j -> +/- x_j^{-1},  d_j -> -/+ x_j^2 d_j,
// other generators fixed, applied termwise by mapping factors and remultiplying.
inline WeylElement epsilon(Sign sign, int j, const WeylElement& u) {
  const int n = u.nvars();
  if (j < 0 || j >= n) throw RangeError("coordinate index out of range");
  // image of d_j
  Exp a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
  a[static_cast<std::size_t>(j)] = 2;
  b[static_cast<std::size_t>(j)] = 1;
  const WeylElement img_d =
      WeylElement::monomial(n, a, b, sign == Sign::Minus ? Rational(1) : Rational(-1));
  WeylElement out(n);
  for (const auto& [k, c] : u.terms()) {
    const int aj = k.first[static_cast<std::size_t>(j)];
    const int bj = k.second[static_cast<std::size_t>(j)];
    Rational coef = c;
    if (sign == Sign::Minus && (aj & 1)) coef = -coef;  // (-x^{-1})^aj
    const WeylElement w = weyl_pow(img_d, bj);
    for (const auto& [wk, wc] : w.terms()) {
      Exp x = k.first;
      Exp d = k.second;
      x[static_cast<std::size_t>(j)] = -aj + wk.first[static_cast<std::size_t>(j)];
      d[static_cast<std::size_t>(j)] = wk.second[static_cast<std::size_t>(j)];
      out.add_term(x, d, coef * wc);
    }
  }
  return out;
}

// Torus action on differential operators: the permutation part relabels the
// (x_i, d_i) pairs, each flipped coordinate goes through the matching epsilon.
inline WeylElement act_weyl(const GroupElement& g, const WeylElement& u) {
  if (g.rank() != u.nvars()) throw ShapeError("rank mismatch");
  if (g.variant() == Action::Linear)
    throw UnsupportedError("linear variant on the localized algebra: use act_weyl_linear");
  const Sign sign = (g.variant() == Action::TorusMinus) ? Sign::Minus : Sign::Plus;
  const std::size_t n = static_cast<std::size_t>(u.nvars());
  WeylElement out(u.nvars());
  for (const auto& [k, c] : u.terms()) {
    Exp x(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(g.perm()[i])] = k.first[i];
      d[static_cast<std::size_t>(g.perm()[i])] = k.second[i];
    }
    out.add_term(x, d, c);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (g.flips()[i]) out = epsilon(sign, g.perm()[i], out);
  return out;
}

// Linear action of a signed permutation: x_i -> (-1)^{d_i} x_{perm(i)} and the
// same signs on the d's (the inverse-transpose of a signed permutation matrix
// is the matrix itself).
inline WeylElement act_weyl_linear(const GroupElement& g, const WeylElement& u) {
  if (g.rank() != u.nvars()) throw ShapeError("rank mismatch");
  const std::size_t n = static_cast<std::size_t>(u.nvars());
  WeylElement out(u.nvars());
  for (const auto& [k, c] : u.terms()) {
    Exp x(n), d(n);
    bool negate = false;
    for (std::size_t i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(g.perm()[i])] = k.first[i];
      d[static_cast<std::size_t>(g.perm()[i])] = k.second[i];
      if (g.flips()[i] && ((k.first[i] + k.second[i]) & 1)) negate = !negate;
    }
    out.add_term(x, d, negate ? -c : c);
  }
  return out;
}

inline WeylElement reynolds_weyl(const WeylElement& u, const GroupSpec& spec, Action variant) {
  const auto elements = enumerate_group(spec, variant);
  WeylElement sum(u.nvars());
  for (const auto& g : elements)
    sum += (variant == Action::Linear) ? act_weyl_linear(g, u) : act_weyl(g, u);
  return Rational(1, static_cast<long>(elements.size())) * sum;
}

// Smallest k <= kmax with disc^k * u inside the polynomial Weyl algebra,
// multiplying on the left. Returns (k, disc^k * u).
inline std::pair<int, WeylElement> clear_discriminant(const WeylElement& u,
                                                      const LaurentPoly<Rational>& disc,
                                                      int kmax) {
  if (!disc.is_polynomial()) throw ShapeError("clearing polynomial must have no poles");
  if (disc.is_zero()) throw ShapeError("clearing polynomial must be nonzero");
  if (kmax < 0 || kmax > 16) throw RangeError("kmax must be in [0, 16]");
  const WeylElement dop = WeylElement::from_laurent(disc);
  WeylElement v = u;
  for (int k = 0;; ++k) {
    if (v.in_polynomial_algebra()) return {k, v};
    if (k == kmax)
      throw ClearingError("clearing failed within the power budget", v.min_x_exponent());
    v = weyl_mul(dop, v);
  }
}

// Clearing with the invariance certificate: when u and disc are invariant the
// cleared element must be too.
inline std::pair<int, WeylElement> clear_discriminant_certified(const WeylElement& u,
                                                                const LaurentPoly<Rational>& disc,
                                                                int kmax, const GroupSpec& spec,
                                                                Action variant) {
  auto result = clear_discriminant(u, disc, kmax);
  const auto elements = enumerate_group(spec, variant);
  for (const auto& g : elements) {
    const WeylElement gu = (variant == Action::Linear) ? act_weyl_linear(g, u) : act_weyl(g, u);
    if (gu != u) return result;  // u not invariant: nothing to certify
    if (act(g, disc) != disc) return result;
  }
  for (const auto& g : elements) {
    const WeylElement gv = (variant == Action::Linear) ? act_weyl_linear(g, result.second)
                                                       : act_weyl(g, result.second);
    if (gv != result.second)
      throw CertificationError("cleared element lost invariance", g.to_string());
  }
  return result;
}

}  // namespace noncomm
