#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "rational.hpp"

namespace noncomm {

// Exponent vector of a Laurent monomial; fixed length per ambient ring.
// std::map's default ordering on vectors is exactly the lexicographic order
// used throughout (first entry most significant, plain integer comparison).
using Exp = std::vector<int>;

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational pow(const Rational& c, long e) { return rational_pow(c, e); }
  static std::string str(const Rational& c) { return rational_to_string(c); }
};

template <>
struct coeff_traits<CycloNum> {
  static CycloNum zero() { return CycloNum(); }
  static CycloNum one() { return CycloNum(Rational(1)); }
  static bool is_zero(const CycloNum& c) { return c.is_zero(); }
  static CycloNum pow(const CycloNum& c, long e) { return c.pow(e); }
  static std::string str(const CycloNum& c) { return c.to_string(); }
};

// One variable image of a monomial substitution: x_i -> sign * x_target^power.
struct VarImage {
  int sign;    // +1 or -1
  int target;  // 0-based variable index
  int power;   // +1 or -1
};

// Sparse multivariate Laurent polynomial with exact coefficients.
// Invariant: no stored zero coefficient; equal iff the term maps are equal.
template <class C = Rational>
class LaurentPoly {
 public:
  using Coeff = C;
  using TermMap = std::map<Exp, C>;

  explicit LaurentPoly(int nvars) : nvars_(check_nvars(nvars)) {}

  static LaurentPoly constant(int nvars, const C& value) {
    LaurentPoly f(nvars);
    f.add_term(Exp(static_cast<std::size_t>(nvars), 0), value);
    return f;
  }

  static LaurentPoly one(int nvars) { return constant(nvars, coeff_traits<C>::one()); }

  static LaurentPoly monomial(int nvars, Exp e, const C& coef) {
    LaurentPoly f(nvars);
    f.add_term(std::move(e), coef);
    return f;
  }

  static LaurentPoly variable(int nvars, int i, int power = 1) {
    if (i < 0 || i >= nvars) throw RangeError("variable index out of range");
    Exp e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = power;
    return monomial(nvars, std::move(e), coeff_traits<C>::one());
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Member of the ordinary polynomial ring: every exponent nonnegative.
  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      for (int k : e)
        if (k < 0) return false;
    return true;
  }

  void add_term(const Exp& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw ShapeError("exponent vector length does not match nvars");
    if (coeff_traits<C>::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (coeff_traits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_shape(b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_shape(b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }

  LaurentPoly operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return mul_with_limit(a, b, kTermLimit);
  }

  friend LaurentPoly operator*(const C& s, const LaurentPoly& f) {
    LaurentPoly out(f.nvars_);
    for (const auto& [e, c] : f.terms_) out.add_term(e, s * c);
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& f, const C& s) { return s * f; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Desk-scale guardrail on term growth.
  static constexpr std::size_t kTermLimit = 1'000'000;

  static LaurentPoly mul_with_limit(const LaurentPoly& a, const LaurentPoly& b,
                                    std::size_t limit) {
    a.check_shape(b);
    LaurentPoly out(a.nvars_);
    Exp e(static_cast<std::size_t>(a.nvars_), 0);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
        if (out.terms_.size() > limit)
          throw RangeError("product exceeds the term guardrail");
      }
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_traits<C>::str(it->second) + ")";
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        s += "*x" + std::to_string(i + 1);
        if (it->first[i] != 1) s += "^" + std::to_string(it->first[i]);
      }
    }
    return s;
  }

 private:
  static int check_nvars(int n) {
    if (n < 0) throw ShapeError("nvars must be nonnegative");
    return n;
  }

  void check_shape(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
      throw ShapeError("nvars mismatch: " + std::to_string(nvars_) + " vs " +
                       std::to_string(o.nvars_));
  }

  int nvars_;
  TermMap terms_;
};

using LaurentQ = LaurentPoly<Rational>;

inline std::string monomial_to_string(const Exp& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

// Lexicographically greatest term (entry 1 most significant).
template <class C>
std::pair<Exp, C> lex_leading(const LaurentPoly<C>& f) {
  if (f.is_zero()) throw std::domain_error("lex_leading of the zero polynomial");
  auto it = f.terms().rbegin();
  return {it->first, it->second};
}

template <class C>
LaurentPoly<C> lp_pow(const LaurentPoly<C>& f, long e) {
  if (e == 0) return LaurentPoly<C>::one(f.nvars());
  if (f.term_count() == 1) {
    const auto& [exp, c] = *f.terms().begin();
    Exp ne(exp.size());
    for (std::size_t i = 0; i < exp.size(); ++i) ne[i] = exp[i] * static_cast<int>(e);
    return LaurentPoly<C>::monomial(f.nvars(), std::move(ne), coeff_traits<C>::pow(c, e));
  }
  if (e < 0) throw UnsupportedError("negative power of a multi-term polynomial");
  LaurentPoly<C> acc = f;
  for (long i = 1; i < e; ++i) acc *= f;
  return acc;
}

// The ring endomorphism extending x_i -> sign_i * x_{target_i}^{power_i}.
// The images must permute the variables, so the map is invertible.
template <class C>
LaurentPoly<C> substitute_monomial(const LaurentPoly<C>& f, const std::vector<VarImage>& images) {
  const int n = f.nvars();
  if (static_cast<int>(images.size()) != n)
    throw InvalidActionError("one image required per variable");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& im : images) {
    if (im.target < 0 || im.target >= n || seen[static_cast<std::size_t>(im.target)])
      throw InvalidActionError("variable images must be a bijection");
    if ((im.sign != 1 && im.sign != -1) || (im.power != 1 && im.power != -1))
      throw InvalidActionError("signs and powers must be +/-1");
    seen[static_cast<std::size_t>(im.target)] = 1;
  }
  LaurentPoly<C> out(n);
  Exp ne(static_cast<std::size_t>(n), 0);
  for (const auto& [e, c] : f.terms()) {
    std::fill(ne.begin(), ne.end(), 0);
    bool negate = false;
    for (int i = 0; i < n; ++i) {
      const auto& im = images[static_cast<std::size_t>(i)];
      const int k = e[static_cast<std::size_t>(i)];
      ne[static_cast<std::size_t>(im.target)] += k * im.power;
      if (im.sign < 0 && (k & 1)) negate = !negate;
    }
    out.add_term(ne, negate ? C(-c) : c);
  }
  return out;
}

// e_i evaluated at the given arguments, expanded exactly (1 <= i <= n).
template <class C>
LaurentPoly<C> elementary_symmetric(int i, const std::vector<LaurentPoly<C>>& args) {
  const int n = static_cast<int>(args.size());
  if (i < 1 || i > n) throw RangeError("elementary symmetric index out of range");
  const int nv = args.front().nvars();
  std::vector<LaurentPoly<C>> e(static_cast<std::size_t>(i) + 1, LaurentPoly<C>(nv));
  e[0] = LaurentPoly<C>::one(nv);
  for (int a = 0; a < n; ++a) {
    const int top = std::min(i, a + 1);
    for (int j = top; j >= 1; --j)
      e[static_cast<std::size_t>(j)] +=
          e[static_cast<std::size_t>(j - 1)] * args[static_cast<std::size_t>(a)];
  }
  return e[static_cast<std::size_t>(i)];
}

// Exact evaluation at a rational point. A zero coordinate is a pole exactly
// when it meets a negative exponent.
inline Rational evaluate(const LaurentPoly<Rational>& f, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw ShapeError("evaluation point has wrong dimension");
  Rational total(0);
  for (const auto& [e, c] : f.terms()) {
    Rational prod = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0) {
        if (e[i] < 0) throw PoleError("pole: zero coordinate with negative exponent");
        prod = 0;
        break;
      }
      prod *= rational_pow(point[i], e[i]);
    }
    total += prod;
  }
  return total;
}

}  // namespace noncomm
