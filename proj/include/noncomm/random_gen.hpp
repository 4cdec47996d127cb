#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "groups.hpp"
#include "invariants.hpp"
#include "laurent.hpp"
#include "weyl.hpp"

namespace noncomm {

// Deterministic source for all randomized suites. mt19937_64 output is fully
// specified by the standard; ranges are mapped by remainder so the streams are
// reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  long uniform(long lo, long hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Documented sampling ranges: coefficients p/q with |p| <= 9, q <= 4.
inline Rational random_rational(Rng& rng) {
  return Rational(Int(rng.uniform(-9, 9)), Int(rng.uniform(1, 4)));
}

inline Rational random_nonzero_rational(Rng& rng) {
  for (;;) {
    Rational q = random_rational(rng);
    if (q != 0) return q;
  }
}

inline CycloNum random_cyclo(Rng& rng, int m) {
  CycloNum acc(Rational(0), m);
  const int deg = euler_phi(m);
  for (int i = 0; i < deg; ++i)
    acc += CycloNum::zeta(m, i) * CycloNum(random_rational(rng), m);
  return acc;
}

inline CycloNum random_nonzero_cyclo(Rng& rng, int m) {
  for (;;) {
    CycloNum c = random_cyclo(rng, m);
    if (!c.is_zero()) return c;
  }
}

// Laurent polynomials with at most max_terms terms and exponents in [-range, range].
inline LaurentPoly<Rational> random_laurent(Rng& rng, int nvars, int max_terms = 6,
                                            int range = 3) {
  LaurentPoly<Rational> f(nvars);
  const long terms = rng.uniform(1, max_terms);
  Exp e(static_cast<std::size_t>(nvars));
  for (long t = 0; t < terms; ++t) {
    for (auto& k : e) k = static_cast<int>(rng.uniform(-range, range));
    f.add_term(e, random_rational(rng));
  }
  return f;
}

inline LaurentPoly<Rational> random_nonzero_laurent(Rng& rng, int nvars, int max_terms = 6,
                                                    int range = 3) {
  for (;;) {
    auto f = random_laurent(rng, nvars, max_terms, range);
    if (!f.is_zero()) return f;
  }
}

inline LaurentPoly<CycloNum> random_cyclo_laurent(Rng& rng, int nvars, int m, int max_terms = 4,
                                                  int range = 2) {
  LaurentPoly<CycloNum> f(nvars);
  const long terms = rng.uniform(1, max_terms);
  Exp e(static_cast<std::size_t>(nvars));
  for (long t = 0; t < terms; ++t) {
    for (auto& k : e) k = static_cast<int>(rng.uniform(-range, range));
    f.add_term(e, random_cyclo(rng, m));
  }
  return f;
}

// Weyl elements with at most 4 terms, x-exponents in [-2, 2], d-exponents in [0, 2].
inline WeylElement random_weyl(Rng& rng, int nvars, int max_terms = 4, int xrange = 2,
                               int drange = 2) {
  WeylElement u(nvars);
  const long terms = rng.uniform(1, max_terms);
  Exp a(static_cast<std::size_t>(nvars)), b(static_cast<std::size_t>(nvars));
  for (long t = 0; t < terms; ++t) {
    for (auto& k : a) k = static_cast<int>(rng.uniform(-xrange, xrange));
    for (auto& k : b) k = static_cast<int>(rng.uniform(0, drange));
    u.add_term(a, b, random_rational(rng));
  }
  return u;
}

inline WeylElement random_nonzero_weyl(Rng& rng, int nvars, int max_terms = 4, int xrange = 2,
                                       int drange = 2) {
  for (;;) {
    auto u = random_weyl(rng, nvars, max_terms, xrange, drange);
    if (!u.is_zero()) return u;
  }
}

inline std::vector<Rational> random_point(Rng& rng, int n) {
  std::vector<Rational> p(static_cast<std::size_t>(n));
  for (auto& v : p) v = random_nonzero_rational(rng);
  return p;
}

inline GroupElement random_group_element(Rng& rng, const std::vector<GroupElement>& elements) {
  return elements[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(elements.size()) - 1))];
}

// Random dominant exponent with entries bounded by max_entry.
inline DominantExponent random_dominant(Rng& rng, int n, DominantExponent::Flavor flavor,
                                        int max_entry = 4) {
  Exp k(static_cast<std::size_t>(n));
  for (auto& v : k) v = static_cast<int>(rng.uniform(0, max_entry));
  std::sort(k.begin(), k.end(), std::greater<int>());
  if (flavor == DominantExponent::Flavor::D && k.back() != 0 && rng.coin())
    k.back() = -k.back();
  return DominantExponent{std::move(k), flavor};
}

}  // namespace noncomm
