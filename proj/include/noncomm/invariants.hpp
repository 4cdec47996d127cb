#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groups.hpp"
#include "laurent.hpp"

namespace noncomm {

// Averaging projector onto the invariants of the given action.
template <class C>
LaurentPoly<C> reynolds(const LaurentPoly<C>& f, const GroupSpec& spec, Action variant) {
  const auto elements = enumerate_group(spec, variant);
  LaurentPoly<C> sum(f.nvars());
  for (const auto& g : elements) sum += act(g, f);
  return C(Rational(1, static_cast<long>(elements.size()))) * sum;
}

namespace detail {

// Invariance under a generating set certifies invariance under the group.
template <class C>
void certify_invariant(const LaurentPoly<C>& f, const GroupSpec& spec, Action variant,
                       const std::string& label) {
  for (const auto& g : group_generators(spec, variant))
    if (act(g, f) != f)
      throw CertificationError(label + " failed its invariance certificate", g.to_string());
}

}  // namespace detail

// s_i = e_i(x_1 -/+ x_1^{-1}, ..., x_n -/+ x_n^{-1}), i = 1..n, certified
// invariant under the matching hyperoctahedral torus action.
inline std::vector<LaurentPoly<Rational>> bn_generators(int n, Sign sign) {
  if (n < 1 || n > 6) throw RangeError("rank out of range");
  std::vector<LaurentPoly<Rational>> args;
  args.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto x = LaurentPoly<Rational>::variable(n, i);
    auto xinv = LaurentPoly<Rational>::variable(n, i, -1);
    args.push_back(sign == Sign::Minus ? x - xinv : x + xinv);
  }
  std::vector<LaurentPoly<Rational>> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) gens.push_back(elementary_symmetric(i, args));
  const Action variant = (sign == Sign::Minus) ? Action::TorusMinus : Action::TorusPlus;
  for (const auto& s : gens)
    detail::certify_invariant(s, GroupSpec{Family::B, n}, variant, "hyperoctahedral generator");
  return gens;
}

struct DnGenerators {
  std::vector<LaurentPoly<Rational>> s;  // s_1 .. s_{n-1}, the plus-variant symmetrics
  LaurentPoly<Rational> delta_plus;
  LaurentPoly<Rational> delta_minus;
};

// s_i = e_i(x_j + x_j^{-1}) for i < n together with the half sum/difference
//   (prod (x_i + 1/x_i) +/- prod (x_i - 1/x_i)) / 2,
// all certified invariant under the even-signed torus action.
inline DnGenerators dn_generators(int n) {
  if (n < 2 || n > 6) throw RangeError("rank out of range");
  DnGenerators out{std::vector<LaurentPoly<Rational>>{}, LaurentPoly<Rational>(n),
                   LaurentPoly<Rational>(n)};
  std::vector<LaurentPoly<Rational>> plus_args, minus_args;
  for (int i = 0; i < n; ++i) {
    auto x = LaurentPoly<Rational>::variable(n, i);
    auto xinv = LaurentPoly<Rational>::variable(n, i, -1);
    plus_args.push_back(x + xinv);
    minus_args.push_back(x - xinv);
  }
  for (int i = 1; i < n; ++i) out.s.push_back(elementary_symmetric(i, plus_args));
  auto prod_plus = LaurentPoly<Rational>::one(n);
  auto prod_minus = LaurentPoly<Rational>::one(n);
  for (int i = 0; i < n; ++i) {
    prod_plus *= plus_args[static_cast<std::size_t>(i)];
    prod_minus *= minus_args[static_cast<std::size_t>(i)];
  }
  const Rational half(1, 2);
  out.delta_plus = half * (prod_plus + prod_minus);
  out.delta_minus = half * (prod_plus - prod_minus);
  const GroupSpec spec{Family::D, n};
  for (const auto& s : out.s)
    detail::certify_invariant(s, spec, Action::TorusPlus, "even-signed generator");
  detail::certify_invariant(out.delta_plus, spec, Action::TorusPlus, "delta_plus");
  detail::certify_invariant(out.delta_minus, spec, Action::TorusPlus, "delta_minus");
  return out;
}

enum class Basis { BMinus, BPlus, D };

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::BMinus: return "B-minus";
    case Basis::BPlus: return "B-plus";
    default: return "D";
  }
}

// Generator list in gen_exp order: B bases use s_1..s_n; the D basis uses
// s_1..s_{n-1}, delta_plus, delta_minus (n+1 slots).
inline std::vector<LaurentPoly<Rational>> basis_generators(Basis basis, int n) {
  switch (basis) {
    case Basis::BMinus: return bn_generators(n, Sign::Minus);
    case Basis::BPlus: return bn_generators(n, Sign::Plus);
    default: {
      DnGenerators dg = dn_generators(n);
      std::vector<LaurentPoly<Rational>> gens = std::move(dg.s);
      gens.push_back(std::move(dg.delta_plus));
      gens.push_back(std::move(dg.delta_minus));
      return gens;
    }
  }
}

// Dominant exponent: the lex-greatest representative of a monomial orbit.
// B flavor: k_1 >= ... >= k_n >= 0; D flavor: k_1 >= ... >= k_{n-1} >= |k_n|.
struct DominantExponent {
  Exp entries;
  enum class Flavor { B, D } flavor;

  bool valid() const {
    const std::size_t n = entries.size();
    if (n == 0) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const int next = (flavor == Flavor::D && i + 2 == n) ? std::abs(entries[i + 1])
                                                           : entries[i + 1];
      if (entries[i] < next) return false;
    }
    if (flavor == Flavor::B && entries.back() < 0) return false;
    if (flavor == Flavor::D && n >= 2 && entries[n - 2] < std::abs(entries.back())) return false;
    return entries[0] >= (flavor == Flavor::B ? 0 : std::abs(entries.back()));
  }
};

inline bool is_dominant(const Exp& k, Basis basis) {
  DominantExponent d{k, basis == Basis::D ? DominantExponent::Flavor::D
                                          : DominantExponent::Flavor::B};
  return d.valid();
}

// A finite expansion in the generator basis; expanding it through the
// generator definitions reproduces the decomposed polynomial exactly.
struct Decomposition {
  Basis basis;
  int nvars;
  std::map<std::vector<int>, Rational> terms;  // gen_exp -> coefficient
};

inline LaurentPoly<Rational> expand(const Decomposition& dec) {
  const auto gens = basis_generators(dec.basis, dec.nvars);
  LaurentPoly<Rational> out(dec.nvars);
  for (const auto& [e, c] : dec.terms) {
    LaurentPoly<Rational> m = LaurentPoly<Rational>::one(dec.nvars);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (e[i] != 0) m *= lp_pow(gens[i], e[i]);
    out += c * m;
  }
  return out;
}

namespace detail {

// gen_exp for the basis monomial whose leading exponent is k.
inline std::vector<int> gen_exp_for(const Exp& k, Basis basis) {
  const std::size_t n = k.size();
  if (basis == Basis::D) {
    std::vector<int> e(n + 1, 0);
    for (std::size_t i = 0; i + 2 < n; ++i) e[i] = k[i] - k[i + 1];
    const int kn = k[n - 1];
    if (n >= 2) e[n - 2] = k[n - 2] - std::abs(kn);
    e[n - 1] = std::max(kn, 0);   // delta_plus exponent
    e[n] = std::max(-kn, 0);      // delta_minus exponent
    return e;
  }
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = k[i] - k[i + 1];
  e[n - 1] = k[n - 1];
  return e;
}

}  // namespace detail

// Iterated lex reduction: subtract the generator monomial matching the leading
// exponent until nothing is left. The leading monomial strictly decreases at
// every step; a non-dominant leading exponent proves the input not invariant.
inline Decomposition decompose(const LaurentPoly<Rational>& f, Basis basis) {
  const int n = f.nvars();
  if (n < 1) throw ShapeError("decomposition needs at least one variable");
  if (basis == Basis::D && n < 2) throw RangeError("D basis needs rank >= 2");
  const auto gens = basis_generators(basis, n);
  Decomposition out{basis, n, {}};
  LaurentPoly<Rational> work = f;
  std::optional<Exp> prev;
  long steps = 0;
  while (!work.is_zero()) {
    if (++steps > 100000) throw NonTerminationError("decomposition exceeded its step budget");
    const auto [k, c] = lex_leading(work);
    if (prev && !(k < *prev))
      throw CertificationError("lex descent violated", monomial_to_string(k));
    prev = k;
    if (!is_dominant(k, basis))
      throw NotInvariantError("input is not invariant for this basis", monomial_to_string(k));
    const std::vector<int> e = detail::gen_exp_for(k, basis);
    LaurentPoly<Rational> m = LaurentPoly<Rational>::one(n);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (e[i] != 0) m *= lp_pow(gens[i], e[i]);
    work -= c * m;
    out.terms[e] += c;
    if (out.terms[e] == 0) out.terms.erase(e);
  }
  return out;
}

// Normalized orbit sum of the monomial x^pi: the group images summed and
// divided by the stabilizer count, so the coefficient of x^pi is 1.
inline LaurentPoly<Rational> orbit_sum(const DominantExponent& pi, const GroupSpec& spec,
                                       Action variant) {
  if (!pi.valid()) throw InvalidActionError("exponent is not dominant for its flavor");
  const int n = static_cast<int>(pi.entries.size());
  const auto mono = LaurentPoly<Rational>::monomial(n, pi.entries, Rational(1));
  LaurentPoly<Rational> sum(n);
  long stab = 0;
  for (const auto& g : enumerate_group(spec, variant)) {
    const auto image = act(g, mono);
    if (image == mono) ++stab;
    sum += image;
  }
  const auto result = Rational(1, stab) * sum;
  const auto head = result.terms().find(pi.entries);
  if (head == result.terms().end() || head->second != 1)
    throw CertificationError("orbit sum not normalized at its leading monomial",
                             monomial_to_string(pi.entries));
  return result;
}

// The expanded product
//   prod_{i,j} (x_i^2 - x_j^{-2}) * prod_{i<j} (x_i^2 - x_j^2)(x_i^{-2} - x_j^{-2})
//   * prod_i (x_i^2 - x_i^{-2}),
// certified invariant under both hyperoctahedral torus actions and the
// even-signed subgroup.
inline LaurentPoly<Rational> torus_discriminant(int n) {
  if (n < 1 || n > 4) throw RangeError("torus discriminant limited to rank <= 4");
  auto sq = [&](int i, int e) { return LaurentPoly<Rational>::variable(n, i, 2 * e); };
  LaurentPoly<Rational> out = LaurentPoly<Rational>::one(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out *= sq(i, 1) - sq(j, -1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out *= sq(i, 1) - sq(j, 1);
      out *= sq(i, -1) - sq(j, -1);
    }
  for (int i = 0; i < n; ++i) out *= sq(i, 1) - sq(i, -1);
  const GroupSpec bspec{Family::B, n};
  detail::certify_invariant(out, bspec, Action::TorusMinus, "torus discriminant");
  detail::certify_invariant(out, bspec, Action::TorusPlus, "torus discriminant");
  if (n >= 2)
    detail::certify_invariant(out, GroupSpec{Family::D, n}, Action::TorusPlus,
                              "torus discriminant");
  return out;
}

// The product delta_plus * delta_minus expanded in the plus-variant basis has
// s_n-degree at most one: split it as p_1 + s_n p_0 and certify the cleared
// identity delta_minus (delta_plus - p_0) = delta_plus p_0 + p_1 exactly.
struct DnRelation {
  Decomposition p0;  // s_n coefficient, a polynomial in s_1..s_{n-1}
  Decomposition p1;  // s_n-free part
  LaurentPoly<Rational> big_p;  // delta_plus - p_0(s)
};

inline DnRelation dn_relation(int n) {
  if (n < 2 || n > 4) throw RangeError("relation limited to rank in [2, 4]");
  const DnGenerators dg = dn_generators(n);
  const LaurentPoly<Rational> d = dg.delta_plus * dg.delta_minus;
  const Decomposition dec = decompose(d, Basis::BPlus);
  DnRelation rel{Decomposition{Basis::BPlus, n, {}}, Decomposition{Basis::BPlus, n, {}},
                 LaurentPoly<Rational>(n)};
  for (const auto& [e, c] : dec.terms) {
    const int sn = e[static_cast<std::size_t>(n - 1)];
    if (sn > 1)
      throw CertificationError("product has s_n-degree above one", monomial_to_string(e));
    std::vector<int> stripped = e;
    stripped[static_cast<std::size_t>(n - 1)] = 0;
    (sn == 1 ? rel.p0 : rel.p1).terms[stripped] = c;
  }
  const LaurentPoly<Rational> p0x = expand(rel.p0);
  const LaurentPoly<Rational> p1x = expand(rel.p1);
  rel.big_p = dg.delta_plus - p0x;
  if (dg.delta_minus * rel.big_p != dg.delta_plus * p0x + p1x)
    throw CertificationError("cleared relation failed to verify");
  return rel;
}

}  // namespace noncomm
