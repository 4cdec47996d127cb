#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "laurent.hpp"

namespace noncomm {

// Sign of an involution family: Minus is x -> -1/x, Plus is x -> 1/x.
enum class Sign { Plus, Minus };

inline std::string sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

enum class Family { S, B, D };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::B: return "B";
    default: return "D";
  }
}

// How a signed permutation acts on rings:
//   Linear      x_i -> (-1)^{d_i} x_{perm(i)}
//   TorusMinus  flipped coordinates go through x -> -1/x
//   TorusPlus   flipped coordinates go through x -> 1/x
enum class Action { Linear, TorusMinus, TorusPlus };

inline std::string action_name(Action a) {
  switch (a) {
    case Action::Linear: return "linear";
    case Action::TorusMinus: return "torus-minus";
    default: return "torus-plus";
  }
}

struct GroupSpec {
  Family family;
  int n;
};

// A signed permutation together with the action variant it carries.
// Composition convention: ((g*h).f) = g.(h.f), i.e. perm(i) = g.perm(h.perm(i))
// and the flip of coordinate i is h.flip(i) xor g.flip(h.perm(i)).
class GroupElement {
 public:
  GroupElement(std::vector<int> perm, std::vector<std::uint8_t> flips, Action variant)
      : perm_(std::move(perm)), flips_(std::move(flips)), variant_(variant) {
    if (perm_.size() != flips_.size()) throw ShapeError("perm and flips sizes differ");
    std::vector<char> seen(perm_.size(), 0);
    for (int p : perm_) {
      if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(p)])
        throw InvalidActionError("perm is not a permutation");
      seen[static_cast<std::size_t>(p)] = 1;
    }
  }

  static GroupElement identity(int n, Action variant) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    return GroupElement(std::move(perm), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0),
                        variant);
  }

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<std::uint8_t>& flips() const { return flips_; }
  Action variant() const { return variant_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[i] != static_cast<int>(i) || flips_[i]) return false;
    return true;
  }

  int flip_count() const {
    int c = 0;
    for (auto f : flips_) c += f ? 1 : 0;
    return c;
  }

  friend GroupElement compose(const GroupElement& g, const GroupElement& h) {
    if (g.rank() != h.rank() || g.variant_ != h.variant_)
      throw ShapeError("cannot compose mismatched group elements");
    const std::size_t n = g.perm_.size();
    std::vector<int> perm(n);
    std::vector<std::uint8_t> flips(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int hi = h.perm_[i];
      perm[i] = g.perm_[static_cast<std::size_t>(hi)];
      flips[i] = static_cast<std::uint8_t>(h.flips_[i] ^ g.flips_[static_cast<std::size_t>(hi)]);
    }
    return GroupElement(std::move(perm), std::move(flips), g.variant_);
  }

  GroupElement inverse() const {
    const std::size_t n = perm_.size();
    std::vector<int> perm(n);
    std::vector<std::uint8_t> flips(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
      flips[static_cast<std::size_t>(perm_[i])] = flips_[i];
    }
    return GroupElement(std::move(perm), std::move(flips), variant_);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.variant_ == b.variant_ && a.perm_ == b.perm_ && a.flips_ == b.flips_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return std::tie(a.perm_, a.flips_, a.variant_) < std::tie(b.perm_, b.flips_, b.variant_);
  }

  // The substitution images x_i -> sign * x_target^power realizing this element.
  std::vector<VarImage> images() const {
    std::vector<VarImage> im(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      int sign = 1, power = 1;
      if (flips_[i]) {
        switch (variant_) {
          case Action::Linear: sign = -1; break;
          case Action::TorusMinus: sign = -1; power = -1; break;
          case Action::TorusPlus: power = -1; break;
        }
      }
      im[i] = VarImage{sign, perm_[i], power};
    }
    return im;
  }

  std::string to_string() const {
    std::string s = "perm=(";
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(perm_[i] + 1);
    }
    s += ") flips=(";
    for (std::size_t i = 0; i < flips_.size(); ++i) {
      if (i) s += ",";
      s += flips_[i] ? "1" : "0";
    }
    return s + ") " + action_name(variant_);
  }

 private:
  std::vector<int> perm_;
  std::vector<std::uint8_t> flips_;
  Action variant_;
};

inline long group_order(const GroupSpec& spec) {
  long fact = 1;
  for (int i = 2; i <= spec.n; ++i) fact *= i;
  switch (spec.family) {
    case Family::S: return fact;
    case Family::B: return fact << spec.n;
    default: return fact << (spec.n - 1);
  }
}

inline void check_group_spec(const GroupSpec& spec) {
  const int lo = (spec.family == Family::D) ? 2 : 1;
  const int hi = (spec.family == Family::S) ? 8 : 6;
  if (spec.n < lo || spec.n > hi || group_order(spec) > 100000)
    throw RangeError("group size outside the enumeration bounds");
}

// All elements exactly once, in a fixed deterministic order.
inline std::vector<GroupElement> enumerate_group(const GroupSpec& spec, Action variant) {
  check_group_spec(spec);
  const int n = spec.n;
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(group_order(spec)));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const unsigned long masks = (spec.family == Family::S) ? 1ul : (1ul << n);
    for (unsigned long mask = 0; mask < masks; ++mask) {
      if (spec.family == Family::D && (__builtin_popcountl(mask) & 1)) continue;
      std::vector<std::uint8_t> flips(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) flips[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      out.emplace_back(perm, std::move(flips), variant);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// A generating set (adjacent transpositions plus the family's flip generator).
inline std::vector<GroupElement> group_generators(const GroupSpec& spec, Action variant) {
  check_group_spec(spec);
  const int n = spec.n;
  std::vector<GroupElement> gens;
  for (int i = 0; i + 1 < n; ++i) {
    auto g = GroupElement::identity(n, variant);
    std::vector<int> perm = g.perm();
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    gens.emplace_back(std::move(perm), g.flips(), variant);
  }
  if (spec.family == Family::B) {
    auto g = GroupElement::identity(n, variant);
    std::vector<std::uint8_t> flips = g.flips();
    flips[0] = 1;
    gens.emplace_back(g.perm(), std::move(flips), variant);
  } else if (spec.family == Family::D) {
    auto g = GroupElement::identity(n, variant);
    std::vector<std::uint8_t> flips = g.flips();
    flips[0] = flips[1] = 1;
    gens.emplace_back(g.perm(), std::move(flips), variant);
  }
  return gens;
}

template <class C>
LaurentPoly<C> act(const GroupElement& g, const LaurentPoly<C>& f) {
  if (g.rank() != f.nvars()) throw ShapeError("group element rank does not match nvars");
  return substitute_monomial(f, g.images());
}

// Determinant of the signed permutation matrix (linear variant).
inline Rational determinant(const GroupElement& g) {
  if (g.variant() != Action::Linear)
    throw UnsupportedError("determinant is defined for the linear variant");
  // sign of the permutation
  std::vector<char> seen(static_cast<std::size_t>(g.rank()), 0);
  int sign = 1;
  for (int i = 0; i < g.rank(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = g.perm()[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    if ((len & 1) == 0) sign = -sign;
  }
  if (g.flip_count() & 1) sign = -sign;
  return Rational(sign);
}

// Evaluate the substitution images of this element at a rational point.
// Fixed points of this map are exactly the stabilizer conditions used below.
inline std::vector<Rational> act_point(const GroupElement& g, const std::vector<Rational>& p) {
  if (g.rank() != static_cast<int>(p.size())) throw ShapeError("point has wrong dimension");
  const auto images = g.images();
  std::vector<Rational> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& im = images[i];
    const Rational& v = p[static_cast<std::size_t>(im.target)];
    if (im.power < 0 && v == 0) throw PoleError("torus action undefined at a zero coordinate");
    Rational w = (im.power < 0) ? Rational(1) / v : v;
    q[i] = (im.sign < 0) ? Rational(-w) : w;
  }
  return q;
}

inline std::vector<GroupElement> stabilizer(const GroupSpec& spec, Action variant,
                                            const std::vector<Rational>& point) {
  if (variant != Action::Linear)
    for (const auto& v : point)
      if (v == 0) throw PoleError("torus stabilizer requires nonzero coordinates");
  std::vector<GroupElement> out;
  for (const auto& g : enumerate_group(spec, variant))
    if (act_point(g, point) == point) out.push_back(g);
  return out;
}

// Reflection hyperplane data: one linear form per hyperplane, all of order 2
// for these real families, plus the group order.
struct ReflectionData {
  std::vector<LaurentPoly<Rational>> forms;
  std::vector<int> orders;
  long group_order = 0;
};

inline ReflectionData reflection_data(const GroupSpec& spec) {
  check_group_spec(spec);
  const int n = spec.n;
  ReflectionData data;
  auto var = [&](int i) { return LaurentPoly<Rational>::variable(n, i); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      data.forms.push_back(var(i) - var(j));
      if (spec.family != Family::S) data.forms.push_back(var(i) + var(j));
    }
  if (spec.family == Family::B)
    for (int i = 0; i < n; ++i) data.forms.push_back(var(i));
  data.orders.assign(data.forms.size(), 2);
  data.group_order = group_order(spec);
  return data;
}

// delta = prod of the hyperplane forms, J = prod of forms^(order-1) (equal to
// delta here since all orders are 2), and the invariant power J^|W|.
// Construction certifies w.J = det(w) J and invariance of J^|W| over the
// whole group under the linear action.
struct SkewInvariants {
  LaurentPoly<Rational> delta;
  LaurentPoly<Rational> j;
  LaurentPoly<Rational> delta_lin;
};

inline SkewInvariants skew_invariant_j(const GroupSpec& spec) {
  const ReflectionData data = reflection_data(spec);
  const int n = spec.n;
  LaurentPoly<Rational> delta = LaurentPoly<Rational>::one(n);
  for (const auto& f : data.forms) delta *= f;
  LaurentPoly<Rational> j = LaurentPoly<Rational>::one(n);
  for (std::size_t h = 0; h < data.forms.size(); ++h)
    j *= lp_pow(data.forms[h], data.orders[h] - 1);
  LaurentPoly<Rational> delta_lin = lp_pow(j, data.group_order);
  for (const auto& w : enumerate_group(spec, Action::Linear)) {
    if (act(w, j) != determinant(w) * j)
      throw CertificationError("w.J = det(w) J failed", w.to_string());
    if (act(w, delta_lin) != delta_lin)
      throw CertificationError("invariance of J^N failed", w.to_string());
  }
  return SkewInvariants{std::move(delta), std::move(j), std::move(delta_lin)};
}

}  // namespace noncomm
