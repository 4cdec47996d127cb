#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclotomic.hpp"
#include "groups.hpp"
#include "invariants.hpp"
#include "laurent.hpp"
#include "shift.hpp"
#include "weyl.hpp"

// Interchange formats. Term lists are emitted sorted descending in the lex
// order so serialized objects are canonical byte-for-byte.

namespace noncomm {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& q) { return rational_to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  return rational_from_string(j.get<std::string>());
}

inline Json cyclo_to_json(const CycloNum& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_string(q));
  return Json{{"m", c.order()}, {"coeffs", coeffs}};
}

inline CycloNum cyclo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
    throw std::invalid_argument("cyclotomic number needs fields m and coeffs");
  const int m = j.at("m").get<int>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || static_cast<int>(arr.size()) != euler_phi(m))
    throw std::invalid_argument("cyclotomic coefficient list has wrong length");
  CycloNum out(Rational(0), m);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out += CycloNum::zeta(m, static_cast<long>(i)) *
           CycloNum(rational_from_json(arr[i]), m);
  return out;
}

template <class C>
Json coeff_to_json(const C& c);

template <>
inline Json coeff_to_json<Rational>(const Rational& c) {
  return rational_to_json(c);
}

template <>
inline Json coeff_to_json<CycloNum>(const CycloNum& c) {
  return cyclo_to_json(c);
}

template <class C>
Json laurent_to_json(const LaurentPoly<C>& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back(Json{{"exp", it->first}, {"coef", coeff_to_json<C>(it->second)}});
  return Json{{"nvars", f.nvars()}, {"terms", terms}};
}

namespace detail {

inline Exp exp_from_json(const Json& j, int nvars) {
  if (!j.is_array() || static_cast<int>(j.size()) != nvars)
    throw std::invalid_argument("exponent vector has wrong length");
  Exp e(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) e[i] = j[i].get<int>();
  return e;
}

}  // namespace detail

inline LaurentPoly<Rational> laurent_rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    throw std::invalid_argument("polynomial needs fields nvars and terms");
  const int n = j.at("nvars").get<int>();
  if (n < 0) throw std::invalid_argument("nvars must be nonnegative");
  LaurentPoly<Rational> f(n);
  for (const auto& t : j.at("terms"))
    f.add_term(detail::exp_from_json(t.at("exp"), n), rational_from_json(t.at("coef")));
  return f;
}

inline LaurentPoly<CycloNum> laurent_cyclo_from_json(const Json& j) {
  const int n = j.at("nvars").get<int>();
  LaurentPoly<CycloNum> f(n);
  for (const auto& t : j.at("terms"))
    f.add_term(detail::exp_from_json(t.at("exp"), n), cyclo_from_json(t.at("coef")));
  return f;
}

inline Json group_spec_to_json(const GroupSpec& spec, Action variant) {
  return Json{{"family", family_name(spec.family)}, {"n", spec.n},
              {"variant", action_name(variant)}};
}

inline Family family_from_string(const std::string& s) {
  if (s == "S") return Family::S;
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  throw std::invalid_argument("unknown family: " + s);
}

inline Action action_from_string(const std::string& s) {
  if (s == "linear") return Action::Linear;
  if (s == "torus-minus") return Action::TorusMinus;
  if (s == "torus-plus") return Action::TorusPlus;
  throw std::invalid_argument("unknown action variant: " + s);
}

// Group elements serialize with 1-based permutation images.
inline Json group_element_to_json(const GroupElement& g) {
  std::vector<int> perm1;
  perm1.reserve(g.perm().size());
  for (int p : g.perm()) perm1.push_back(p + 1);
  std::vector<bool> flips(g.flips().begin(), g.flips().end());
  return Json{{"perm", perm1}, {"flips", flips}};
}

inline GroupElement group_element_from_json(const Json& j, Action variant) {
  std::vector<int> perm;
  for (const auto& p : j.at("perm")) perm.push_back(p.get<int>() - 1);
  std::vector<std::uint8_t> flips;
  for (const auto& f : j.at("flips")) flips.push_back(f.get<bool>() ? 1 : 0);
  return GroupElement(std::move(perm), std::move(flips), variant);
}

inline Json weyl_to_json(const WeylElement& u) {
  Json terms = Json::array();
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it)
    terms.push_back(Json{{"x", it->first.first},
                         {"d", it->first.second},
                         {"coef", rational_to_json(it->second)}});
  return Json{{"nvars", u.nvars()}, {"terms", terms}};
}

inline WeylElement weyl_from_json(const Json& j) {
  const int n = j.at("nvars").get<int>();
  WeylElement u(n);
  for (const auto& t : j.at("terms"))
    u.add_term(detail::exp_from_json(t.at("x"), n), detail::exp_from_json(t.at("d"), n),
               rational_from_json(t.at("coef")));
  return u;
}

inline Json shift_to_json(const ShiftElement& u) {
  Json terms = Json::array();
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it)
    terms.push_back(Json{{"sigma", it->first}, {"poly", laurent_to_json(it->second)}});
  return Json{{"nvars", u.nvars()}, {"terms", terms}};
}

inline ShiftElement shift_from_json(const Json& j) {
  const int n = j.at("nvars").get<int>();
  ShiftElement u(n);
  for (const auto& t : j.at("terms"))
    u.add_term(detail::exp_from_json(t.at("sigma"), n),
               laurent_rational_from_json(t.at("poly")));
  return u;
}

inline Basis basis_from_string(const std::string& s) {
  if (s == "B-minus") return Basis::BMinus;
  if (s == "B-plus") return Basis::BPlus;
  if (s == "D") return Basis::D;
  throw std::invalid_argument("unknown basis: " + s);
}

inline Json decomposition_to_json(const Decomposition& dec) {
  Json terms = Json::array();
  for (auto it = dec.terms.rbegin(); it != dec.terms.rend(); ++it)
    terms.push_back(Json{{"gen_exp", it->first}, {"coef", rational_to_json(it->second)}});
  return Json{{"basis", basis_name(dec.basis)}, {"terms", terms}};
}

inline Decomposition decomposition_from_json(const Json& j, int nvars) {
  Decomposition dec{basis_from_string(j.at("basis").get<std::string>()), nvars, {}};
  const int width = (dec.basis == Basis::D) ? nvars + 1 : nvars;
  for (const auto& t : j.at("terms")) {
    std::vector<int> e;
    for (const auto& v : t.at("gen_exp")) e.push_back(v.get<int>());
    if (static_cast<int>(e.size()) != width)
      throw std::invalid_argument("gen_exp has wrong length");
    dec.terms[e] = rational_from_json(t.at("coef"));
  }
  return dec;
}

}  // namespace noncomm
