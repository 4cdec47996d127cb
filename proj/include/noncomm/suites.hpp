#pragma once

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "group_algebra.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "random_gen.hpp"
#include "shift.hpp"
#include "weyl.hpp"

namespace noncomm {

struct CheckResult {
  std::string name;
  bool pass = true;
  Json witness;               // populated on failure
  std::string witness_file;   // set by the front end when it writes the witness out
  double wall_ms = 0.0;       // diagnostic only, never part of the rendered report
};

struct SuiteParams {
  int n = 2;
  std::uint64_t seed = 0;
  int trials = 100;
  std::optional<Sign> sign;
  std::optional<Rational> c;
  std::optional<Family> family;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> notes;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

  void param(const std::string& key, const std::string& value) {
    report_.params.emplace_back(key, value);
  }

  void note(const std::string& text) { report_.notes.push_back(text); }

  // A check passes when the body returns without reporting a witness.
  void check(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(result);
    } catch (const std::exception& ex) {
      result.pass = false;
      result.witness = Json{{"exception", ex.what()}};
    }
    result.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    report_.checks.push_back(std::move(result));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

inline void fail(CheckResult& r, const Json& witness) {
  r.pass = false;
  if (r.witness.is_null()) r.witness = witness;
}

inline void expect(CheckResult& r, bool ok, const std::string& what, const Json& detail = {}) {
  if (!ok) fail(r, Json{{"failed", what}, {"detail", detail}});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual suites
// ---------------------------------------------------------------------------

inline SuiteReport suite_weyl_involutions(const SuiteParams& p) {
  using detail::expect;
  detail::SuiteBuilder b("weyl-involutions");
  const int n = std::min(std::max(p.n, 1), 3);
  b.param("n", std::to_string(n));
  b.param("seed", std::to_string(p.seed));
  b.param("trials", std::to_string(p.trials));

  b.check("epsilon-displayed-values", [&](CheckResult& r) {
    for (int j = 0; j < n; ++j) {
      Exp a(static_cast<std::size_t>(n), 0), d(static_cast<std::size_t>(n), 0);
      a[static_cast<std::size_t>(j)] = 2;
      d[static_cast<std::size_t>(j)] = 1;
      expect(r, epsilon(Sign::Minus, j, WeylElement::d_var(n, j)) ==
                    WeylElement::monomial(n, a, d, Rational(1)),
             "epsilon-minus(d) = x^2 d");
      expect(r, epsilon(Sign::Minus, j, WeylElement::x_var(n, j)) ==
                    Rational(-1) * WeylElement::x_var(n, j, -1),
             "epsilon-minus(x) = -x^{-1}");
      expect(r, epsilon(Sign::Plus, j, WeylElement::x_var(n, j)) ==
                    WeylElement::x_var(n, j, -1),
             "epsilon-plus(x) = x^{-1}");
      expect(r, epsilon(Sign::Plus, j, WeylElement::d_var(n, j)) ==
                    Rational(-1) * WeylElement::monomial(n, a, d, Rational(1)),
             "epsilon-plus(d) = -x^2 d");
    }
  });

  b.check("involutions", [&](CheckResult& r) {
    Rng rng(p.seed);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      const WeylElement u = random_weyl(rng, n);
      for (int j = 0; j < n; ++j)
        for (Sign s : {Sign::Plus, Sign::Minus})
          expect(r, epsilon(s, j, epsilon(s, j, u)) == u, "involution property",
                 weyl_to_json(u));
    }
  });

  b.check("automorphisms", [&](CheckResult& r) {
    Rng rng(p.seed + 1);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      const WeylElement u = random_weyl(rng, n);
      const WeylElement v = random_weyl(rng, n);
      for (int j = 0; j < n; ++j)
        for (Sign s : {Sign::Plus, Sign::Minus})
          expect(r, epsilon(s, j, weyl_mul(u, v)) ==
                        weyl_mul(epsilon(s, j, u), epsilon(s, j, v)),
                 "multiplicativity", Json{{"u", weyl_to_json(u)}, {"v", weyl_to_json(v)}});
    }
  });

  b.check("epsilon-commutator", [&](CheckResult& r) {
    for (int j = 0; j < n; ++j)
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const WeylElement ed = epsilon(s, j, WeylElement::d_var(n, j));
        const WeylElement ex = epsilon(s, j, WeylElement::x_var(n, j));
        expect(r, weyl_mul(ed, ex) - weyl_mul(ex, ed) == WeylElement::one(n),
               "[eps(d), eps(x)] = 1");
      }
  });

  b.check("normal-ordering-faithfulness", [&](CheckResult& r) {
    Rng rng(p.seed + 2);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      const WeylElement u = random_weyl(rng, n);
      const WeylElement v = random_weyl(rng, n);
      const WeylElement uv = weyl_mul(u, v);
      for (int s = 0; s < 10 && r.pass; ++s) {
        const auto f = random_laurent(rng, n);
        expect(r, apply_to_laurent(uv, f) ==
                      apply_to_laurent(u, apply_to_laurent(v, f)),
               "product action equals composed action",
               Json{{"u", weyl_to_json(u)}, {"v", weyl_to_json(v)}});
      }
    }
  });

  return b.take();
}

inline SuiteReport suite_phi_isomorphism(const SuiteParams& p) {
  using detail::expect;
  detail::SuiteBuilder b("phi-isomorphism");
  const int n = std::min(std::max(p.n, 1), 3);
  b.param("n", std::to_string(n));
  b.param("seed", std::to_string(p.seed));
  b.param("trials", std::to_string(p.trials));
  std::vector<Sign> signs = p.sign ? std::vector<Sign>{*p.sign}
                                   : std::vector<Sign>{Sign::Plus, Sign::Minus};
  std::vector<Rational> cs = p.c ? std::vector<Rational>{*p.c}
                                 : std::vector<Rational>{Rational(0), Rational(1, 2), Rational(3)};
  if (p.sign) b.param("sign", sign_name(*p.sign));
  if (p.c) b.param("c", rational_to_string(*p.c));

  for (Sign s : signs)
    for (const Rational& c : cs) {
      const std::string tag = "[" + sign_name(s) + ",c=" + rational_to_string(c) + "]";

      b.check("defining-relation" + tag, [&](CheckResult& r) {
        for (int i = 0; i < n; ++i) {
          const auto px = phi(s, c, WeylElement::x_var(n, i));
          const auto pd = phi(s, c, WeylElement::d_var(n, i));
          expect(r, shift_mul(pd, px) - shift_mul(px, pd) == ShiftElement::one(n),
                 "phi(dx - xd) = 1");
        }
      });

      b.check("homomorphism" + tag, [&](CheckResult& r) {
        Rng rng(p.seed + 10);
        for (int t = 0; t < p.trials && r.pass; ++t) {
          const WeylElement u = random_weyl(rng, n);
          const WeylElement v = random_weyl(rng, n);
          expect(r, phi(s, c, weyl_mul(u, v)) == shift_mul(phi(s, c, u), phi(s, c, v)),
                 "phi(uv) = phi(u) phi(v)",
                 Json{{"u", weyl_to_json(u)}, {"v", weyl_to_json(v)}});
        }
      });

      b.check("injectivity-samples" + tag, [&](CheckResult& r) {
        Rng rng(p.seed + 11);
        for (int t = 0; t < p.trials && r.pass; ++t) {
          const WeylElement u = random_nonzero_weyl(rng, n);
          expect(r, !phi(s, c, u).is_zero(), "phi(u) = 0 only for u = 0", weyl_to_json(u));
        }
      });

      b.check("intertwining" + tag, [&](CheckResult& r) {
        const auto rep = verify_intertwining(s, c, n, p.trials, p.seed + 12);
        expect(r, rep.pass, "epsilon_R . phi = phi . epsilon",
               Json{{"failures", rep.failures}});
      });
    }

  b.check("specific-image-minus-c0", [&](CheckResult& r) {
    // phi_minus_0(d) = (t+1) sigma^{-1} + 1 + sigma^{-2}
    ShiftElement expected(n);
    Exp k1(static_cast<std::size_t>(n), 0), k2(static_cast<std::size_t>(n), 0);
    k1[0] = -1;
    k2[0] = -2;
    expected.add_term(k1, LaurentPoly<Rational>::variable(n, 0) +
                              LaurentPoly<Rational>::one(n));
    expected += ShiftElement::one(n);
    expected.add_term(k2, LaurentPoly<Rational>::one(n));
    expect(r, phi(Sign::Minus, Rational(0), WeylElement::d_var(n, 0)) == expected,
           "displayed image of d at sign minus, c = 0");
    expect(r, phi(Sign::Minus, Rational(0), WeylElement::x_var(n, 0)) ==
                  ShiftElement::sigma(n, 0),
           "phi(x) = sigma");
  });

  b.check("inverse-round-trip", [&](CheckResult& r) {
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (const Rational& c :
           {Rational(0), Rational(1), Rational(1, 2), Rational(-3)})
        for (int i = 0; i < n; ++i) {
          expect(r, phi(s, c, phi_inverse_sigma(s, c, n, i)) == ShiftElement::sigma(n, i),
                 "phi(phi^{-1}(sigma)) = sigma");
          expect(r, phi(s, c, phi_inverse_t(s, c, n, i)) == ShiftElement::t_var(n, i),
                 "phi(phi^{-1}(t)) = t",
                 Json{{"sign", sign_name(s)}, {"c", rational_to_string(c)}});
        }
  });

  return b.take();
}

inline SuiteReport suite_bn_invariants(const SuiteParams& p) {
  using detail::expect;
  detail::SuiteBuilder b("bn-invariants");
  const int n = std::min(std::max(p.n, 1), 4);
  const Sign sign = p.sign.value_or(Sign::Minus);
  const Action variant = (sign == Sign::Minus) ? Action::TorusMinus : Action::TorusPlus;
  const Basis basis = (sign == Sign::Minus) ? Basis::BMinus : Basis::BPlus;
  const GroupSpec spec{Family::B, n};
  b.param("n", std::to_string(n));
  b.param("sign", sign_name(sign));
  b.param("seed", std::to_string(p.seed));
  b.param("trials", std::to_string(p.trials));

  b.check("generators-certified", [&](CheckResult& r) {
    const auto gens = bn_generators(n, sign);
    expect(r, static_cast<int>(gens.size()) == n, "one generator per degree");
    if (n == 2 && sign == Sign::Minus) {
      auto x1 = LaurentPoly<Rational>::variable(2, 0), x2 = LaurentPoly<Rational>::variable(2, 1);
      auto x1i = LaurentPoly<Rational>::variable(2, 0, -1),
           x2i = LaurentPoly<Rational>::variable(2, 1, -1);
      expect(r, gens[0] == x1 - x1i + x2 - x2i, "s_1 for rank two");
      expect(r, gens[1] == (x1 - x1i) * (x2 - x2i), "s_2 for rank two");
    }
  });

  b.check("generator-leading-monomials", [&](CheckResult& r) {
    const auto gens = bn_generators(n, sign);
    for (int i = 1; i <= n; ++i) {
      const auto [e, c] = lex_leading(gens[static_cast<std::size_t>(i - 1)]);
      Exp want(static_cast<std::size_t>(n), 0);
      for (int k = 0; k < i; ++k) want[static_cast<std::size_t>(k)] = 1;
      expect(r, e == want && c == 1, "leading monomial of s_i",
             Json{{"i", i}, {"leading", e}});
    }
  });

  b.check("orbit-round-trip", [&](CheckResult& r) {
    Rng rng(p.seed);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      const auto pi = random_dominant(rng, n, DominantExponent::Flavor::B);
      const auto m = orbit_sum(pi, spec, variant);
      const auto dec = decompose(m, basis);
      expect(r, expand(dec) == m, "decomposition reproduces the orbit sum",
             Json{{"pi", pi.entries}});
    }
  });

  b.check("reynolds-projector", [&](CheckResult& r) {
    Rng rng(p.seed + 1);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      const auto f = random_laurent(rng, n);
      const auto g = reynolds(f, spec, variant);
      expect(r, reynolds(g, spec, variant) == g, "idempotence", laurent_to_json(f));
      for (const auto& w : group_generators(spec, variant))
        expect(r, act(w, g) == g, "projector lands on invariants", laurent_to_json(f));
    }
  });

  b.check("reynolds-round-trip", [&](CheckResult& r) {
    Rng rng(p.seed + 2);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      const auto g = reynolds(random_laurent(rng, n), spec, variant);
      expect(r, expand(decompose(g, basis)) == g,
             "projected polynomial decomposes and reconstructs");
    }
  });

  return b.take();
}

inline SuiteReport suite_dn_invariants(const SuiteParams& p) {
  using detail::expect;
  detail::SuiteBuilder b("dn-invariants");
  const int n = std::min(std::max(p.n, 2), 4);
  const GroupSpec spec{Family::D, n};
  b.param("n", std::to_string(n));
  b.param("seed", std::to_string(p.seed));
  b.param("trials", std::to_string(p.trials));
  b.note("orbit sums are taken over the even-signed group itself");
  if (n < 4) b.note("rank below four: identities tested as regression cases");

  b.check("generators-certified", [&](CheckResult& r) {
    const auto dg = dn_generators(n);
    auto sn = elementary_symmetric(n, [&] {
      std::vector<LaurentPoly<Rational>> args;
      for (int i = 0; i < n; ++i)
        args.push_back(LaurentPoly<Rational>::variable(n, i) +
                       LaurentPoly<Rational>::variable(n, i, -1));
      return args;
    }());
    expect(r, dg.delta_plus + dg.delta_minus == sn, "half sums add to s_n");
    if (n == 2) {
      LaurentPoly<Rational> dplus(2), dminus(2);
      dplus.add_term({1, 1}, Rational(1));
      dplus.add_term({-1, -1}, Rational(1));
      dminus.add_term({1, -1}, Rational(1));
      dminus.add_term({-1, 1}, Rational(1));
      expect(r, dg.delta_plus == dplus, "delta_plus for rank two");
      expect(r, dg.delta_minus == dminus, "delta_minus for rank two");
    }
    // a single plus-type flip lies outside the group and swaps the halves
    const GroupElement flip1(GroupElement::identity(n, Action::TorusPlus).perm(),
                             [&] {
                               std::vector<std::uint8_t> f(static_cast<std::size_t>(n), 0);
                               f[0] = 1;
                               return f;
                             }(),
                             Action::TorusPlus);
    expect(r, act(flip1, dg.delta_minus) == dg.delta_plus,
           "odd flip exchanges the half sum and half difference");
  });

  b.check("delta-leading-monomials", [&](CheckResult& r) {
    const auto dg = dn_generators(n);
    Exp ones(static_cast<std::size_t>(n), 1);
    Exp mixed = ones;
    mixed.back() = -1;
    const auto [ep, cp] = lex_leading(dg.delta_plus);
    const auto [em, cm] = lex_leading(dg.delta_minus);
    expect(r, ep == ones && cp == 1, "leading of delta_plus");
    expect(r, em == mixed && cm == 1, "leading of delta_minus");
  });

  b.check("orbit-round-trip", [&](CheckResult& r) {
    Rng rng(p.seed);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      const auto pi = random_dominant(rng, n, DominantExponent::Flavor::D);
      const auto m = orbit_sum(pi, spec, Action::TorusPlus);
      expect(r, expand(decompose(m, Basis::D)) == m,
             "decomposition reproduces the orbit sum", Json{{"pi", pi.entries}});
    }
  });

  b.check("reynolds-round-trip", [&](CheckResult& r) {
    Rng rng(p.seed + 1);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      const auto g = reynolds(random_laurent(rng, n), spec, Action::TorusPlus);
      expect(r, expand(decompose(g, Basis::D)) == g,
             "projected polynomial decomposes and reconstructs");
    }
  });

  b.check("product-relation", [&](CheckResult& r) {
    const auto rel = dn_relation(n);  // certifies degree bound and cleared identity
    if (n == 2) {
      Decomposition p0{Basis::BPlus, 2, {{{0, 0}, Rational(-2)}}};
      Decomposition p1{Basis::BPlus, 2, {{{2, 0}, Rational(1)}, {{0, 0}, Rational(-4)}}};
      expect(r, rel.p0.terms == p0.terms, "p_0 = -2");
      expect(r, rel.p1.terms == p1.terms, "p_1 = s_1^2 - 4");
      const auto dg = dn_generators(2);
      expect(r, rel.big_p == dg.delta_plus + LaurentPoly<Rational>::constant(2, Rational(2)),
             "P = delta_plus + 2");
    }
  });

  return b.take();
}

inline SuiteReport suite_discriminant_freeness(const SuiteParams& p) {
  using detail::expect;
  detail::SuiteBuilder b("discriminant-freeness");
  const int n = std::min(std::max(p.n, 2), 3);
  b.param("n", std::to_string(n));
  b.param("seed", std::to_string(p.seed));
  b.param("trials", std::to_string(p.trials));
  const GroupSpec bspec{Family::B, n};
  const GroupSpec dspec{Family::D, n};

  b.check("discriminant-invariant-exhaustive", [&](CheckResult& r) {
    const auto disc = torus_discriminant(n);
    for (const auto& g : enumerate_group(bspec, Action::TorusMinus))
      expect(r, act(g, disc) == disc, "invariance under the minus action", Json(g.to_string()));
    for (const auto& g : enumerate_group(bspec, Action::TorusPlus))
      expect(r, act(g, disc) == disc, "invariance under the plus action", Json(g.to_string()));
    for (const auto& g : enumerate_group(dspec, Action::TorusPlus))
      expect(r, act(g, disc) == disc, "invariance under the even-signed action",
             Json(g.to_string()));
  });

  b.check("off-variety-freeness", [&](CheckResult& r) {
    const auto disc = torus_discriminant(n);
    Rng rng(p.seed);
    int found = 0;
    long attempts = 0;
    while (found < p.trials && r.pass) {
      if (++attempts > 100L * p.trials) {
        detail::fail(r, Json{{"failed", "could not sample enough regular points"}});
        break;
      }
      const auto pt = random_point(rng, n);
      if (evaluate(disc, pt) == 0) continue;
      ++found;
      Json jpt = Json::array();
      for (const auto& v : pt) jpt.push_back(rational_to_string(v));
      expect(r, stabilizer(bspec, Action::TorusMinus, pt).size() == 1,
             "free point under the minus action", jpt);
      expect(r, stabilizer(bspec, Action::TorusPlus, pt).size() == 1,
             "free point under the plus action", jpt);
      expect(r, stabilizer(dspec, Action::TorusPlus, pt).size() == 1,
             "free point under the even-signed action", jpt);
    }
  });

  b.check("on-variety-witnesses", [&](CheckResult& r) {
    const auto disc = torus_discriminant(n);
    std::vector<Rational> minus_pt{Rational(2), Rational(-1, 2)};
    std::vector<Rational> plus_pt{Rational(2), Rational(1, 2)};
    for (int i = 2; i < n; ++i) {
      minus_pt.push_back(Rational(2 * i + 1));
      plus_pt.push_back(Rational(2 * i + 1));
    }
    expect(r, evaluate(disc, minus_pt) == 0, "witness point lies on the variety");
    expect(r, evaluate(disc, plus_pt) == 0, "witness point lies on the variety");
    const auto stab_minus = stabilizer(bspec, Action::TorusMinus, minus_pt);
    const auto stab_plus = stabilizer(bspec, Action::TorusPlus, plus_pt);
    const auto stab_d = stabilizer(dspec, Action::TorusPlus, plus_pt);
    expect(r, stab_minus.size() > 1, "nontrivial stabilizer under the minus action");
    expect(r, stab_plus.size() > 1, "nontrivial stabilizer under the plus action");
    expect(r, stab_d.size() > 1, "nontrivial stabilizer in the even-signed group");
    if (r.pass)
      r.witness = Json{{"note", "recorded stabilizer witnesses"},
                       {"minus", group_element_to_json(stab_minus.back())},
                       {"plus", group_element_to_json(stab_plus.back())},
                       {"even", group_element_to_json(stab_d.back())}};
  });

  return b.take();
}

inline SuiteReport suite_skew_invariance_j(const SuiteParams& p) {
  using detail::expect;
  detail::SuiteBuilder b("skew-invariance-J");
  std::vector<GroupSpec> specs;
  if (p.family) {
    specs.push_back(GroupSpec{*p.family, p.n});
    b.param("group", family_name(*p.family) + std::to_string(p.n));
  } else {
    specs = {GroupSpec{Family::S, 2}, GroupSpec{Family::S, 3}, GroupSpec{Family::B, 2},
             GroupSpec{Family::B, 3}};
    b.param("group", "default-set");
  }
  b.param("seed", std::to_string(p.seed));
  b.param("trials", std::to_string(p.trials));

  for (const auto& spec : specs) {
    const std::string g = family_name(spec.family) + std::to_string(spec.n);
    b.check("skew-identity-" + g, [&](CheckResult& r) {
      const auto inv = skew_invariant_j(spec);  // certifies over the whole group
      for (const auto& w : enumerate_group(spec, Action::Linear)) {
        expect(r, act(w, inv.j) == determinant(w) * inv.j, "w.J = det(w) J",
               Json(w.to_string()));
        expect(r, act(w, inv.delta_lin) == inv.delta_lin, "invariance of J^N",
               Json(w.to_string()));
      }
      if (spec.family == Family::S && spec.n == 2) {
        auto x1 = LaurentPoly<Rational>::variable(2, 0),
             x2 = LaurentPoly<Rational>::variable(2, 1);
        expect(r, inv.j == x1 - x2, "J for the rank-two symmetric group");
      }
      if (spec.family == Family::B && spec.n == 2) {
        LaurentPoly<Rational> want(2);
        want.add_term({3, 1}, Rational(1));
        want.add_term({1, 3}, Rational(-1));
        expect(r, inv.j == want, "J for the rank-two hyperoctahedral group");
      }
    });

    b.check("regular-freeness-" + g, [&](CheckResult& r) {
      const auto inv = skew_invariant_j(spec);
      Rng rng(p.seed);
      int found = 0;
      long attempts = 0;
      while (found < p.trials && r.pass) {
        if (++attempts > 100L * p.trials) {
          detail::fail(r, Json{{"failed", "could not sample enough regular points"}});
          break;
        }
        const auto pt = random_point(rng, spec.n);
        if (evaluate(inv.delta, pt) == 0) continue;
        ++found;
        expect(r, stabilizer(spec, Action::Linear, pt).size() == 1,
               "regular point has trivial stabilizer");
      }
    });
  }

  return b.take();
}

inline SuiteReport suite_idempotents(const SuiteParams& p) {
  using detail::expect;
  detail::SuiteBuilder b("idempotents");
  b.param("seed", std::to_string(p.seed));

  for (int m = 2; m <= 12; ++m) {
    b.check("orthogonal-complete-m" + std::to_string(m), [&](CheckResult& r) {
      const auto es = idempotents(m);  // construction certifies both identities
      expect(r, static_cast<int>(es.size()) == m, "one idempotent per character");
      if (m == 2) {
        const Rational half(1, 2);
        expect(r, es[0].coeff(0).rational_part() == half &&
                      es[0].coeff(1).rational_part() == half,
               "e_0 = (1 + g)/2");
        expect(r, es[1].coeff(0).rational_part() == half &&
                      es[1].coeff(1).rational_part() == -half,
               "e_1 = (1 - g)/2");
      }
    });

    b.check("character-identity-m" + std::to_string(m), [&](CheckResult& r) {
      const auto es = idempotents(m);
      const auto g = CyclicAlgebraElement::generator_power(m, 1, CycloNum(Rational(1), m));
      for (int i = 0; i < m; ++i)
        expect(r, g * es[static_cast<std::size_t>(i)] ==
                      CycloNum::zeta(m, i) * es[static_cast<std::size_t>(i)],
               "g e_i = zeta^i e_i", Json{{"m", m}, {"i", i}});
    });
  }

  b.check("symmetrizer-trivial", [&](CheckResult& r) {
    const auto e = symmetrizer(GroupSpec{Family::S, 1});
    expect(r, e.size() == 1 && e.begin()->second == 1, "trivial group symmetrizer is 1");
  });

  b.check("symmetrizer-S2", [&](CheckResult& r) {
    const auto e = symmetrizer(GroupSpec{Family::S, 2});
    expect(r, e.size() == 2, "two group elements");
    for (const auto& [w, c] : e) expect(r, c == Rational(1, 2), "uniform weights");
  });

  b.check("symmetrizer-S3", [&](CheckResult& r) {
    expect(r, symmetrizer(GroupSpec{Family::S, 3}).size() == 6, "six uniform weights");
  });
  b.check("symmetrizer-B2", [&](CheckResult& r) {
    expect(r, symmetrizer(GroupSpec{Family::B, 2}).size() == 8, "eight uniform weights");
  });

  return b.take();
}

inline SuiteReport suite_clearing(const SuiteParams& p) {
  using detail::expect;
  detail::SuiteBuilder b("clearing");
  const int n = 2;  // hyperoctahedral rank two carries the coordinate hyperplanes
  const GroupSpec spec{Family::B, n};
  b.param("n", std::to_string(n));
  b.param("seed", std::to_string(p.seed));
  b.param("trials", std::to_string(p.trials));

  b.check("already-clear", [&](CheckResult& r) {
    Rng rng(p.seed);
    for (int t = 0; t < 20; ++t) {
      WeylElement u = random_weyl(rng, n, 4, 2);
      // force nonnegative x-exponents
      WeylElement shifted(n);
      for (const auto& [k, c] : u.terms()) {
        Exp x = k.first;
        for (auto& e : x) e = std::abs(e);
        shifted.add_term(x, k.second, c);
      }
      const auto [k, v] = clear_discriminant(shifted, LaurentPoly<Rational>::variable(n, 0),
                                             4);
      expect(r, k == 0 && v == shifted, "elements already inside clear at power zero");
    }
  });

  b.check("monomial-clearing", [&](CheckResult& r) {
    const auto [k1, v1] =
        clear_discriminant(WeylElement::x_var(n, 0, -1), LaurentPoly<Rational>::variable(n, 0), 4);
    expect(r, k1 == 1 && v1 == WeylElement::one(n), "x^{-1} clears to 1");
    WeylElement u(n);
    u.add_term({-2, 0}, {1, 0}, Rational(1));
    const auto [k2, v2] =
        clear_discriminant(u, lp_pow(LaurentPoly<Rational>::variable(n, 0), 2), 4);
    expect(r, k2 == 1, "x^{-2} d clears in one step");
  });

  b.check("invariant-clearing", [&](CheckResult& r) {
    const auto inv = skew_invariant_j(spec);
    const auto disc = inv.delta * inv.delta;  // invariant square of the arrangement product
    Rng rng(p.seed + 1);
    for (int t = 0; t < p.trials && r.pass; ++t) {
      WeylElement raw = random_weyl(rng, n, 3, 2, 2);
      Exp shiftdown(static_cast<std::size_t>(n), 0);
      for (auto& e : shiftdown) e = -static_cast<int>(rng.uniform(0, 3));
      const WeylElement local = weyl_mul(
          WeylElement::monomial(n, shiftdown, Exp(static_cast<std::size_t>(n), 0), Rational(1)),
          raw);
      const WeylElement u = reynolds_weyl(local, spec, Action::Linear);
      if (u.is_zero()) continue;
      const auto [k, v] = clear_discriminant_certified(u, disc, 4, spec, Action::Linear);
      expect(r, v.in_polynomial_algebra(), "cleared element has no denominators");
      expect(r, k <= 4, "power stays within budget", Json{{"k", k}});
    }
  });

  b.check("clearing-failure-reported", [&](CheckResult& r) {
    try {
      clear_discriminant(WeylElement::x_var(n, 0, -1), LaurentPoly<Rational>::variable(n, 1), 3);
      detail::fail(r, Json{{"failed", "expected a clearing failure"}});
    } catch (const ClearingError& ex) {
      expect(r, ex.most_negative_exponent == -1, "failure reports the residual exponent");
    }
  });

  return b.take();
}

inline SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  if (name == "weyl-involutions") return suite_weyl_involutions(params);
  if (name == "phi-isomorphism") return suite_phi_isomorphism(params);
  if (name == "bn-invariants") return suite_bn_invariants(params);
  if (name == "dn-invariants") return suite_dn_invariants(params);
  if (name == "discriminant-freeness") return suite_discriminant_freeness(params);
  if (name == "skew-invariance-J") return suite_skew_invariance_j(params);
  if (name == "idempotents") return suite_idempotents(params);
  if (name == "clearing") return suite_clearing(params);
  throw UnsupportedError("unknown suite: " + name);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "weyl-involutions",     "phi-isomorphism", "bn-invariants", "dn-invariants",
      "discriminant-freeness", "skew-invariance-J", "idempotents",  "clearing"};
  return names;
}

// ---------------------------------------------------------------------------
// Report rendering (deterministic: no timing, no environment)
// ---------------------------------------------------------------------------

inline std::string render_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "SUITE " << report.suite;
  for (const auto& [k, v] : report.params) out << " " << k << "=" << v;
  out << "\n";
  for (const auto& note : report.notes) out << "NOTE " << note << "\n";
  for (const auto& c : report.checks) {
    out << "CHECK " << c.name << (c.pass ? " PASS" : " FAIL");
    if (!c.pass && !c.witness_file.empty()) out << " " << c.witness_file;
    out << "\n";
  }
  out << "RESULT " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

inline Json render_json(const SuiteReport& report) {
  Json params = Json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json jc{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.pass) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  return Json{{"suite", report.suite},
              {"params", params},
              {"notes", report.notes},
              {"checks", checks}};
}

// ---------------------------------------------------------------------------
// File services
// ---------------------------------------------------------------------------

// Decompose the polynomial in input_path in the given basis, write the
// decomposition JSON to output_path, and print the reconstruction certificate.
// Exit-code contract: 0 success, 1 non-invariant input, 2 usage/format errors.
inline int decompose_file(Basis basis, const std::string& input_path,
                          const std::string& output_path, std::ostream& out, std::ostream& err) {
  Json input;
  try {
    std::ifstream in(input_path);
    if (!in) {
      err << "error: cannot open input file " << input_path << "\n";
      return 2;
    }
    in >> input;
  } catch (const std::exception& ex) {
    err << "error: malformed JSON input: " << ex.what() << "\n";
    return 2;
  }
  try {
    const auto f = laurent_rational_from_json(input);
    const auto dec = decompose(f, basis);
    if (expand(dec) != f) {
      err << "error: internal reconstruction mismatch\n";
      return 1;
    }
    std::ofstream os(output_path);
    if (!os) {
      err << "error: cannot open output file " << output_path << "\n";
      return 2;
    }
    os << decomposition_to_json(dec).dump(2) << "\n";
    out << "CERTIFIED decomposition of " << dec.terms.size()
        << " basis terms reconstructs the input exactly\n";
    return 0;
  } catch (const NotInvariantError& ex) {
    err << "error: input is not invariant; offending monomial " << ex.offending_monomial
        << "\n";
    return 1;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
}

// Reynolds projection of the polynomial in input_path under the given action.
inline int reynolds_file(const GroupSpec& spec, Action variant, const std::string& input_path,
                         const std::string& output_path, std::ostream& out, std::ostream& err) {
  Json input;
  try {
    std::ifstream in(input_path);
    if (!in) {
      err << "error: cannot open input file " << input_path << "\n";
      return 2;
    }
    in >> input;
  } catch (const std::exception& ex) {
    err << "error: malformed JSON input: " << ex.what() << "\n";
    return 2;
  }
  try {
    const auto f = laurent_rational_from_json(input);
    const auto g = reynolds(f, spec, variant);
    std::ofstream os(output_path);
    if (!os) {
      err << "error: cannot open output file " << output_path << "\n";
      return 2;
    }
    os << laurent_to_json(g).dump(2) << "\n";
    out << "PROJECTED onto the invariants of " << family_name(spec.family) << spec.n << " ("
        << action_name(variant) << ")\n";
    return 0;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
}

}  // namespace noncomm
