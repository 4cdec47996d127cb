#include <catch2/catch_amalgamated.hpp>

#include <noncomm/random_gen.hpp>
#include <noncomm/weyl.hpp>

using namespace noncomm;

namespace {

WeylElement xv(int n, int i, int p = 1) { return WeylElement::x_var(n, i, p); }
WeylElement dv(int n, int i, int p = 1) { return WeylElement::d_var(n, i, p); }

}  // namespace

TEST_CASE("normal ordering of the defining relation") {
  const auto dx = weyl_mul(dv(1, 0), xv(1, 0));
  WeylElement want(1);
  want.add_term({1}, {1}, Rational(1));  // x d
  want.add_term({0}, {0}, Rational(1));  // + 1
  CHECK(dx == want);
}

TEST_CASE("commutation past an inverted coordinate") {
  // d * x^{-1} = x^{-1} d - x^{-2}
  const auto p = weyl_mul(dv(1, 0), xv(1, 0, -1));
  WeylElement want(1);
  want.add_term({-1}, {1}, Rational(1));
  want.add_term({-2}, {0}, Rational(-1));
  CHECK(p == want);
}

TEST_CASE("iterated commutation") {
  // d^2 * x = x d^2 + 2 d
  const auto p = weyl_mul(dv(1, 0, 2), xv(1, 0));
  WeylElement want(1);
  want.add_term({1}, {2}, Rational(1));
  want.add_term({0}, {1}, Rational(2));
  CHECK(p == want);
}

TEST_CASE("action on Laurent polynomials") {
  const auto x3 = LaurentPoly<Rational>::variable(1, 0, 3);
  CHECK(apply_to_laurent(dv(1, 0), x3) ==
        Rational(3) * LaurentPoly<Rational>::variable(1, 0, 2));

  // x^2 d acting on x^r gives r x^{r+1}
  WeylElement op(1);
  op.add_term({2}, {1}, Rational(1));
  for (int r : {-3, -1, 0, 1, 2, 5}) {
    const auto xr = LaurentPoly<Rational>::variable(1, 0, r);
    CHECK(apply_to_laurent(op, xr) ==
          Rational(r) * LaurentPoly<Rational>::variable(1, 0, r + 1));
  }

  // (x d)^2 acting on x^r gives r^2 x^r
  WeylElement euler(1);
  euler.add_term({1}, {1}, Rational(1));
  const auto euler2 = weyl_mul(euler, euler);
  for (int r : {-2, 1, 4}) {
    const auto xr = LaurentPoly<Rational>::variable(1, 0, r);
    CHECK(apply_to_laurent(euler2, xr) == Rational(r * r) * xr);
  }
}

TEST_CASE("normal ordering agrees with the composed action") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto u = random_weyl(rng, n);
    const auto v = random_weyl(rng, n);
    const auto uv = weyl_mul(u, v);
    for (int s = 0; s < 10; ++s) {
      const auto f = random_laurent(rng, n);
      REQUIRE(apply_to_laurent(uv, f) == apply_to_laurent(u, apply_to_laurent(v, f)));
    }
  }
}

TEST_CASE("multiplication is associative and bilinear") {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto u = random_weyl(rng, 2);
    const auto v = random_weyl(rng, 2);
    const auto w = random_weyl(rng, 2);
    REQUIRE(weyl_mul(weyl_mul(u, v), w) == weyl_mul(u, weyl_mul(v, w)));
    REQUIRE(weyl_mul(u + v, w) == weyl_mul(u, w) + weyl_mul(v, w));
  }
}

TEST_CASE("displayed involution values") {
  CHECK(epsilon(Sign::Minus, 0, dv(1, 0)) == WeylElement::monomial(1, {2}, {1}, Rational(1)));
  CHECK(epsilon(Sign::Minus, 0, xv(1, 0)) == Rational(-1) * xv(1, 0, -1));
  CHECK(epsilon(Sign::Plus, 0, xv(1, 0)) == xv(1, 0, -1));
  CHECK(epsilon(Sign::Plus, 0, dv(1, 0)) ==
        Rational(-1) * WeylElement::monomial(1, {2}, {1}, Rational(1)));
  // applying the minus involution twice returns the generator
  CHECK(epsilon(Sign::Minus, 0, epsilon(Sign::Minus, 0, dv(1, 0))) == dv(1, 0));
}

TEST_CASE("involutions square to the identity") {
  Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto u = random_weyl(rng, n);
    for (int j = 0; j < n; ++j)
      for (Sign s : {Sign::Plus, Sign::Minus})
        REQUIRE(epsilon(s, j, epsilon(s, j, u)) == u);
  }
}

TEST_CASE("involutions are algebra automorphisms") {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto u = random_weyl(rng, n);
    const auto v = random_weyl(rng, n);
    for (int j = 0; j < n; ++j)
      for (Sign s : {Sign::Plus, Sign::Minus})
        REQUIRE(epsilon(s, j, weyl_mul(u, v)) ==
                weyl_mul(epsilon(s, j, u), epsilon(s, j, v)));
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto ed = epsilon(s, 0, dv(1, 0));
    const auto ex = epsilon(s, 0, xv(1, 0));
    CHECK(weyl_mul(ed, ex) - weyl_mul(ex, ed) == WeylElement::one(1));
  }
}

TEST_CASE("torus action on operators") {
  const GroupElement swap12({1, 0}, {0, 0}, Action::TorusPlus);
  WeylElement x1d2(2);
  x1d2.add_term({1, 0}, {0, 1}, Rational(1));
  WeylElement x2d1(2);
  x2d1.add_term({0, 1}, {1, 0}, Rational(1));
  CHECK(act_weyl(swap12, x1d2) == x2d1);

  const GroupElement flip({0}, {1}, Action::TorusMinus);
  CHECK(act_weyl(flip, dv(1, 0)) == WeylElement::monomial(1, {2}, {1}, Rational(1)));

  CHECK_THROWS_AS(act_weyl(GroupElement::identity(1, Action::Linear), dv(1, 0)),
                  UnsupportedError);
}

TEST_CASE("torus action composes as a homomorphism") {
  Rng rng(59);
  for (const GroupSpec spec : {GroupSpec{Family::B, 2}, GroupSpec{Family::D, 3}}) {
    const auto elems = enumerate_group(
        spec, spec.family == Family::B ? Action::TorusMinus : Action::TorusPlus);
    for (int t = 0; t < 60; ++t) {
      const auto g = random_group_element(rng, elems);
      const auto h = random_group_element(rng, elems);
      const auto u = random_weyl(rng, spec.n, 3, 1, 1);
      REQUIRE(act_weyl(g, act_weyl(h, u)) == act_weyl(compose(g, h), u));
    }
  }
}

TEST_CASE("inverse elements undo the action") {
  Rng rng(61);
  const auto elems = enumerate_group({Family::B, 2}, Action::TorusMinus);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_group_element(rng, elems);
    const auto u = random_weyl(rng, 2);
    REQUIRE(act_weyl(g.inverse(), act_weyl(g, u)) == u);
  }
}

TEST_CASE("multiplication operators transform like their polynomials") {
  Rng rng(67);
  const auto elems = enumerate_group({Family::B, 2}, Action::TorusMinus);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_group_element(rng, elems);
    const auto f = random_laurent(rng, 2);
    REQUIRE(act_weyl(g, WeylElement::from_laurent(f)) ==
            WeylElement::from_laurent(act(g, f)));
  }
}

TEST_CASE("averaging projects onto invariant operators") {
  // invariant input is fixed
  WeylElement sym(2);
  sym.add_term({1, 0}, {0, 1}, Rational(1));
  sym.add_term({0, 1}, {1, 0}, Rational(1));
  CHECK(reynolds_weyl(sym, {Family::S, 2}, Action::TorusPlus) == sym);

  // Euler operator averages to its symmetrization under the swap
  WeylElement euler(2);
  euler.add_term({1, 0}, {1, 0}, Rational(1));
  WeylElement want(2);
  want.add_term({1, 0}, {1, 0}, Rational(1, 2));
  want.add_term({0, 1}, {0, 1}, Rational(1, 2));
  CHECK(reynolds_weyl(euler, {Family::S, 2}, Action::TorusPlus) == want);
  CHECK(reynolds_weyl(euler, {Family::S, 2}, Action::Linear) == want);

  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    const auto u = random_weyl(rng, 2);
    const auto avg = reynolds_weyl(u, {Family::B, 2}, Action::TorusMinus);
    REQUIRE(reynolds_weyl(avg, {Family::B, 2}, Action::TorusMinus) == avg);
  }
}

TEST_CASE("clearing denominators") {
  const auto x1 = LaurentPoly<Rational>::variable(2, 0);

  // already polynomial: power zero
  WeylElement inside(2);
  inside.add_term({1, 2}, {0, 1}, Rational(3));
  const auto [k0, v0] = clear_discriminant(inside, x1, 4);
  CHECK(k0 == 0);
  CHECK(v0 == inside);

  const auto [k1, v1] = clear_discriminant(xv(2, 0, -1), x1, 4);
  CHECK(k1 == 1);
  CHECK(v1 == WeylElement::one(2));

  WeylElement u(2);
  u.add_term({-2, 0}, {1, 0}, Rational(1));
  const auto [k2, v2] = clear_discriminant(u, lp_pow(x1, 2), 4);
  CHECK(k2 == 1);
  CHECK(v2 == WeylElement::monomial(2, {0, 0}, {1, 0}, Rational(1)));

  CHECK_THROWS_AS(clear_discriminant(u, LaurentPoly<Rational>::variable(2, 0, -1), 4),
                  ShapeError);
  CHECK_THROWS_AS(clear_discriminant(u, x1, 20), RangeError);

  try {
    clear_discriminant(xv(2, 0, -3), LaurentPoly<Rational>::variable(2, 1), 2);
    FAIL("expected a clearing failure");
  } catch (const ClearingError& ex) {
    CHECK(ex.most_negative_exponent == -3);
  }
}

TEST_CASE("clearing certified on invariant operators") {
  const GroupSpec spec{Family::B, 2};
  const auto inv = skew_invariant_j(spec);
  const auto disc = inv.delta * inv.delta;  // invariant polynomial with full coordinate support
  Rng rng(73);
  int done = 0;
  while (done < 25) {
    WeylElement raw = random_weyl(rng, 2, 3, 2, 2);
    Exp down{-static_cast<int>(rng.uniform(0, 3)), -static_cast<int>(rng.uniform(0, 3))};
    const auto local =
        weyl_mul(WeylElement::monomial(2, down, {0, 0}, Rational(1)), raw);
    const auto u = reynolds_weyl(local, spec, Action::Linear);
    if (u.is_zero()) continue;
    ++done;
    const auto [k, v] = clear_discriminant_certified(u, disc, 4, spec, Action::Linear);
    REQUIRE(v.in_polynomial_algebra());
    REQUIRE(k <= 4);
    // minimality: one power less still leaves a denominator
    if (k > 0) REQUIRE_THROWS_AS(clear_discriminant(u, disc, k - 1), ClearingError);
  }
}
