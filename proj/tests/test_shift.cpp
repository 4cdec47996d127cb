#include <catch2/catch_amalgamated.hpp>

#include <noncomm/random_gen.hpp>
#include <noncomm/shift.hpp>

using namespace noncomm;

namespace {

// Shift elements with at most 4 terms, sigma-exponents in [-2, 2] and
// coefficient polynomials of degree at most 2 per variable.
ShiftElement random_shift(Rng& rng, int nvars) {
  ShiftElement u(nvars);
  const long terms = rng.uniform(1, 4);
  for (long t = 0; t < terms; ++t) {
    Exp k(static_cast<std::size_t>(nvars));
    for (auto& v : k) v = static_cast<int>(rng.uniform(-2, 2));
    LaurentPoly<Rational> poly(nvars);
    const long pterms = rng.uniform(1, 3);
    for (long s = 0; s < pterms; ++s) {
      Exp e(static_cast<std::size_t>(nvars));
      for (auto& v : e) v = static_cast<int>(rng.uniform(0, 2));
      poly.add_term(e, random_rational(rng));
    }
    if (!poly.is_zero()) u.add_term(k, poly);
  }
  return u;
}

}  // namespace

TEST_CASE("shift relation in one variable") {
  const auto t = ShiftElement::t_var(1, 0);
  const auto s = ShiftElement::sigma(1, 0);
  const auto sinv = ShiftElement::sigma(1, 0, -1);

  // sigma t = (t - 1) sigma
  ShiftElement want(1);
  want.add_term({1}, LaurentPoly<Rational>::variable(1, 0) -
                         LaurentPoly<Rational>::one(1));
  CHECK(shift_mul(s, t) == want);

  // t sigma is already in normal form
  ShiftElement ts(1);
  ts.add_term({1}, LaurentPoly<Rational>::variable(1, 0));
  CHECK(shift_mul(t, s) == ts);

  // sigma t sigma^{-1} = t - 1, so t - sigma t sigma^{-1} = 1
  const auto conj = shift_mul(shift_mul(s, t), sinv);
  CHECK(t - conj == ShiftElement::one(1));
}

TEST_CASE("sigma commutes across distinct coordinates") {
  const auto s1 = ShiftElement::sigma(2, 0);
  const auto s2 = ShiftElement::sigma(2, 1);
  const auto t2 = ShiftElement::t_var(2, 1);
  CHECK(shift_mul(s1, s2) == shift_mul(s2, s1));
  CHECK(shift_mul(s1, t2) == shift_mul(t2, s1));
}

TEST_CASE("associativity on random triples") {
  Rng rng(211);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_shift(rng, 2);
    const auto b = random_shift(rng, 2);
    const auto c = random_shift(rng, 2);
    REQUIRE(shift_mul(shift_mul(a, b), c) == shift_mul(a, shift_mul(b, c)));
  }
}

TEST_CASE("shift involution on generators") {
  const auto s = ShiftElement::sigma(1, 0);
  CHECK(epsilon_shift(Sign::Minus, Rational(0), 0, s) ==
        Rational(-1) * ShiftElement::sigma(1, 0, -1));
  CHECK(epsilon_shift(Sign::Plus, Rational(0), 0, s) == ShiftElement::sigma(1, 0, -1));

  const auto t = ShiftElement::t_var(1, 0);
  const Rational c(5, 2);
  const auto image = epsilon_shift(Sign::Minus, c, 0, t);
  ShiftElement want(1);
  want.add_term({0}, LaurentPoly<Rational>::constant(1, c) -
                         LaurentPoly<Rational>::variable(1, 0));
  CHECK(image == want);
  CHECK(epsilon_shift(Sign::Minus, c, 0, image) == t);
}

TEST_CASE("shift involution squares to the identity") {
  Rng rng(223);
  for (int t = 0; t < 200; ++t) {
    const auto u = random_shift(rng, 2);
    for (int i = 0; i < 2; ++i)
      for (Sign s : {Sign::Plus, Sign::Minus})
        for (const Rational& c : {Rational(0), Rational(2), Rational(-1, 3)})
          REQUIRE(epsilon_shift(s, c, i, epsilon_shift(s, c, i, u)) == u);
  }
}

TEST_CASE("shift involution is an automorphism") {
  Rng rng(227);
  for (int t = 0; t < 200; ++t) {
    const auto u = random_shift(rng, 2);
    const auto v = random_shift(rng, 2);
    for (Sign s : {Sign::Plus, Sign::Minus})
      REQUIRE(epsilon_shift(s, Rational(1, 2), 0, shift_mul(u, v)) ==
              shift_mul(epsilon_shift(s, Rational(1, 2), 0, u),
                        epsilon_shift(s, Rational(1, 2), 0, v)));
  }
}

TEST_CASE("images of the Weyl generators") {
  CHECK(phi(Sign::Plus, Rational(0), WeylElement::x_var(1, 0)) == ShiftElement::sigma(1, 0));
  CHECK(phi(Sign::Minus, Rational(7), WeylElement::x_var(1, 0)) == ShiftElement::sigma(1, 0));

  // phi_minus at c = 0 sends d to (t + 1) sigma^{-1} + 1 + sigma^{-2}
  ShiftElement want(1);
  want.add_term({-1}, LaurentPoly<Rational>::variable(1, 0) + LaurentPoly<Rational>::one(1));
  want += ShiftElement::one(1);
  want.add_term({-2}, LaurentPoly<Rational>::one(1));
  CHECK(phi(Sign::Minus, Rational(0), WeylElement::d_var(1, 0)) == want);
}

TEST_CASE("the canonical commutator maps to one") {
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (const Rational& c : {Rational(0), Rational(1, 2), Rational(3)}) {
      const auto px = phi(s, c, WeylElement::x_var(1, 0));
      const auto pd = phi(s, c, WeylElement::d_var(1, 0));
      CHECK(shift_mul(pd, px) - shift_mul(px, pd) == ShiftElement::one(1));
    }
}

TEST_CASE("phi is a homomorphism on random pairs") {
  Rng rng(229);
  for (int n = 1; n <= 2; ++n)
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (const Rational& c : {Rational(0), Rational(1, 2), Rational(3)})
        for (int t = 0; t < 35; ++t) {
          const auto u = random_weyl(rng, n);
          const auto v = random_weyl(rng, n);
          REQUIRE(phi(s, c, weyl_mul(u, v)) == shift_mul(phi(s, c, u), phi(s, c, v)));
        }
}

TEST_CASE("phi kills no nonzero sample") {
  Rng rng(233);
  for (int t = 0; t < 200; ++t) {
    const auto u = random_nonzero_weyl(rng, 2);
    REQUIRE_FALSE(phi(Sign::Minus, Rational(0), u).is_zero());
  }
}

TEST_CASE("generator preimages round-trip") {
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (const Rational& c : {Rational(0), Rational(1), Rational(1, 2), Rational(-3)})
      for (int i = 0; i < 2; ++i) {
        CHECK(phi(s, c, phi_inverse_sigma(s, c, 2, i)) == ShiftElement::sigma(2, i));
        CHECK(phi(s, c, phi_inverse_t(s, c, 2, i)) == ShiftElement::t_var(2, i));
      }
}

TEST_CASE("the derived t-preimage") {
  // solving phi(y) = t gives y = x d + c/2 - x +/- x^{-1}; the minus branch
  // carries -x^{-1}
  const Rational c(4);
  const auto y = phi_inverse_t(Sign::Minus, c, 1, 0);
  WeylElement want(1);
  want.add_term({1}, {1}, Rational(1));
  want.add_term({0}, {0}, Rational(2));
  want.add_term({1}, {0}, Rational(-1));
  want.add_term({-1}, {0}, Rational(-1));
  CHECK(y == want);
  const auto yplus = phi_inverse_t(Sign::Plus, c, 1, 0);
  WeylElement wantp = want;
  wantp.add_term({-1}, {0}, Rational(2));  // flip the x^{-1} coefficient to +1
  CHECK(yplus == wantp);
}

TEST_CASE("intertwining certificates") {
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (const Rational& c : {Rational(0), Rational(2)}) {
      const auto rep = verify_intertwining(s, c, 1, 100, 31);
      CHECK(rep.pass);
      CHECK(rep.generator_checks == 5);
      CHECK(rep.sample_checks == 100);
      REQUIRE(rep.failures.empty());
    }
  const auto rep2 = verify_intertwining(Sign::Minus, Rational(1, 2), 2, 25, 37);
  CHECK(rep2.pass);
  CHECK(rep2.generator_checks == 10);
}

TEST_CASE("coefficients must be ordinary polynomials") {
  ShiftElement u(1);
  LaurentPoly<Rational> bad(1);
  bad.add_term({-1}, Rational(1));
  CHECK_THROWS_AS(u.add_term({0}, bad), ShapeError);
}
