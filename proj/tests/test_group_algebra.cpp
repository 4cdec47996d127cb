#include <catch2/catch_amalgamated.hpp>

#include <noncomm/group_algebra.hpp>

using namespace noncomm;

TEST_CASE("order-two idempotents are the classical pair") {
  const auto es = idempotents(2);  // construction certifies orthogonality and completeness
  REQUIRE(es.size() == 2);
  const Rational half(1, 2);
  CHECK(es[0].coeff(0).rational_part() == half);
  CHECK(es[0].coeff(1).rational_part() == half);
  CHECK(es[1].coeff(0).rational_part() == half);
  CHECK(es[1].coeff(1).rational_part() == -half);
  CHECK(es[0] * es[1] == CyclicAlgebraElement(2));
  CHECK(es[0] + es[1] == CyclicAlgebraElement::identity(2));
}

TEST_CASE("order-four idempotent against an explicit convolution") {
  const auto es = idempotents(4);
  const CycloNum i4 = CycloNum::zeta(4);
  const CycloNum quarter(Rational(1, 4), 4);

  // e_1 = (1 - i g - g^2 + i g^3) / 4
  CHECK(es[1].coeff(0) == quarter);
  CHECK(es[1].coeff(1) == -(quarter * i4));
  CHECK(es[1].coeff(2) == -quarter);
  CHECK(es[1].coeff(3) == quarter * i4);

  // independent convolution: square the coefficient vector by hand
  std::vector<CycloNum> squared(4, CycloNum(Rational(0), 4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      squared[static_cast<std::size_t>((a + b) % 4)] += es[1].coeff(a) * es[1].coeff(b);
  for (int j = 0; j < 4; ++j) REQUIRE(squared[static_cast<std::size_t>(j)] == es[1].coeff(j));
}

TEST_CASE("orthogonality, completeness, and characters through order twelve") {
  for (int m = 2; m <= 12; ++m) {
    const auto es = idempotents(m);
    const auto g = CyclicAlgebraElement::generator_power(m, 1, CycloNum(Rational(1), m));
    for (int i = 0; i < m; ++i) {
      REQUIRE(g * es[static_cast<std::size_t>(i)] ==
              CycloNum::zeta(m, i) * es[static_cast<std::size_t>(i)]);
    }
  }
  CHECK_THROWS_AS(idempotents(1), RangeError);
  CHECK_THROWS_AS(idempotents(25), RangeError);
}

TEST_CASE("symmetrizer of the rank-two symmetric group") {
  const auto e = symmetrizer({Family::S, 2});  // construction certifies idempotency
  REQUIRE(e.size() == 2);
  for (const auto& [w, c] : e) CHECK(c == Rational(1, 2));
  CHECK(convolve(e, e) == e);
}

TEST_CASE("symmetrizer of the rank-two hyperoctahedral group") {
  const auto e = symmetrizer({Family::B, 2});
  REQUIRE(e.size() == 8);
  CHECK(convolve(e, e) == e);
  for (const auto& [w, c] : e) {
    ReflectionAlgebraElement left{{w, Rational(1)}};
    REQUIRE(convolve(left, e) == e);
  }
}

TEST_CASE("symmetrizer of the trivial group") {
  const auto e = symmetrizer({Family::S, 1});
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->second == Rational(1));
  CHECK(e.begin()->first.is_identity());
}

TEST_CASE("mixed cyclic orders are rejected") {
  CHECK_THROWS_AS(CyclicAlgebraElement(3) + CyclicAlgebraElement(4), ShapeError);
}
