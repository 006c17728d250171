#include <doctest.h>

#include "starlift/polynomial.hpp"
#include "starlift/text.hpp"

using namespace starlift;

namespace {

PolynomialAlgebra<RationalField> alg1(RationalField{}, 1);
PolynomialAlgebra<RationalField> alg2(RationalField{}, 2);

}  // namespace

TEST_CASE("polynomial ring basics") {
  auto x = alg1.variable(0);
  auto p = alg1.variable(1);
  CHECK(x * p == alg1.monomial({1, 1}, Rational(1)));
  auto f = x * x + p;
  CHECK(f * alg1.one() == f);
  CHECK((x + p) * (x - p) == x * x - p * p);
  CHECK((f - f).is_zero());
  CHECK(f.degree() == 2);
  CHECK(alg1.zero().degree() == 0);
}

TEST_CASE("polynomial ring axioms on random samples") {
  Rng rng(2024);
  for (int i = 0; i < 40; ++i) {
    const auto& alg = i % 2 ? alg2 : alg1;
    auto a = alg.sample(rng);
    auto b = alg.sample(rng);
    auto c = alg.sample(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(alg.one() * a == a);
  }
}

TEST_CASE("derivatives") {
  auto x = alg1.variable(0);
  auto p = alg1.variable(1);
  CHECK(derivative(x * x, 0) == alg1.scalar_mul(Rational(2), x));
  CHECK(derivative(x * x, 1).is_zero());
  CHECK(derivative(x * x * p, 0, 2) == alg1.scalar_mul(Rational(2), p));
  CHECK(derivative_multi(x * x * p, {2, 1}) == alg1.from_int(2));
  CHECK_THROWS_AS(derivative(x, 5), VariableMismatch);
}

TEST_CASE("poisson bracket identities") {
  auto x = alg1.variable(0);
  auto p = alg1.variable(1);
  CHECK(poisson_bracket(x, p) == alg1.one());
  CHECK(poisson_bracket(x * x, p) == alg1.scalar_mul(Rational(2), x));
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    const auto& alg = i % 2 ? alg2 : alg1;
    auto f = alg.sample(rng, 4, 3);
    auto g = alg.sample(rng, 4, 3);
    auto h = alg.sample(rng, 4, 3);
    CHECK(poisson_bracket(f, f).is_zero());
    CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
    auto jacobi = poisson_bracket(f, poisson_bracket(g, h)) +
                  poisson_bracket(g, poisson_bracket(h, f)) +
                  poisson_bracket(h, poisson_bracket(f, g));
    CHECK(jacobi.is_zero());
    auto leibniz = poisson_bracket(f, g * h) - poisson_bracket(f, g) * h -
                   g * poisson_bracket(f, h);
    CHECK(leibniz.is_zero());
  }
}

TEST_CASE("units are the nonzero constants") {
  auto x = alg1.variable(0);
  CHECK(alg1.try_invert(alg1.constant(Rational(3, 2))).has_value());
  CHECK(*alg1.try_invert(alg1.constant(Rational(3, 2))) == alg1.constant(Rational(2, 3)));
  CHECK(!alg1.try_invert(x).has_value());
  CHECK(!alg1.try_invert(alg1.zero()).has_value());
  CHECK(!alg1.try_invert(alg1.one() + x).has_value());
}

TEST_CASE("text grammar parses the documented forms") {
  auto f = parse_polynomial(alg2, "3/2 x1^2 p1 - x2");
  auto expected =
      alg2.monomial({2, 0, 1, 0}, Rational(3, 2)) - alg2.variable(1);
  CHECK(f == expected);
  CHECK(parse_polynomial(alg1, "1") == alg1.one());
  CHECK(parse_polynomial(alg1, "-x1") == -alg1.variable(0));
  CHECK(parse_polynomial(alg1, "x1 x1") == alg1.monomial({2, 0}, Rational(1)));
  CHECK(parse_polynomial(alg1, "2 - 2") == alg1.zero());
  CHECK(parse_polynomial(alg1, "x1^2 p1^3") == alg1.monomial({2, 3}, Rational(1)));

  CHECK_THROWS_AS(parse_polynomial(alg1, ""), ConfigError);
  CHECK_THROWS_AS(parse_polynomial(alg1, "x3"), ConfigError);
  CHECK_THROWS_AS(parse_polynomial(alg1, "x"), ConfigError);
  CHECK_THROWS_AS(parse_polynomial(alg1, "3/"), ConfigError);
  CHECK_THROWS_AS(parse_polynomial(alg1, "y1"), ConfigError);
  CHECK_THROWS_AS(parse_polynomial(alg1, "x1 +"), ConfigError);
}

TEST_CASE("text form round-trips") {
  CHECK(polynomial_text(alg1, alg1.zero()) == "0");
  CHECK(polynomial_text(alg1, alg1.one()) == "1");
  auto x = alg1.variable(0);
  auto p = alg1.variable(1);
  CHECK(polynomial_text(alg1, x * x - p) == "x1^2 - p1");
  CHECK(polynomial_text(alg1, alg1.scalar_mul(Rational(-1, 2), x)) == "-1/2 x1");
  Rng rng(99);
  for (int i = 0; i < 60; ++i) {
    const auto& alg = i % 2 ? alg2 : alg1;
    auto f = alg.sample(rng, 4, 4);
    CHECK(parse_polynomial(alg, polynomial_text(alg, f)) == f);
  }
}
