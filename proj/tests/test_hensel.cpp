#include <doctest.h>

#include "starlift/gauge_twist.hpp"
#include "starlift/hensel.hpp"
#include "starlift/moyal.hpp"

using namespace starlift;

namespace {

using ScalarQ = ScalarAlgebra<RationalField>;
using MatQ = MatrixAlgebra<ScalarQ>;
using PolyQ = PolynomialAlgebra<RationalField>;

MatQ mat2() { return MatQ(ScalarQ{RationalField{}}, 2); }

template <class A>
TruncatedSeries<typename A::Element> random_invertible(const A& alg, Rng& rng, int n) {
  std::vector<typename A::Element> c;
  c.push_back(alg.sample_unit(rng));
  for (int j = 1; j < n; ++j) c.push_back(alg.sample(rng));
  return TruncatedSeries<typename A::Element>(std::move(c));
}

}  // namespace

TEST_CASE("geometric series inversion") {
  ScalarQ alg{RationalField{}};
  auto s = make_trivial(alg);
  CHECK(star_invert(s, series_one(alg, 5)) == series_one(alg, 5));

  // (1 - h)^-1 = 1 + h + h^2 + h^3 + h^4
  TruncatedSeries<Rational> a(
      {Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0)});
  TruncatedSeries<Rational> geometric(
      {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(star_invert(s, a) == geometric);
  auto cert = invert_certified(s, a);
  CHECK(cert.ok());
  CHECK(cert.output == geometric);

  CHECK_THROWS_AS(star_invert(s, series_zero(alg, 3)), NotInvertibleAtClassicalLimit);
  TruncatedSeries<Rational> nilpotent({Rational(0), Rational(1), Rational(0)});
  CHECK_THROWS_AS(star_invert(s, nilpotent), NotInvertibleAtClassicalLimit);
  CHECK_THROWS_AS(star_invert_left(s, nilpotent), NotInvertibleAtClassicalLimit);
}

TEST_CASE("left and right recursions produce the one two-sided inverse") {
  auto alg = mat2();
  Rng rng(3);
  std::vector<StarProduct<MatQ>> stars;
  stars.push_back(make_trivial(alg));
  stars.push_back(make_gauge_twist(sample_gauge_twist(alg, rng, 2)));
  for (const auto& s : stars) {
    for (int i = 0; i < 10; ++i) {
      auto a = random_invertible(alg, rng, 6);
      auto right = star_invert(s, a);
      auto left = star_invert_left(s, a);
      CHECK(left == right);
      CHECK(invert_certified(s, a).ok());
      // inversion is an involution
      CHECK(star_invert(s, right) == a);
    }
  }
}

TEST_CASE("twist inverses factor through the coordinate change") {
  auto alg = mat2();
  Rng rng(11);
  auto twist = sample_gauge_twist(alg, rng, 3);
  auto s = make_gauge_twist(twist);
  auto trivial = make_trivial(alg);
  for (int i = 0; i < 8; ++i) {
    auto a = random_invertible(alg, rng, 5);
    // a * b = T^-1(T(a)T(b)) = 1 exactly when T(b) inverts T(a) plainly
    auto oracle = twist.apply_inverse(star_invert(trivial, twist.apply(a)));
    CHECK(star_invert(s, a) == oracle);
  }
}

TEST_CASE("inversion under the Weyl product") {
  PolyQ alg(RationalField{}, 1);
  auto s = make_moyal(alg);
  auto one_plus_hx = series_one(alg, 5) + hbar_shift(alg, embed(alg, alg.variable(0), 5), 1);
  auto cert = invert_certified(s, one_plus_hx);
  CHECK(cert.ok());
  CHECK(star_invert_left(s, one_plus_hx) == cert.output);

  Rng rng(17);
  for (int i = 0; i < 6; ++i) {
    std::vector<typename PolyQ::Element> c;
    c.push_back(alg.constant(Rational(1, 2)));  // constant units invert
    for (int j = 1; j < 5; ++j) c.push_back(alg.sample(rng, 2, 2));
    TruncatedSeries<typename PolyQ::Element> a(std::move(c));
    CHECK(invert_certified(s, a).ok());
  }

  auto x_series = embed(alg, alg.variable(0), 4);
  CHECK_THROWS_AS(star_invert(s, x_series), NotInvertibleAtClassicalLimit);
}

TEST_CASE("lift step fixes idempotents and rejects bad input") {
  auto alg = mat2();
  auto s = make_trivial(alg);
  auto e = alg.diagonal({Rational(1), Rational(0)});
  auto a = embed(alg, e, 3);
  CHECK(lift_idempotent_step(s, a) == a);  // already idempotent: delta = 0
  CHECK_THROWS_AS(lift_idempotent_step(s, embed(alg, e, 1)), PreconditionViolation);
  auto bad = embed(alg, e + alg.one(), 3);  // diag(2,1) is not idempotent
  CHECK_THROWS_AS(lift_idempotent_step(s, bad), PreconditionViolation);
}

TEST_CASE("idempotents lift through gauge twists") {
  auto alg = mat2();
  Rng rng(23);
  auto e = alg.diagonal({Rational(1), Rational(0)});
  for (int trial = 0; trial < 4; ++trial) {
    auto twist = sample_gauge_twist(alg, rng, 3);
    auto s = make_gauge_twist(twist);
    auto cert = lift_idempotent(s, e, 8);
    CHECK(cert.ok());
    CHECK(classical_limit(cert.lifted) == e);
    // every truncation is idempotent at its own precision
    for (int j = 1; j <= 8; ++j) {
      auto t = truncate(cert.lifted, j);
      CHECK(s.mul(t, t) == t);
    }
    // T^-1(e) is a second star-idempotent lift with the same classical limit
    auto other = twist.apply_inverse(embed(alg, e, 8));
    CHECK(s.mul(other, other) == other);
    auto conj = conjugate_idempotents(s, cert.lifted, other);
    CHECK(conj.ok());
  }
  CHECK_THROWS_AS(lift_idempotent(make_trivial(alg), alg.one() + alg.one(), 4),
                  PreconditionViolation);
}

TEST_CASE("lifting works over odd prime fields and fails in characteristic two") {
  PrimeField f5(5);
  MatrixAlgebra<ScalarAlgebra<PrimeField>> alg5(ScalarAlgebra<PrimeField>(f5), 2);
  Rng rng(29);
  auto s5 = make_gauge_twist(sample_gauge_twist(alg5, rng, 2));
  auto e5 = alg5.diagonal({f5.one(), f5.zero()});
  auto cert = lift_idempotent(s5, e5, 6);
  CHECK(cert.ok());

  PrimeField f2(2);
  MatrixAlgebra<ScalarAlgebra<PrimeField>> alg2(ScalarAlgebra<PrimeField>(f2), 2);
  auto s2 = make_trivial(alg2);
  auto e2 = alg2.diagonal({f2.one(), f2.zero()});
  CHECK_THROWS_AS(lift_idempotent(s2, e2, 3), CharacteristicTwo);
  CHECK_THROWS_AS(lift_idempotent_step(s2, embed(alg2, e2, 2)), CharacteristicTwo);
}

TEST_CASE("invertibles lift by zero-extension") {
  auto alg = mat2();
  Rng rng(31);
  auto s = make_gauge_twist(sample_gauge_twist(alg, rng, 2));
  auto u = random_invertible(alg, rng, 3);
  auto lifted = lift_invertible(s, u, 7);
  CHECK(lifted.precision() == 7);
  CHECK(truncate(lifted, 3) == u);
  CHECK(invert_certified(s, lifted).ok());
  CHECK_THROWS_AS(lift_invertible(s, u, 2), PreconditionViolation);
  CHECK_THROWS_AS(lift_invertible(s, series_zero(alg, 3), 5), NotInvertibleAtClassicalLimit);
}

TEST_CASE("star powers") {
  ScalarQ alg{RationalField{}};
  auto s = make_trivial(alg);
  TruncatedSeries<Rational> a({Rational(1), Rational(1), Rational(0)});
  CHECK(pow_star(s, a, 0) == series_one(alg, 3));
  CHECK(pow_star(s, a, 1) == a);
  CHECK(pow_star(s, a, 3) ==
        TruncatedSeries<Rational>({Rational(1), Rational(3), Rational(3)}));
}

TEST_CASE("kernel group structure at several depths") {
  auto alg = mat2();
  Rng rng(37);
  auto twist = sample_gauge_twist(alg, rng, 2);
  std::vector<StarProduct<MatQ>> stars;
  stars.push_back(make_trivial(alg));
  stars.push_back(make_gauge_twist(twist));
  for (const auto& s : stars) {
    for (int j = 1; j <= 3; ++j) {
      auto report = kernel_group_check(s, j, 10, rng);
      CHECK(report.passed());
      CHECK(report.divisibility_checked);
      CHECK(!report.torsion_checked);
      CHECK(report.precision == j + 1);
    }
  }

  PrimeField f5(5);
  MatrixAlgebra<ScalarAlgebra<PrimeField>> alg5(ScalarAlgebra<PrimeField>(f5), 2);
  auto s5 = make_trivial(alg5);
  for (int j = 1; j <= 3; ++j) {
    auto report = kernel_group_check(s5, j, 10, rng);
    CHECK(report.passed());
    CHECK(report.torsion_checked);
    CHECK(!report.divisibility_checked);
  }
}

TEST_CASE("kernel elements multiply additively, worked example") {
  auto alg = mat2();
  auto s = make_trivial(alg);
  // (1 + h E01)(1 + h E10) = 1 + h(E01 + E10) at precision 2
  auto gx = series_one(alg, 2) + hbar_shift(alg, embed(alg, alg.basis(0, 1), 2), 1);
  auto gy = series_one(alg, 2) + hbar_shift(alg, embed(alg, alg.basis(1, 0), 2), 1);
  auto gxy =
      series_one(alg, 2) +
      hbar_shift(alg, embed(alg, alg.basis(0, 1) + alg.basis(1, 0), 2), 1);
  CHECK(s.mul(gx, gy) == gxy);
  CHECK(s.mul(gy, gx) == gxy);
}

TEST_CASE("conjugating idempotents") {
  auto alg = mat2();
  Rng rng(41);
  auto s = make_gauge_twist(sample_gauge_twist(alg, rng, 2));
  auto e = alg.diagonal({Rational(1), Rational(0)});
  auto E = lift_idempotent(s, e, 6).lifted;

  SUBCASE("an idempotent conjugates to itself through z = 1") {
    auto cert = conjugate_idempotents(s, E, E);
    CHECK(cert.ok());
    // z = E*E + (1-E)*(1-E) = 1 for idempotent E
    CHECK(cert.conjugator == series_one(alg, 6));
  }

  SUBCASE("unit-conjugated lifts are recognized") {
    auto m = alg.sample(rng);
    auto w = series_one(alg, 6) + hbar_shift(alg, embed(alg, m, 6), 1);
    auto F = s.mul(s.mul(w, E), star_invert(s, w));
    CHECK(s.mul(F, F) == F);
    auto cert = conjugate_idempotents(s, E, F);
    CHECK(cert.ok());
    CHECK(cert.classical_unit);
    // the certificate really exhibits z*F*z^-1 = E
    auto z = cert.conjugator;
    CHECK(s.mul(s.mul(z, F), cert.conjugator_inverse) == E);
  }

  SUBCASE("inputs are validated") {
    auto zero = series_zero(alg, 6);
    CHECK_THROWS_AS(conjugate_idempotents(s, E, zero), PreconditionViolation);
    auto one_lift = series_one(alg, 6);
    CHECK_THROWS_AS(conjugate_idempotents(s, E, one_lift), PreconditionViolation);
    CHECK_THROWS_AS(conjugate_idempotents(s, E, truncate(E, 3)), PrecisionMismatch);
    auto not_idem = E + hbar_shift(alg, series_one(alg, 6), 5);
    CHECK_THROWS_AS(conjugate_idempotents(s, E, not_idem), PreconditionViolation);
  }
}
