#include <doctest.h>

#include "starlift/field.hpp"
#include "starlift/rng.hpp"

using namespace starlift;

TEST_CASE("rationals canonicalize and round-trip") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational());
  CHECK_THROWS_AS(Rational(1, 0), NotInvertible);

  RationalField q;
  CHECK(q.parse("3/2") == Rational(3, 2));
  CHECK(q.parse("-7") == Rational(-7));
  CHECK(q.to_string(Rational(-7, 3)) == "-7/3");
  CHECK(q.to_string(Rational(5)) == "5");
  CHECK(q.parse(q.to_string(Rational(22, 7))) == Rational(22, 7));
  auto [num, den] = q.fraction_strings(Rational(-4, 6));
  CHECK(num == "-2");
  CHECK(den == "3");
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a.inverse() == Rational(3));
  CHECK_THROWS_AS(Rational().inverse(), NotInvertible);
  Rational big = Rational(1);
  for (int i = 0; i < 40; ++i) big = big * Rational(1, 2);
  for (int i = 0; i < 40; ++i) big = big * Rational(2);
  CHECK(big == Rational(1));
}

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  CHECK(f7.from_int(10) == f7.from_int(3));
  CHECK(f7.from_int(-1) == f7.from_int(6));
  for (int a = 1; a < 7; ++a) {
    auto x = f7.from_int(a);
    CHECK(x * x.inverse() == f7.one());
  }
  CHECK(f7.from_int(3) + f7.from_int(5) == f7.one());
  CHECK(f7.from_int(3) * f7.from_int(5) == f7.one());
  CHECK(-f7.from_int(2) == f7.from_int(5));
  CHECK_THROWS_AS(f7.zero().inverse(), NotInvertible);

  SUBCASE("characteristic annihilates") {
    for (int a = 0; a < 7; ++a)
      CHECK((f7.from_int(7) * f7.from_int(a)).is_zero());
  }

  SUBCASE("parse accepts fractions") {
    PrimeField f5(5);
    CHECK(f5.parse("3/2") == f5.from_int(4));
    CHECK(f5.parse("-1") == f5.from_int(4));
    CHECK_THROWS_AS(f5.parse("x"), ConfigError);
  }

  SUBCASE("moduli may not mix") {
    PrimeField f5(5);
    CHECK_THROWS_AS(f7.one() + f5.one(), FieldMismatch);
  }

  SUBCASE("composite modulus rejected") {
    CHECK_THROWS_AS(PrimeField(6), PreconditionViolation);
    CHECK_THROWS_AS(PrimeField(1), PreconditionViolation);
  }
}

TEST_CASE("rng is deterministic and bounded") {
  Rng a(123), b(123), c(124);
  bool all_equal = true;
  bool any_diff = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a.next();
    all_equal = all_equal && x == b.next();
    any_diff = any_diff || x != c.next();
  }
  CHECK(all_equal);
  CHECK(any_diff);
  Rng r(5);
  for (int i = 0; i < 200; ++i) {
    auto v = r.below(7);
    CHECK(v < 7);
    auto w = r.range(-3, 3);
    CHECK(w >= -3);
    CHECK(w <= 3);
  }
}
