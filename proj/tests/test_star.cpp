#include <doctest.h>

#include "starlift/gauge_twist.hpp"
#include "starlift/moyal.hpp"
#include "starlift/star.hpp"

using namespace starlift;

namespace {

using PolyQ = PolynomialAlgebra<RationalField>;
using Poly = typename PolyQ::Element;

// Independent evaluation of the star coefficient formula: for each output
// order q, sum phi_{q-j-l}(a_j, b_l) over all pairs j + l <= q. Exercises the
// same identity as StarProduct::mul through a different loop structure with
// no zero-skipping.
template <Algebra A>
TruncatedSeries<typename A::Element> oracle_mul(const StarProduct<A>& s,
                                                const TruncatedSeries<typename A::Element>& a,
                                                const TruncatedSeries<typename A::Element>& b) {
  int n = a.precision();
  std::vector<typename A::Element> c;
  for (int q = 0; q < n; ++q) {
    auto acc = s.base().zero();
    for (int j = 0; j <= q; ++j)
      for (int l = 0; j + l <= q; ++l) acc = acc + s.phi(q - j - l, a.coeff(j), b.coeff(l));
    c.push_back(std::move(acc));
  }
  return TruncatedSeries<typename A::Element>(std::move(c));
}

TruncatedSeries<Poly> random_series(const PolyQ& alg, Rng& rng, int n) {
  std::vector<Poly> c;
  for (int j = 0; j < n; ++j) c.push_back(alg.sample(rng, 2, 2));
  return TruncatedSeries<Poly>(std::move(c));
}

}  // namespace

TEST_CASE("star multiplication matches the direct coefficient sum") {
  PolyQ alg(RationalField{}, 1);
  Rng rng(101);
  std::vector<StarProduct<PolyQ>> stars;
  stars.push_back(make_trivial(alg));
  stars.push_back(make_moyal(alg));
  stars.push_back(make_gauge_twist(sample_differential_twist(alg, rng, 3)));
  for (const auto& s : stars) {
    for (int i = 0; i < 10; ++i) {
      auto a = random_series(alg, rng, 5);
      auto b = random_series(alg, rng, 5);
      CHECK(s.mul(a, b) == oracle_mul(s, a, b));
    }
  }
}

TEST_CASE("embedded one is a two-sided unit for every star") {
  PolyQ alg(RationalField{}, 2);
  Rng rng(7);
  std::vector<StarProduct<PolyQ>> stars;
  stars.push_back(make_trivial(alg));
  stars.push_back(make_moyal(alg));
  stars.push_back(make_gauge_twist(sample_differential_twist(alg, rng, 2)));
  auto one = series_one(alg, 5);
  for (const auto& s : stars) {
    for (int i = 0; i < 10; ++i) {
      auto a = random_series(alg, rng, 5);
      CHECK(s.mul(one, a) == a);
      CHECK(s.mul(a, one) == a);
    }
  }
}

TEST_CASE("phi maps are bilinear") {
  PolyQ alg(RationalField{}, 1);
  auto s = make_moyal(alg);
  Rng rng(19);
  for (int i = 0; i < 10; ++i) {
    auto a = alg.sample(rng, 3, 3);
    auto b = alg.sample(rng, 3, 3);
    auto c = alg.sample(rng, 3, 3);
    auto lambda = alg.field().from_int(rng.below(9) - 4);
    for (int p = 0; p <= 3; ++p) {
      CHECK(s.phi(p, a + b, c) == s.phi(p, a, c) + s.phi(p, b, c));
      CHECK(s.phi(p, a, b + c) == s.phi(p, a, b) + s.phi(p, a, c));
      CHECK(s.phi(p, alg.scalar_mul(lambda, a), c) == alg.scalar_mul(lambda, s.phi(p, a, c)));
      CHECK(s.phi(p, a, alg.scalar_mul(lambda, c)) == alg.scalar_mul(lambda, s.phi(p, a, c)));
    }
  }
  CHECK_THROWS_AS(s.phi(-1, alg.one(), alg.one()), PreconditionViolation);
}

TEST_CASE("matrix star over one-dimensional matrices reduces to the base star") {
  PolyQ alg(RationalField{}, 1);
  auto s = make_moyal(alg);
  auto ms = matrix_star(s, 1);
  const auto& malg = ms.base();
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    auto a = random_series(alg, rng, 4);
    auto b = random_series(alg, rng, 4);
    std::vector<TruncatedSeries<Poly>> ae{a}, be{b};
    auto prod = ms.mul(from_entry_series(1, ae), from_entry_series(1, be));
    CHECK(entry_series(prod, 0, 0) == s.mul(a, b));
  }
}

TEST_CASE("matrix star structure") {
  PolyQ alg(RationalField{}, 1);
  auto ms = matrix_star(make_moyal(alg), 2);
  const auto& malg = ms.base();
  CHECK(ms.kind() == StarKind::moyal);
  Rng rng(11);
  auto one = series_one(malg, 4);
  for (int i = 0; i < 8; ++i) {
    std::vector<typename MatrixAlgebra<PolyQ>::Element> coeffs;
    for (int q = 0; q < 4; ++q) coeffs.push_back(malg.sample(rng));
    TruncatedSeries<typename MatrixAlgebra<PolyQ>::Element> a(coeffs);
    CHECK(ms.mul(one, a) == a);
    CHECK(ms.mul(a, one) == a);
  }

  // with the trivial star, the matrix star is plain matrix convolution
  ScalarAlgebra<RationalField> sc{RationalField{}};
  auto mt = matrix_star(make_trivial(sc), 2);
  const auto& msc = mt.base();
  for (int i = 0; i < 8; ++i) {
    std::vector<SquareMatrix<Rational>> ac, bc;
    for (int q = 0; q < 3; ++q) {
      ac.push_back(msc.sample(rng));
      bc.push_back(msc.sample(rng));
    }
    SeriesMatrix<Rational> a(ac), b(bc);
    CHECK(mt.mul(a, b) == convolve(a, b));
  }
}

TEST_CASE("associativity checker accepts Weyl products and pinpoints broken data") {
  PolyQ alg(RationalField{}, 1);
  Rng rng(59);
  auto triples = sample_triples(alg, rng, 30);
  auto good = check_associativity(make_moyal(alg), triples, 4);
  CHECK(good.passed());
  CHECK(good.total == 30);

  // phi_1(f,g) = coefficient of x in fg, as a constant: bilinear but not a
  // deformation. (x*1)*1 picks up the correction twice, x*(1*1) once, so the
  // products split at the first order in h.
  auto broken = make_projection_star(alg);
  auto x = alg.variable(0);
  std::vector<std::array<Poly, 3>> bad;
  bad.push_back({x, alg.one(), alg.one()});
  auto report = check_associativity(broken, bad, 3);
  CHECK(!report.passed());
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].sample_index == 0);
  CHECK(report.failures[0].mismatch_order == 1);
}
