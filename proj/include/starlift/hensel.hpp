#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starlift/algebra.hpp"
#include "starlift/errors.hpp"
#include "starlift/series.hpp"
#include "starlift/star.hpp"

namespace starlift {

template <Algebra A>
struct InversionCertificate {
  using Series = TruncatedSeries<typename A::Element>;
  Series input;
  Series output;
  Series residual_right;  // a * b - 1
  Series residual_left;   // b * a - 1
  int precision;

  bool ok() const { return residual_right.is_zero() && residual_left.is_zero(); }
};

// Right-seeded power-series inversion: b_0 = a_0^-1 and
//   b_q = -a_0^-1 . sum_{j+l+p=q, l<=q-1} phi_p(a_j, b_l),
// which zeroes coefficient q of a*b. Invertibility holds exactly when the
// classical limit does.
template <Algebra A>
TruncatedSeries<typename A::Element> star_invert(const StarProduct<A>& s,
                                                 const TruncatedSeries<typename A::Element>& a) {
  const A& alg = s.base();
  auto inv0 = alg.try_invert(classical_limit(a));
  if (!inv0)
    throw NotInvertibleAtClassicalLimit("series has no inverse: classical limit is singular");
  int n = a.precision();
  std::vector<typename A::Element> b;
  b.reserve(static_cast<std::size_t>(n));
  b.push_back(*inv0);
  for (int q = 1; q < n; ++q) {
    auto acc = alg.zero();
    for (int l = 0; l <= q - 1; ++l)
      for (int p = 0; p + l <= q; ++p) {
        int j = q - l - p;
        const auto& aj = a.coeff(j);
        const auto& bl = b[static_cast<std::size_t>(l)];
        if (aj.is_zero() || bl.is_zero()) continue;
        acc = acc + s.phi(p, aj, bl);
      }
    b.push_back(-(*inv0 * acc));
  }
  return TruncatedSeries<typename A::Element>(std::move(b));
}

// Left-seeded mirror recursion producing c with c*a = 1; the two inverses
// coincide (the unique two-sided inverse), which the property tests exploit.
template <Algebra A>
TruncatedSeries<typename A::Element> star_invert_left(
    const StarProduct<A>& s, const TruncatedSeries<typename A::Element>& a) {
  const A& alg = s.base();
  auto inv0 = alg.try_invert(classical_limit(a));
  if (!inv0)
    throw NotInvertibleAtClassicalLimit("series has no inverse: classical limit is singular");
  int n = a.precision();
  std::vector<typename A::Element> c;
  c.reserve(static_cast<std::size_t>(n));
  c.push_back(*inv0);
  for (int q = 1; q < n; ++q) {
    auto acc = alg.zero();
    for (int j = 0; j <= q - 1; ++j)
      for (int p = 0; p + j <= q; ++p) {
        int l = q - j - p;
        const auto& cj = c[static_cast<std::size_t>(j)];
        const auto& al = a.coeff(l);
        if (cj.is_zero() || al.is_zero()) continue;
        acc = acc + s.phi(p, cj, al);
      }
    c.push_back(-(acc * *inv0));
  }
  return TruncatedSeries<typename A::Element>(std::move(c));
}

template <Algebra A>
InversionCertificate<A> invert_certified(const StarProduct<A>& s,
                                         const TruncatedSeries<typename A::Element>& a) {
  auto b = star_invert(s, a);
  auto one = series_one(s.base(), a.precision());
  return InversionCertificate<A>{a, b, s.mul(a, b) - one, s.mul(b, a) - one, a.precision()};
}

template <Algebra A>
struct IdempotentCertificate {
  using Series = TruncatedSeries<typename A::Element>;
  typename A::Element classical;
  Series lifted;
  Series residual;  // E * E - E
  bool classical_match;
  int precision;

  bool ok() const { return residual.is_zero() && classical_match; }
};

// One Hensel step: given a at precision j+1 whose truncation to precision j
// is star-idempotent, returns a + x with x = (2a-1)^-1 * (a - a*a), which is
// star-idempotent at precision j+1 and agrees with a below h^j.
template <Algebra A>
TruncatedSeries<typename A::Element> lift_idempotent_step(
    const StarProduct<A>& s, const TruncatedSeries<typename A::Element>& a) {
  const A& alg = s.base();
  if (alg.field().characteristic() == 2)
    throw CharacteristicTwo("idempotent lifting requires 2 to be invertible (2a-1 occurs)");
  int n = a.precision();
  if (n < 2) throw PreconditionViolation("lift step needs precision >= 2");
  auto below = truncate(a, n - 1);
  if (!(s.mul(below, below) == below))
    throw PreconditionViolation("input is not star-idempotent at the lower precision");
  auto delta = a - s.mul(a, a);
  if (delta.is_zero()) return a;
  auto u = scalar_mul(alg, alg.field().from_int(2), a) - series_one(alg, n);
  auto x = s.mul(star_invert(s, u), delta);
  return a + x;
}

// Full lift by induction on precision, seeded with the classical idempotent.
template <Algebra A>
IdempotentCertificate<A> lift_idempotent(const StarProduct<A>& s, const typename A::Element& e,
                                         int target_precision) {
  const A& alg = s.base();
  if (!alg.eq(e * e, e))
    throw PreconditionViolation("classical input is not idempotent in the base algebra");
  auto a = embed(alg, e, 1);
  for (int j = 1; j < target_precision; ++j)
    a = lift_idempotent_step(s, extend_by_zero(alg, a, j + 1));
  auto residual = s.mul(a, a) - a;
  bool match = alg.eq(classical_limit(a), e);
  return IdempotentCertificate<A>{e, a, std::move(residual), match, target_precision};
}

// Extend-by-zero lift of an invertible series to higher precision; any
// extension works since invertibility only depends on the classical limit,
// and star_invert certifies the result (throwing if the limit is singular).
template <Algebra A>
TruncatedSeries<typename A::Element> lift_invertible(
    const StarProduct<A>& s, const TruncatedSeries<typename A::Element>& u,
    int target_precision) {
  if (target_precision < u.precision())
    throw PreconditionViolation("lift target precision below input precision");
  auto lifted = extend_by_zero(s.base(), u, target_precision);
  (void)star_invert(s, lifted);
  return lifted;
}

template <Algebra A>
TruncatedSeries<typename A::Element> pow_star(const StarProduct<A>& s,
                                              const TruncatedSeries<typename A::Element>& a,
                                              std::uint64_t exponent) {
  auto acc = series_one(s.base(), a.precision());
  auto base = a;
  while (exponent > 0) {
    if (exponent & 1) acc = s.mul(acc, base);
    exponent >>= 1;
    if (exponent > 0) base = s.mul(base, base);
  }
  return acc;
}

struct KernelGroupReport {
  int precision = 0;
  int samples = 0;
  int failures = 0;
  bool divisibility_checked = false;  // char 0 path
  bool torsion_checked = false;       // char p path
  std::vector<std::string> messages;

  bool passed() const { return failures == 0; }
};

// Structure checks for K = {1 + h^j m} inside precision j+1: the product law
// (1+x)*(1+y) = 1+x+y, commutativity, and either unique m-divisibility
// (char 0, m <= m_max) or p-torsion (char p).
template <Algebra A>
KernelGroupReport kernel_group_check(const StarProduct<A>& s, int j, int samples, Rng& rng,
                                     int m_max = 6) {
  const A& alg = s.base();
  int n = j + 1;
  auto one = series_one(alg, n);
  std::uint64_t character = alg.field().characteristic();
  KernelGroupReport report;
  report.precision = n;
  report.samples = samples;
  auto fail = [&report](int index, const std::string& what) {
    report.failures += 1;
    report.messages.push_back("sample " + std::to_string(index) + ": " + what);
  };
  auto kernel_element = [&](const typename A::Element& m) {
    return one + hbar_shift(alg, embed(alg, m, n), j);
  };
  for (int i = 0; i < samples; ++i) {
    auto mx = alg.sample(rng);
    auto my = alg.sample(rng);
    auto gx = kernel_element(mx);
    auto gy = kernel_element(my);
    if (!(s.mul(gx, gy) == kernel_element(mx + my))) fail(i, "(1+x)(1+y) != 1+x+y");
    if (!(s.mul(gx, gy) == s.mul(gy, gx))) fail(i, "kernel group not commutative");
    if (character == 0) {
      report.divisibility_checked = true;
      for (int m = 2; m <= m_max; ++m) {
        auto inv_m = alg.field().from_int(m).inverse();
        auto root = kernel_element(alg.scalar_mul(inv_m, mx));
        if (!(pow_star(s, root, static_cast<std::uint64_t>(m)) == gx))
          fail(i, "1+x/" + std::to_string(m) + " is not an m-th root");
        auto mw = alg.sample(rng);
        if (!alg.eq(mw, alg.scalar_mul(inv_m, mx)) &&
            pow_star(s, kernel_element(mw), static_cast<std::uint64_t>(m)) == gx)
          fail(i, "m-th root not unique at m=" + std::to_string(m));
      }
    } else {
      report.torsion_checked = true;
      if (!(pow_star(s, gx, character) == one)) fail(i, "(1+x)^p != 1");
      if (!mx.is_zero() && gx == one) fail(i, "nontrivial element collapsed to identity");
      // Order divides the prime p, so nontriviality already pins it to p;
      // the exhaustive scan below is extra evidence, affordable for small p.
      if (!mx.is_zero() && character <= 13) {
        bool early = false;
        for (std::uint64_t t = 1; t < character; ++t)
          if (pow_star(s, gx, t) == one) early = true;
        if (early) fail(i, "nontrivial element has order below p");
      }
    }
  }
  return report;
}

template <Algebra A>
struct ConjugacyCertificate {
  using Series = TruncatedSeries<typename A::Element>;
  Series left;   // E
  Series right;  // F
  Series conjugator;
  Series conjugator_inverse;
  Series residual;  // z * F * z^-1 - E
  bool classical_unit;
  int precision;

  bool ok() const { return residual.is_zero() && classical_unit; }
};

// z = E*F + (1-E)*(1-F) intertwines F into E: z*F = E*F = E*z, and its
// classical limit is 1 whenever e_0(E) = e_0(F), so z is invertible.
template <Algebra A>
ConjugacyCertificate<A> conjugate_idempotents(const StarProduct<A>& s,
                                              const TruncatedSeries<typename A::Element>& E,
                                              const TruncatedSeries<typename A::Element>& F) {
  const A& alg = s.base();
  if (E.precision() != F.precision())
    throw PrecisionMismatch("idempotents live at different precisions");
  int n = E.precision();
  if (!(s.mul(E, E) == E) || !(s.mul(F, F) == F))
    throw PreconditionViolation("conjugate_idempotents requires star-idempotent inputs");
  if (!alg.eq(classical_limit(E), classical_limit(F)))
    throw PreconditionViolation("idempotents have different classical limits");
  auto one = series_one(alg, n);
  auto z = s.mul(E, F) + s.mul(one - E, one - F);
  bool unit = alg.eq(classical_limit(z), alg.one());
  auto z_inv = star_invert(s, z);
  auto residual = s.mul(s.mul(z, F), z_inv) - E;
  return ConjugacyCertificate<A>{E, F, z, z_inv, std::move(residual), unit, n};
}

}  // namespace starlift
