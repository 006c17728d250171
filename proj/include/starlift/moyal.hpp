#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "starlift/errors.hpp"
#include "starlift/field.hpp"
#include "starlift/polynomial.hpp"
#include "starlift/star.hpp"

namespace starlift {

namespace detail {

// All exponent vectors of the given length with the given total.
inline void compositions_rec(int total, int length, Exponents& cur,
                             std::vector<Exponents>& out) {
  int pos = static_cast<int>(cur.size());
  if (pos == length - 1) {
    cur.push_back(static_cast<std::uint32_t>(total));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(static_cast<std::uint32_t>(v));
    compositions_rec(total - v, length, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Exponents> compositions(int total, int length) {
  std::vector<Exponents> out;
  Exponents cur;
  cur.reserve(static_cast<std::size_t>(length));
  compositions_rec(total, length, cur, out);
  return out;
}

}  // namespace detail

// Weyl-symmetric bidifferential coefficient of the Moyal product on
// polynomial symbols over R^{2n} (variables x_1..x_n, p_1..p_n):
//
//   phi_p(f,g) = (1/2^p) sum over alpha in N^{2n}, |alpha| = p of
//                (-1)^{|alpha_-|} / alpha!  (D^alpha f)(D^{swap(alpha)} g)
//
// where alpha_- is the momentum half of alpha and swap exchanges the x and
// p halves. This is the index-sequence sum over powers of the standard
// symplectic tensor with repetitions grouped multinomially; the 1/p!
// cancels against the sequence count. Conventions give [x,p] = hbar/ h^1
// coefficient 1, i.e. phi_1(x,p) = 1/2.
template <CoefficientField K>
typename PolynomialAlgebra<K>::Element moyal_phi(const PolynomialAlgebra<K>& base, int p,
                                                 const typename PolynomialAlgebra<K>::Element& f,
                                                 const typename PolynomialAlgebra<K>::Element& g) {
  using Element = typename PolynomialAlgebra<K>::Element;
  if (p < 0) throw PreconditionViolation("moyal_phi order must be >= 0");
  if (p == 0) return f * g;
  int n = base.dof();
  Element acc = base.zero();
  for (const Exponents& alpha : detail::compositions(p, 2 * n)) {
    Element df = derivative_multi(f, alpha);
    if (df.is_zero()) continue;
    Exponents swapped(alpha.size());
    for (int a = 0; a < n; ++a) {
      swapped[static_cast<std::size_t>(a)] = alpha[static_cast<std::size_t>(n + a)];
      swapped[static_cast<std::size_t>(n + a)] = alpha[static_cast<std::size_t>(a)];
    }
    Element dg = derivative_multi(g, swapped);
    if (dg.is_zero()) continue;
    auto denom = base.field().one();
    long minus = 0;
    for (int a = 0; a < 2 * n; ++a) {
      auto k = alpha[static_cast<std::size_t>(a)];
      if (a >= n) minus += k;
      for (std::uint32_t i = 2; i <= k; ++i)
        denom = denom * base.field().from_int(static_cast<std::int64_t>(i));
    }
    for (int i = 0; i < p; ++i) denom = denom * base.field().from_int(2);
    auto factor = denom.inverse();
    if (minus % 2 != 0) factor = -factor;
    acc = acc + base.scalar_mul(factor, df * dg);
  }
  return acc;
}

template <CoefficientField K>
StarProduct<PolynomialAlgebra<K>> make_moyal(const PolynomialAlgebra<K>& base) {
  using Element = typename PolynomialAlgebra<K>::Element;
  return StarProduct<PolynomialAlgebra<K>>(
      base, StarKind::moyal,
      [base](int p, const Element& f, const Element& g) { return moyal_phi(base, p, f, g); });
}

// Deliberately non-associative user data: phi_1(f,g) = (coefficient of x_1
// in f*g) as a constant, zero beyond order one. Not a Hochschild cocycle;
// exists so the associativity validator has something real to reject.
template <CoefficientField K>
StarProduct<PolynomialAlgebra<K>> make_projection_star(const PolynomialAlgebra<K>& base) {
  using Element = typename PolynomialAlgebra<K>::Element;
  return StarProduct<PolynomialAlgebra<K>>(
      base, StarKind::user, [base](int p, const Element& f, const Element& g) {
        if (p > 1) return base.zero();
        Exponents x1(static_cast<std::size_t>(2 * base.dof()), 0);
        x1[0] = 1;
        Element prod = f * g;
        if (const auto* c = prod.find(x1)) return base.constant(*c);
        return base.zero();
      });
}

}  // namespace starlift
