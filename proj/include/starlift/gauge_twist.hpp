#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "starlift/algebra.hpp"
#include "starlift/errors.hpp"
#include "starlift/polynomial.hpp"
#include "starlift/series.hpp"
#include "starlift/star.hpp"

namespace starlift {

// Invertible change of coordinates T = id + sum_k h^k T_k acting
// coefficientwise on series, with T_k : A0 -> A0 linear and T_k(1) = 0.
// The induced product a * b = T^-1(T(a) . T(b)) is associative by
// construction, which makes this family a test oracle for the generic
// star-product machinery.
template <Algebra A>
class GaugeTwist {
 public:
  using Element = typename A::Element;
  using Series = TruncatedSeries<Element>;
  using LinearMap = std::function<Element(const Element&)>;

  // maps[k-1] is T_k; T_k = 0 beyond the supplied list. Rejects maps that
  // move the unit, since those would break the two-sided star-unit law.
  GaugeTwist(A base, std::vector<LinearMap> maps)
      : base_(std::move(base)), maps_(std::move(maps)) {
    for (std::size_t k = 0; k < maps_.size(); ++k) {
      if (!maps_[k](base_.one()).is_zero())
        throw PreconditionViolation("gauge twist map T_" + std::to_string(k + 1) +
                                    " does not annihilate the unit");
    }
  }

  const A& base() const { return base_; }
  int order() const { return static_cast<int>(maps_.size()); }

  // T_k for k >= 1, zero beyond the stored maps.
  Element apply_map(int k, const Element& a) const {
    if (k < 1) throw PreconditionViolation("twist map index must be >= 1");
    if (k > order()) return base_.zero();
    return maps_[static_cast<std::size_t>(k - 1)](a);
  }

  // T(a)_q = a_q + sum_{k=1..q} T_k(a_{q-k}).
  Series apply(const Series& a) const {
    int n = a.precision();
    std::vector<Element> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      Element acc = a.coeff(q);
      for (int k = 1; k <= q && k <= order(); ++k)
        acc = acc + apply_map(k, a.coeff(q - k));
      c.push_back(std::move(acc));
    }
    return Series(std::move(c));
  }

  // Solves T(d) = c by the triangular recursion d_q = c_q - sum T_k(d_{q-k});
  // the same recursion shape as series inversion, possible because the
  // constant term of T is the identity.
  Series apply_inverse(const Series& c) const {
    int n = c.precision();
    std::vector<Element> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      Element acc = c.coeff(q);
      for (int k = 1; k <= q && k <= order(); ++k)
        acc = acc - apply_map(k, d[static_cast<std::size_t>(q - k)]);
      d.push_back(std::move(acc));
    }
    return Series(std::move(d));
  }

  // The defining route: a * b = T^-1(T(a) . T(b)).
  Series direct_mul(const Series& a, const Series& b) const {
    return apply_inverse(convolve(apply(a), apply(b)));
  }

  // phi_p read off from the direct route on base elements.
  Element phi(int p, const Element& a, const Element& b) const {
    auto product = direct_mul(embed(base_, a, p + 1), embed(base_, b, p + 1));
    return product.coeff(p);
  }

 private:
  A base_;
  std::vector<LinearMap> maps_;
};

template <Algebra A>
StarProduct<A> make_gauge_twist(const GaugeTwist<A>& twist) {
  return StarProduct<A>(twist.base(), StarKind::gauge_twist,
                        [twist](int p, const typename A::Element& a,
                                const typename A::Element& b) { return twist.phi(p, a, b); });
}

// Entrywise lift of a twist to M_n(A); yields the same matrix star product
// as lifting the induced phi maps entrywise.
template <Algebra A>
GaugeTwist<MatrixAlgebra<A>> lift_entrywise(const GaugeTwist<A>& twist, int n) {
  using M = typename MatrixAlgebra<A>::Element;
  std::vector<typename GaugeTwist<MatrixAlgebra<A>>::LinearMap> maps;
  for (int k = 1; k <= twist.order(); ++k) {
    maps.push_back([twist, k, n](const M& m) {
      M r = m;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = twist.apply_map(k, m.at(i, j));
      return r;
    });
  }
  return GaugeTwist<MatrixAlgebra<A>>(MatrixAlgebra<A>(twist.base(), n), std::move(maps));
}

// Random twists for experiments. Matrix bases get commutator-style sandwich
// pairs a -> P a Q - PQ a, which annihilate the unit identically; commutative
// bases would get zero from that shape, so polynomial algebras use
// differential terms instead (see sample_differential_twist).
template <Algebra A>
GaugeTwist<A> sample_gauge_twist(const A& base, Rng& rng, int order) {
  using Element = typename A::Element;
  std::vector<typename GaugeTwist<A>::LinearMap> maps;
  for (int k = 0; k < order; ++k) {
    Element p = base.sample(rng);
    Element q = base.sample(rng);
    Element pq = p * q;
    maps.push_back([p, q, pq](const Element& a) { return p * a * q - pq * a; });
  }
  return GaugeTwist<A>(base, std::move(maps));
}

// T_k(f) = sum of c * m * D^alpha f with |alpha| >= 1, so T_k(1) = 0 holds
// automatically. Coefficient polynomials stay low-degree to keep products
// cheap at high precision.
template <CoefficientField K>
GaugeTwist<PolynomialAlgebra<K>> sample_differential_twist(const PolynomialAlgebra<K>& base,
                                                           Rng& rng, int order) {
  using Element = typename PolynomialAlgebra<K>::Element;
  int vars = 2 * base.dof();
  std::vector<typename GaugeTwist<PolynomialAlgebra<K>>::LinearMap> maps;
  for (int k = 0; k < order; ++k) {
    int terms = 1 + static_cast<int>(rng.below(2));
    std::vector<std::pair<Element, Exponents>> pieces;
    for (int t = 0; t < terms; ++t) {
      Exponents alpha(static_cast<std::size_t>(vars), 0);
      int derivs = 1 + static_cast<int>(rng.below(2));
      for (int d = 0; d < derivs; ++d)
        alpha[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(vars)))] += 1;
      Element coeff = base.sample(rng, 1, 2);
      pieces.emplace_back(std::move(coeff), std::move(alpha));
    }
    maps.push_back([base, pieces](const Element& f) {
      Element acc = base.zero();
      for (const auto& [c, alpha] : pieces) acc = acc + c * derivative_multi(f, alpha);
      return acc;
    });
  }
  return GaugeTwist<PolynomialAlgebra<K>>(base, std::move(maps));
}

}  // namespace starlift
