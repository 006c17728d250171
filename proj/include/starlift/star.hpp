#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "starlift/algebra.hpp"
#include "starlift/errors.hpp"
#include "starlift/matrix.hpp"
#include "starlift/series.hpp"

namespace starlift {

enum class StarKind { trivial, moyal, gauge_twist, user };

inline const char* star_kind_name(StarKind k) {
  switch (k) {
    case StarKind::trivial: return "trivial";
    case StarKind::moyal: return "moyal";
    case StarKind::gauge_twist: return "gauge-twist";
    case StarKind::user: return "user";
  }
  return "?";
}

// Deformation data on a base algebra: the bilinear correction maps phi_p for
// p >= 1 (phi_0 is the base multiplication), realized as a closure, plus the
// star multiplication they induce on truncated series.
template <Algebra A>
class StarProduct {
 public:
  using Base = A;
  using Element = typename A::Element;
  using Series = TruncatedSeries<Element>;
  using PhiFn = std::function<Element(int, const Element&, const Element&)>;

  StarProduct(A base, StarKind kind, PhiFn phi)
      : base_(std::move(base)), kind_(kind), phi_(std::move(phi)) {}

  const A& base() const { return base_; }
  StarKind kind() const { return kind_; }

  Element phi(int p, const Element& a, const Element& b) const {
    if (p < 0) throw PreconditionViolation("phi order must be >= 0");
    if (p == 0) return a * b;
    return phi_(p, a, b);
  }

  // a * b on series: coefficient q is sum over j+l+p = q of phi_p(a_j, b_l).
  Series mul(const Series& a, const Series& b) const {
    if (a.precision() != b.precision())
      throw PrecisionMismatch("star product of series with different precisions");
    int n = a.precision();
    std::vector<Element> c(static_cast<std::size_t>(n), base_.zero());
    for (int j = 0; j < n; ++j) {
      const Element& aj = a.coeff(j);
      if (aj.is_zero()) continue;  // phi_p is bilinear
      for (int l = 0; j + l < n; ++l) {
        const Element& bl = b.coeff(l);
        if (bl.is_zero()) continue;
        for (int p = 0; j + l + p < n; ++p) {
          std::size_t q = static_cast<std::size_t>(j + l + p);
          c[q] = c[q] + phi(p, aj, bl);
        }
      }
    }
    return Series(std::move(c));
  }

 private:
  A base_;
  StarKind kind_;
  PhiFn phi_;
};

template <Algebra A>
typename StarProduct<A>::Series star_mul(const StarProduct<A>& s,
                                         const typename StarProduct<A>::Series& a,
                                         const typename StarProduct<A>::Series& b) {
  return s.mul(a, b);
}

// The undeformed product: all phi_p vanish and the star multiplication is the
// plain Cauchy product of series over the base algebra.
template <Algebra A>
StarProduct<A> make_trivial(A base) {
  auto zero = base.zero();
  return StarProduct<A>(std::move(base), StarKind::trivial,
                        [zero](int, const typename A::Element&,
                               const typename A::Element&) { return zero; });
}

// Lifts a star product on A to M_n(A): the correction maps apply entrywise
// inside the matrix-product sum, (phi_p(a,b))_ik = sum_j phi_p(a_ij, b_jk).
template <Algebra A>
StarProduct<MatrixAlgebra<A>> matrix_star(const StarProduct<A>& s, int n) {
  MatrixAlgebra<A> malg(s.base(), n);
  using M = typename MatrixAlgebra<A>::Element;
  auto phi = [s, n](int p, const M& a, const M& b) {
    std::vector<typename A::Element> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        auto acc = s.phi(p, a.at(i, 0), b.at(0, k));
        for (int j = 1; j < n; ++j) acc = acc + s.phi(p, a.at(i, j), b.at(j, k));
        flat.push_back(std::move(acc));
      }
    }
    return M(n, std::move(flat));
  };
  return StarProduct<MatrixAlgebra<A>>(std::move(malg), s.kind(), std::move(phi));
}

// Associativity report: exact per-sample comparison of (a*b)*c and a*(b*c)
// at the given precision. Failures carry the first differing h-coefficient;
// user-supplied phi data may simply not define a deformation.
struct AssocFailure {
  int sample_index;
  int mismatch_order;
};

struct AssocReport {
  int total = 0;
  int precision = 0;
  std::vector<AssocFailure> failures;
  bool passed() const { return failures.empty(); }
};

template <Algebra A>
AssocReport check_associativity(const StarProduct<A>& s,
                                const std::vector<std::array<typename A::Element, 3>>& samples,
                                int precision) {
  AssocReport report;
  report.total = static_cast<int>(samples.size());
  report.precision = precision;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    auto a = embed(s.base(), samples[i][0], precision);
    auto b = embed(s.base(), samples[i][1], precision);
    auto c = embed(s.base(), samples[i][2], precision);
    auto left = s.mul(s.mul(a, b), c);
    auto right = s.mul(a, s.mul(b, c));
    if (left == right) continue;
    int order = 0;
    while (left.coeff(order) == right.coeff(order)) ++order;
    report.failures.push_back({static_cast<int>(i), order});
  }
  return report;
}

template <Algebra A>
std::vector<std::array<typename A::Element, 3>> sample_triples(const A& alg, Rng& rng,
                                                               int count) {
  std::vector<std::array<typename A::Element, 3>> samples;
  samples.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    samples.push_back({alg.sample(rng), alg.sample(rng), alg.sample(rng)});
  return samples;
}

}  // namespace starlift
