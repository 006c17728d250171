#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starlift/algebra.hpp"
#include "starlift/errors.hpp"
#include "starlift/hensel.hpp"
#include "starlift/matrix.hpp"
#include "starlift/polynomial.hpp"
#include "starlift/series.hpp"
#include "starlift/star.hpp"

namespace starlift {

template <CoefficientField K>
typename K::Element scalar_part(const ScalarAlgebra<K>&, const typename K::Element& e) {
  return e;
}

template <CoefficientField K>
typename K::Element scalar_part(const PolynomialAlgebra<K>& alg,
                                const typename PolynomialAlgebra<K>::Element& e) {
  if (!alg.is_constant(e))
    throw PreconditionViolation("trace of an idempotent matrix should be a constant");
  return alg.constant_term(e);
}

// Rank invariant: the trace of an idempotent matrix. Over a connected base
// the trace lands in the prime field, so it is returned as a scalar.
template <Algebra A>
typename A::Field::Element idempotent_trace(const MatrixAlgebra<A>& alg,
                                            const typename MatrixAlgebra<A>::Element& e) {
  if (!alg.eq(e * e, e)) throw PreconditionViolation("idempotent_trace requires e*e = e");
  return scalar_part(alg.entry_algebra(), e.trace());
}

// Trace as a scalar for whatever base algebra the experiment runs over;
// non-matrix bases only ever see the idempotents 0 and 1.
template <CoefficientField K>
typename K::Element trace_scalar(const ScalarAlgebra<K>& alg, const typename K::Element& e) {
  return scalar_part(alg, e);
}

template <CoefficientField K>
typename K::Element trace_scalar(const PolynomialAlgebra<K>& alg,
                                 const typename PolynomialAlgebra<K>::Element& e) {
  return scalar_part(alg, e);
}

template <Algebra A>
typename A::Field::Element trace_scalar(const MatrixAlgebra<A>& alg,
                                        const typename MatrixAlgebra<A>::Element& e) {
  return idempotent_trace(alg, e);
}

template <Algebra A>
struct K0Entry {
  typename A::Element input;
  IdempotentCertificate<A> lift;
  typename A::Field::Element trace;
  std::vector<ConjugacyCertificate<A>> conjugacies;

  bool passed() const {
    if (!lift.ok()) return false;
    for (const auto& c : conjugacies)
      if (!c.ok()) return false;
    return true;
  }
};

template <Algebra A>
struct K0Report {
  std::string star;
  int precision = 0;
  std::uint64_t seed = 0;
  std::vector<K0Entry<A>> entries;

  int passed() const {
    int n = 0;
    for (const auto& e : entries) n += e.passed() ? 1 : 0;
    return n;
  }
  int failed() const { return static_cast<int>(entries.size()) - passed(); }
  bool ok() const { return failed() == 0; }
};

// All 0/1 diagonal patterns plus seeded conjugates u d u^-1 with u sampled
// from the unit group of the matrix algebra; covers every rank and
// non-diagonal representatives of the same classes.
template <Algebra A>
std::vector<typename MatrixAlgebra<A>::Element> default_corpus(const MatrixAlgebra<A>& alg,
                                                               Rng& rng, int conjugates) {
  int n = alg.dim();
  const auto& entries = alg.entry_algebra();
  std::vector<typename MatrixAlgebra<A>::Element> out;
  std::vector<typename MatrixAlgebra<A>::Element> diagonals;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<typename A::Element> d;
    for (int i = 0; i < n; ++i)
      d.push_back((mask >> i) & 1 ? entries.one() : entries.zero());
    diagonals.push_back(alg.diagonal(d));
  }
  out = diagonals;
  for (int c = 0; c < conjugates; ++c) {
    auto u = alg.sample_unit(rng);
    auto u_inv = alg.try_invert(u);
    if (!u_inv) throw Error("unit sampler produced a singular matrix");
    const auto& d = diagonals[1 + rng.below(diagonals.size() - 1)];
    out.push_back(u * d * *u_inv);
  }
  return out;
}

// Surjectivity half: every classical idempotent lifts, certified.
template <Algebra A>
K0Report<A> surjectivity_experiment(const StarProduct<A>& s,
                                    const std::vector<typename A::Element>& idempotents, int N) {
  K0Report<A> report;
  report.star = star_kind_name(s.kind());
  report.precision = N;
  for (const auto& e : idempotents) {
    auto cert = lift_idempotent(s, e, N);
    auto tr = trace_scalar(s.base(), e);
    report.entries.push_back(K0Entry<A>{e, std::move(cert), tr, {}});
  }
  return report;
}

// Injectivity half: pairs of lifts of the same classical idempotent come
// with an explicit conjugator.
template <Algebra A>
K0Report<A> injectivity_experiment(
    const StarProduct<A>& s,
    const std::vector<std::pair<TruncatedSeries<typename A::Element>,
                                TruncatedSeries<typename A::Element>>>& pairs,
    int N) {
  K0Report<A> report;
  report.star = star_kind_name(s.kind());
  report.precision = N;
  for (const auto& [E, F] : pairs) {
    auto e = classical_limit(E);
    auto residual = s.mul(E, E) - E;
    IdempotentCertificate<A> cert{e, E, std::move(residual), true, N};
    auto tr = trace_scalar(s.base(), e);
    K0Entry<A> entry{e, std::move(cert), tr, {}};
    entry.conjugacies.push_back(conjugate_idempotents(s, E, F));
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// Full experiment: lift each corpus idempotent, then manufacture alternative
// lifts w * E * w^-1 with w = 1 + h m (invertible since its classical limit
// is 1) and certify conjugacy back to E. Deterministic given (corpus, seed).
template <Algebra A>
K0Report<A> run_k0_experiment(const StarProduct<A>& s,
                              const std::vector<typename A::Element>& corpus, int N,
                              std::uint64_t seed, int alternatives) {
  const A& alg = s.base();
  Rng rng(seed);
  K0Report<A> report;
  report.star = star_kind_name(s.kind());
  report.precision = N;
  report.seed = seed;
  for (const auto& e : corpus) {
    auto cert = lift_idempotent(s, e, N);
    auto E = cert.lifted;
    auto tr = trace_scalar(alg, e);
    K0Entry<A> entry{e, std::move(cert), tr, {}};
    if (N >= 2) {
      for (int t = 0; t < alternatives; ++t) {
        auto w = series_one(alg, N) + hbar_shift(alg, embed(alg, alg.sample(rng), N), 1);
        auto w_inv = star_invert(s, w);
        auto F = s.mul(s.mul(w, E), w_inv);
        entry.conjugacies.push_back(conjugate_idempotents(s, E, F));
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace starlift
