#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starlift/algebra.hpp"
#include "starlift/field.hpp"
#include "starlift/hensel.hpp"
#include "starlift/k0lab.hpp"
#include "starlift/matrix.hpp"
#include "starlift/polynomial.hpp"
#include "starlift/series.hpp"
#include "starlift/star.hpp"

namespace starlift {

// Insertion-ordered JSON keeps report bytes stable run to run.
using Json = nlohmann::ordered_json;

template <CoefficientField K>
Json element_json(const ScalarAlgebra<K>& alg, const typename K::Element& x) {
  return Json(alg.field().to_string(x));
}

// Canonical polynomial form: grlex-sorted list of [exponents, num, den].
template <CoefficientField K>
Json element_json(const PolynomialAlgebra<K>& alg,
                  const typename PolynomialAlgebra<K>::Element& f) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : f.terms()) {
    auto [num, den] = alg.field().fraction_strings(coeff);
    Json e = Json::array();
    for (auto k : exps) e.push_back(k);
    terms.push_back(Json::array({e, num, den}));
  }
  return terms;
}

template <Algebra A>
Json element_json(const MatrixAlgebra<A>& alg, const typename MatrixAlgebra<A>::Element& m) {
  Json rows = Json::array();
  for (int i = 0; i < alg.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < alg.dim(); ++j) row.push_back(element_json(alg.entry_algebra(), m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Algebra A>
Json series_json(const A& alg, const TruncatedSeries<typename A::Element>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(element_json(alg, c));
  return Json{{"precision", s.precision()}, {"coeffs", std::move(coeffs)}};
}

template <Algebra A>
Json inversion_json(const StarProduct<A>& s, const InversionCertificate<A>& cert) {
  return Json{{"identity", "a*b = b*a = 1"},
              {"star", star_kind_name(s.kind())},
              {"precision", cert.precision},
              {"input", series_json(s.base(), cert.input)},
              {"output", series_json(s.base(), cert.output)},
              {"residual_right_zero", cert.residual_right.is_zero()},
              {"residual_left_zero", cert.residual_left.is_zero()}};
}

template <Algebra A>
Json idempotent_json(const StarProduct<A>& s, const IdempotentCertificate<A>& cert) {
  return Json{{"identity", "E*E = E and e0(E) = e"},
              {"star", star_kind_name(s.kind())},
              {"precision", cert.precision},
              {"input", element_json(s.base(), cert.classical)},
              {"lift", series_json(s.base(), cert.lifted)},
              {"residual_zero", cert.residual.is_zero()},
              {"classical_match", cert.classical_match}};
}

template <Algebra A>
Json conjugacy_json(const StarProduct<A>& s, const ConjugacyCertificate<A>& cert) {
  return Json{{"identity", "z*F*z^-1 = E with e0(z) = 1"},
              {"star", star_kind_name(s.kind())},
              {"precision", cert.precision},
              {"conjugator", series_json(s.base(), cert.conjugator)},
              {"conjugator_inverse", series_json(s.base(), cert.conjugator_inverse)},
              {"residual_zero", cert.residual.is_zero()},
              {"classical_unit", cert.classical_unit}};
}

template <Algebra A>
Json assoc_json(const StarProduct<A>& s, const AssocReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back(Json{{"sample", f.sample_index}, {"mismatch_order", f.mismatch_order}});
  return Json{{"identity", "(a*b)*c = a*(b*c)"},
              {"star", star_kind_name(s.kind())},
              {"precision", report.precision},
              {"total", report.total},
              {"failures", std::move(failures)},
              {"passed", report.passed()}};
}

inline Json kernel_json(const KernelGroupReport& report, const std::string& star) {
  Json messages = Json::array();
  for (const auto& m : report.messages) messages.push_back(m);
  return Json{{"identity", "(1+x)*(1+y) = 1+x+y on 1 + h^j M_n(A_0)"},
              {"star", star},
              {"precision", report.precision},
              {"samples", report.samples},
              {"divisibility_checked", report.divisibility_checked},
              {"torsion_checked", report.torsion_checked},
              {"failures", report.failures},
              {"messages", std::move(messages)},
              {"passed", report.passed()}};
}

template <Algebra A>
Json k0_report_json(const A& alg, const K0Report<A>& report) {
  Json entries = Json::array();
  for (const auto& entry : report.entries) {
    Json conj = Json::array();
    for (const auto& c : entry.conjugacies)
      conj.push_back(Json{{"identity", "z*F*z^-1 = E with e0(z) = 1"},
                          {"conjugator", series_json(alg, c.conjugator)},
                          {"residual_zero", c.residual.is_zero()},
                          {"classical_unit", c.classical_unit}});
    entries.push_back(Json{{"input", element_json(alg, entry.input)},
                           {"lift", series_json(alg, entry.lift.lifted)},
                           {"residual_zero", entry.lift.residual.is_zero()},
                           {"trace", alg.field().to_string(entry.trace)},
                           {"conjugacies", std::move(conj)}});
  }
  return Json{{"star", report.star},
              {"precision", report.precision},
              {"seed", report.seed},
              {"entries", std::move(entries)},
              {"summary", Json{{"passed", report.passed()}, {"failed", report.failed()}}}};
}

}  // namespace starlift
