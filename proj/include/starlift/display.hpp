#pragma once

#include <string>

#include "starlift/algebra.hpp"
#include "starlift/matrix.hpp"
#include "starlift/polynomial.hpp"
#include "starlift/series.hpp"
#include "starlift/text.hpp"

namespace starlift {

template <CoefficientField K>
std::string element_text(const ScalarAlgebra<K>& alg, const typename K::Element& x) {
  return alg.field().to_string(x);
}

template <CoefficientField K>
std::string element_text(const PolynomialAlgebra<K>& alg,
                         const typename PolynomialAlgebra<K>::Element& f) {
  return polynomial_text(alg, f);
}

template <Algebra A>
std::string element_text(const MatrixAlgebra<A>& alg,
                         const typename MatrixAlgebra<A>::Element& m) {
  std::string out = "[";
  for (int i = 0; i < alg.dim(); ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < alg.dim(); ++j) {
      if (j) out += ", ";
      out += element_text(alg.entry_algebra(), m.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

// "c0 + c1 h + c2 h^2" with multi-term coefficients parenthesized.
template <Algebra A>
std::string series_text(const A& alg, const TruncatedSeries<typename A::Element>& s) {
  std::string out;
  for (int q = 0; q < s.precision(); ++q) {
    if (s.coeff(q).is_zero()) continue;
    std::string c = element_text(alg, s.coeff(q));
    if (c.find_first_of("+-") != std::string::npos && c[0] != '[') c = "(" + c + ")";
    std::string piece = q == 0 ? c : (c == "1" ? "" : c + " ");
    if (q == 1) piece += "h";
    if (q > 1) piece += "h^" + std::to_string(q);
    out += out.empty() ? piece : " + " + piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace starlift
