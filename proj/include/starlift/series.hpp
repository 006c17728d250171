#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "starlift/algebra.hpp"
#include "starlift/errors.hpp"
#include "starlift/matrix.hpp"

namespace starlift {

// Element of A0[h]/(h^N): coefficient list a_0..a_{N-1} with explicit
// precision N = coeffs.size(). Zero coefficients are stored explicitly;
// precision is never inferred or coerced.
template <class E>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<E> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw PreconditionViolation("series precision must be >= 1");
  }

  int precision() const { return static_cast<int>(c_.size()); }

  const E& coeff(int j) const {
    if (j < 0 || j >= precision())
      throw PreconditionViolation("series coefficient index out of range");
    return c_[static_cast<std::size_t>(j)];
  }

  const std::vector<E>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const E& e : c_)
      if (!e.is_zero()) return false;
    return true;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    check(o);
    std::vector<E> r;
    r.reserve(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) r.push_back(c_[j] + o.c_[j]);
    return TruncatedSeries(std::move(r));
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const {
    check(o);
    std::vector<E> r;
    r.reserve(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) r.push_back(c_[j] - o.c_[j]);
    return TruncatedSeries(std::move(r));
  }

  TruncatedSeries operator-() const {
    std::vector<E> r;
    r.reserve(c_.size());
    for (const E& e : c_) r.push_back(-e);
    return TruncatedSeries(std::move(r));
  }

  TruncatedSeries operator*(std::int64_t k) const {
    std::vector<E> r;
    r.reserve(c_.size());
    for (const E& e : c_) r.push_back(e * k);
    return TruncatedSeries(std::move(r));
  }

  bool operator==(const TruncatedSeries& o) const {
    check(o);
    return c_ == o.c_;
  }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

 private:
  void check(const TruncatedSeries& o) const {
    if (c_.size() != o.c_.size())
      throw PrecisionMismatch("series of different precisions");
  }

  std::vector<E> c_;
};

// Matrix with truncated-series entries, stored as a series with matrix
// coefficients; all entries automatically share one precision.
template <class E>
using SeriesMatrix = TruncatedSeries<SquareMatrix<E>>;

template <Algebra A>
TruncatedSeries<typename A::Element> series_zero(const A& alg, int precision) {
  return TruncatedSeries<typename A::Element>(
      std::vector<typename A::Element>(static_cast<std::size_t>(precision), alg.zero()));
}

// a0 + 0*h + ... at the requested precision.
template <Algebra A>
TruncatedSeries<typename A::Element> embed(const A& alg, const typename A::Element& a0,
                                           int precision) {
  std::vector<typename A::Element> c;
  c.reserve(static_cast<std::size_t>(precision));
  c.push_back(a0);
  for (int j = 1; j < precision; ++j) c.push_back(alg.zero());
  return TruncatedSeries<typename A::Element>(std::move(c));
}

template <Algebra A>
TruncatedSeries<typename A::Element> series_one(const A& alg, int precision) {
  return embed(alg, alg.one(), precision);
}

// Quotient map A/(h^N) -> A/(h^j): first j coefficients.
template <class E>
TruncatedSeries<E> truncate(const TruncatedSeries<E>& a, int j) {
  if (j < 1 || j > a.precision())
    throw PreconditionViolation("truncation precision out of range");
  std::vector<E> c(a.coeffs().begin(), a.coeffs().begin() + j);
  return TruncatedSeries<E>(std::move(c));
}

// e0: the classical limit, "setting h to 0".
template <class E>
const E& classical_limit(const TruncatedSeries<E>& a) {
  return a.coeff(0);
}

// Multiplication by h^j at fixed precision: coefficients shift up, the top
// ones fall off. h^N == 0, so shifting by >= N yields the zero series.
template <Algebra A>
TruncatedSeries<typename A::Element> hbar_shift(const A& alg,
                                                const TruncatedSeries<typename A::Element>& a,
                                                int j) {
  if (j < 0) throw PreconditionViolation("hbar_shift exponent must be >= 0");
  int n = a.precision();
  std::vector<typename A::Element> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    c.push_back(q < j ? alg.zero() : a.coeff(q - j));
  return TruncatedSeries<typename A::Element>(std::move(c));
}

// Pads with zero coefficients up to the target precision.
template <Algebra A>
TruncatedSeries<typename A::Element> extend_by_zero(
    const A& alg, const TruncatedSeries<typename A::Element>& a, int precision) {
  if (precision < a.precision())
    throw PreconditionViolation("extension precision below current precision");
  std::vector<typename A::Element> c = a.coeffs();
  for (int j = a.precision(); j < precision; ++j) c.push_back(alg.zero());
  return TruncatedSeries<typename A::Element>(std::move(c));
}

template <Algebra A>
TruncatedSeries<typename A::Element> scalar_mul(const A& alg,
                                                const typename A::Field::Element& c,
                                                const TruncatedSeries<typename A::Element>& a) {
  std::vector<typename A::Element> r;
  r.reserve(static_cast<std::size_t>(a.precision()));
  for (const auto& e : a.coeffs()) r.push_back(alg.scalar_mul(c, e));
  return TruncatedSeries<typename A::Element>(std::move(r));
}

// Cauchy product with the undeformed base multiplication.
template <class E>
TruncatedSeries<E> convolve(const TruncatedSeries<E>& a, const TruncatedSeries<E>& b) {
  if (a.precision() != b.precision())
    throw PrecisionMismatch("series of different precisions");
  int n = a.precision();
  std::vector<E> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    E acc = a.coeff(0) * b.coeff(q);
    for (int j = 1; j <= q; ++j) acc = acc + a.coeff(j) * b.coeff(q - j);
    c.push_back(std::move(acc));
  }
  return TruncatedSeries<E>(std::move(c));
}

// Entry (i,j) of a series matrix, viewed as a scalar series.
template <class E>
TruncatedSeries<E> entry_series(const SeriesMatrix<E>& m, int i, int j) {
  std::vector<E> c;
  c.reserve(static_cast<std::size_t>(m.precision()));
  for (const auto& mat : m.coeffs()) c.push_back(mat.at(i, j));
  return TruncatedSeries<E>(std::move(c));
}

// Assembles a series matrix from an n x n row-major grid of entry series
// sharing one precision.
template <class E>
SeriesMatrix<E> from_entry_series(int n, const std::vector<TruncatedSeries<E>>& entries) {
  if (static_cast<int>(entries.size()) != n * n)
    throw DimensionMismatch("entry series count does not match dimension");
  int prec = entries[0].precision();
  for (const auto& s : entries)
    if (s.precision() != prec) throw PrecisionMismatch("entry series precision differs");
  std::vector<SquareMatrix<E>> coeffs;
  coeffs.reserve(static_cast<std::size_t>(prec));
  for (int q = 0; q < prec; ++q) {
    std::vector<E> flat;
    flat.reserve(entries.size());
    for (const auto& s : entries) flat.push_back(s.coeff(q));
    coeffs.emplace_back(n, std::move(flat));
  }
  return SeriesMatrix<E>(std::move(coeffs));
}

}  // namespace starlift
