#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "starlift/errors.hpp"
#include "starlift/field.hpp"

namespace starlift {

// Unital associative algebra over an exact coefficient field. Elements are
// immutable values with ring operators; the context object constructs
// distinguished elements, decides invertibility and drives sampling.
template <class A>
concept Algebra = requires(const A& alg, const typename A::Element& x,
                           const typename A::Field::Element& c, Rng& rng) {
  typename A::Element;
  typename A::Field;
  requires CoefficientField<typename A::Field>;
  { A::is_field } -> std::convertible_to<bool>;
  { A::is_commutative } -> std::convertible_to<bool>;
  { alg.field() } -> std::convertible_to<typename A::Field>;
  { alg.zero() } -> std::same_as<typename A::Element>;
  { alg.one() } -> std::same_as<typename A::Element>;
  { alg.from_int(std::int64_t{}) } -> std::same_as<typename A::Element>;
  { alg.scalar_mul(c, x) } -> std::same_as<typename A::Element>;
  { alg.try_invert(x) } -> std::same_as<std::optional<typename A::Element>>;
  { alg.eq(x, x) } -> std::convertible_to<bool>;
  { alg.sample(rng) } -> std::same_as<typename A::Element>;
  { alg.sample_unit(rng) } -> std::same_as<typename A::Element>;
  { alg.describe() } -> std::convertible_to<std::string>;
  { x + x } -> std::same_as<typename A::Element>;
  { x - x } -> std::same_as<typename A::Element>;
  { x* x } -> std::same_as<typename A::Element>;
  { -x } -> std::same_as<typename A::Element>;
  { x == x } -> std::convertible_to<bool>;
  { x.is_zero() } -> std::convertible_to<bool>;
};

template <Algebra A>
typename A::Element invert(const A& alg, const typename A::Element& x) {
  auto inv = alg.try_invert(x);
  if (!inv) throw NotInvertible("element of " + alg.describe() + " is not invertible");
  return *inv;
}

// The coefficient field viewed as a one-dimensional base algebra.
template <CoefficientField K>
struct ScalarAlgebra {
  using Field = K;
  using Element = typename K::Element;
  static constexpr bool is_field = true;
  static constexpr bool is_commutative = true;

  explicit ScalarAlgebra(K field) : field_(std::move(field)) {}

  const K& field() const { return field_; }
  Element zero() const { return field_.zero(); }
  Element one() const { return field_.one(); }
  Element from_int(std::int64_t n) const { return field_.from_int(n); }
  Element scalar_mul(const Element& c, const Element& x) const { return c * x; }

  std::optional<Element> try_invert(const Element& x) const {
    if (x.is_zero()) return std::nullopt;
    return x.inverse();
  }

  bool eq(const Element& a, const Element& b) const { return a == b; }
  Element sample(Rng& rng) const { return field_.sample(rng); }
  Element sample_unit(Rng& rng) const { return field_.sample_nonzero(rng); }
  std::string describe() const { return "scalar"; }

  bool operator==(const ScalarAlgebra& o) const { return field_ == o.field_; }

 private:
  K field_;
};

}  // namespace starlift
