#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "starlift/errors.hpp"
#include "starlift/prime_field.hpp"
#include "starlift/rational.hpp"
#include "starlift/rng.hpp"

namespace starlift {

// Exact coefficient field. Elements are self-contained values with ring
// operators; the context constructs them and answers field-level questions.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& x, Rng& rng) {
  typename F::Element;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Element>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.sample(rng) } -> std::same_as<typename F::Element>;
  { f.parse(std::string{}) } -> std::same_as<typename F::Element>;
  { f.to_string(x) } -> std::same_as<std::string>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.inverse() } -> std::same_as<typename F::Element>;
  { x + x } -> std::same_as<typename F::Element>;
  { x - x } -> std::same_as<typename F::Element>;
  { x* x } -> std::same_as<typename F::Element>;
  { -x } -> std::same_as<typename F::Element>;
  { x == x } -> std::convertible_to<bool>;
};

struct RationalField {
  using Element = Rational;

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  Rational from_fraction(std::int64_t n, std::int64_t d) const { return Rational(n, d); }
  std::uint64_t characteristic() const { return 0; }

  // Small numerators and denominators keep chained exact computations fast.
  Rational sample(Rng& rng) const {
    return Rational(rng.range(-9, 9), rng.range(1, 4));
  }
  Rational sample_nonzero(Rng& rng) const {
    Rational r = sample(rng);
    return r.is_zero() ? Rational(1) : r;
  }

  Rational parse(const std::string& text) const { return Rational::parse(text); }
  std::string to_string(const Rational& x) const { return x.str(); }
  std::pair<std::string, std::string> fraction_strings(const Rational& x) const {
    return {x.numerator_str(), x.denominator_str()};
  }

  bool operator==(const RationalField&) const { return true; }
};

struct PrimeField {
  using Element = Fp;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31))
      throw PreconditionViolation("prime field modulus must fit in 31 bits");
    if (!is_prime(p)) throw PreconditionViolation("field characteristic must be prime");
  }

  std::uint64_t modulus() const { return p_; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(std::int64_t n) const { return Fp::from_int(n, p_); }
  Fp from_fraction(std::int64_t n, std::int64_t d) const {
    return from_int(n) / from_int(d);
  }
  std::uint64_t characteristic() const { return p_; }

  Fp sample(Rng& rng) const { return Fp(rng.below(p_), p_); }
  Fp sample_nonzero(Rng& rng) const { return Fp(1 + rng.below(p_ - 1), p_); }

  // Accepts "a" or "a/b" (the latter resolved as a * b^-1 mod p).
  Fp parse(const std::string& text) const;
  std::string to_string(const Fp& x) const { return x.str(); }
  std::pair<std::string, std::string> fraction_strings(const Fp& x) const {
    return {x.str(), "1"};
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_;
};

inline Fp PrimeField::parse(const std::string& text) const {
  auto parse_int = [&](const std::string& s) -> Fp {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    if (i >= s.size()) throw ConfigError("bad F_p literal: '" + text + "'");
    Fp acc = zero();
    Fp ten = from_int(10);
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ConfigError("bad F_p literal: '" + text + "'");
      acc = acc * ten + from_int(s[i] - '0');
    }
    return neg ? -acc : acc;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_int(text);
  return parse_int(text.substr(0, slash)) / parse_int(text.substr(slash + 1));
}

}  // namespace starlift
