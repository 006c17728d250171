#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "starlift/errors.hpp"

namespace starlift {

// Exact rational number with arbitrary-precision numerator and denominator,
// kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(std::int64_t n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den)
      : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw NotInvertible("rational with zero denominator");
    v_.canonicalize();
  }

  // Parses "n" or "n/d" with arbitrary-precision decimal digits.
  static Rational parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
      throw ConfigError("bad rational literal: '" + text + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  bool is_zero() const { return v_ == 0; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator*(std::int64_t k) const { return *this * Rational(k); }

  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw NotInvertible("division of rational by zero");
    return Rational(mpq_class(v_ / o.v_));
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  Rational inverse() const {
    if (is_zero()) throw NotInvertible("zero has no inverse");
    return Rational(mpq_class(1 / v_));
  }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  // Canonical text: "n" when the denominator is 1, else "n/d".
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
  }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return v_ < 0; }

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

}  // namespace starlift
