#pragma once

#include <cstdint>
#include <string>

#include "starlift/errors.hpp"

namespace starlift {

// Element of the prime field F_p. Each value carries its modulus so that
// arithmetic stays self-contained; mixing moduli throws.
class Fp {
 public:
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  static Fp from_int(std::int64_t n, std::uint64_t p) {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const {
    check(o);
    std::uint64_t s = v_ + o.v_;
    return Fp(s >= p_ ? s - p_ : s, p_, Raw{});
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_, Raw{});
  }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, Raw{}); }
  Fp operator*(const Fp& o) const {
    check(o);
    auto prod = static_cast<unsigned __int128>(v_) * o.v_;
    return Fp(static_cast<std::uint64_t>(prod % p_), p_, Raw{});
  }
  Fp operator*(std::int64_t k) const { return *this * from_int(k, p_); }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }

  bool operator==(const Fp& o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  // Extended Euclid; throws on zero.
  Fp inverse() const {
    if (v_ == 0) throw NotInvertible("zero has no inverse in F_p");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_, Raw{});
  }

  std::string str() const { return std::to_string(v_); }

 private:
  struct Raw {};
  Fp(std::uint64_t v, std::uint64_t p, Raw) : v_(v), p_(p) {}
  void check(const Fp& o) const {
    if (p_ != o.p_) throw FieldMismatch("F_p elements with different moduli");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

}  // namespace starlift
