#pragma once

#include <cstdint>
#include <random>

namespace starlift {

// Deterministic random source. mt19937_64 output is pinned by the standard,
// but std::uniform_int_distribution is not, so all sampling goes through the
// methods below to keep reports byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish value in [0, bound). Modulo bias is irrelevant for sampling.
  std::uint64_t below(std::uint64_t bound) { return bound ? engine_() % bound : 0; }

  // Uniform-ish integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace starlift
