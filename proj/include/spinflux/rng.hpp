#pragma once

#include <cstdint>

#include "spinflux/scalar.hpp"

namespace spinflux {

/// Deterministic generator for reproducible test data: small integers and
/// rationals with |entries| <= 9, identical across platforms.
class SmallRng {
 public:
  explicit SmallRng(std::uint64_t seed) : state_(seed * 2862933555777941757ULL + 3037000493ULL) {}

  std::uint64_t next() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ULL;
  }

  int below(int n) { return int(next() % std::uint64_t(n)); }
  int int_in(int lo, int hi) { return lo + below(hi - lo + 1); }

  Rational small_rational() { return Rational(int_in(-9, 9)); }
  Rational nonzero_small_rational() {
    int v = 0;
    while (v == 0) v = int_in(-9, 9);
    return Rational(v);
  }
  Rational small_fraction() {
    return Rational(int_in(-9, 9), int_in(1, 9));
  }

 private:
  std::uint64_t state_;
};

}  // namespace spinflux
