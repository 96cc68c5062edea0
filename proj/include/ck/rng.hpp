#pragma once

#include <cstdint>
#include <vector>

#include "ck/scalar.hpp"

namespace ck {

/// Deterministic splitmix64 stream. Distributions are implemented by hand so
/// that a (seed, call sequence) pair yields identical values on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Small rational: numerator in [-9,9], denominator in {1,2,3}.
  Rational small_rational() {
    return rational_of(int_in(-9, 9), int_in(1, 3));
  }

  Rational nonzero_small_rational() {
    for (;;) {
      Rational q = small_rational();
      if (q != 0) return q;
    }
  }

  /// Real Gaussian rational by default; imaginary part with probability 1/4.
  Scalar small_scalar(bool allow_imaginary = false) {
    Rational re = small_rational();
    if (allow_imaginary && below(4) == 0) return Scalar(re, nonzero_small_rational());
    return Scalar(std::move(re));
  }

  Scalar nonzero_small_scalar(bool allow_imaginary = false) {
    for (;;) {
      Scalar s = small_scalar(allow_imaginary);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace ck
