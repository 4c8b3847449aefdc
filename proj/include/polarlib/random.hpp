#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "polarlib/rational.hpp"

namespace polar {

/// Seeded source for all random choices (data points, poles, coordinate
/// changes). Integer draws use rejection sampling on mt19937_64 output so
/// results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream derived from (seed, stream, attempt).
  static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t attempt = 0);

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// numerator uniform in [-numBound, numBound], denominator in [1, denBound]
  Rational rational(std::int64_t numBound, std::int64_t denBound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace polar
