#pragma once

#include <random>
#include <vector>

#include "sos/perturb.hpp"

namespace sos::testing {

inline Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

inline Rational random_rational(std::mt19937_64& rng, long range = 1000, long max_den = 50) {
  std::uniform_int_distribution<long> n(-range, range), d(1, max_den);
  return q(n(rng), d(rng));
}

inline long random_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace sos::testing
