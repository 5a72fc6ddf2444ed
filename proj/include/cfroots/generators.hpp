#pragma once

#include <cstdint>

#include "cfroots/polynomial.hpp"

namespace cfroots {

/// x^d - 2(a x - 1)^2. Requires d >= 3, a >= 2 (a = 1 is also accepted).
Polynomial mignotte(int d, long a);

/// Degree-d polynomial with coefficients uniform in (-2^tau, 2^tau), nonzero
/// leading coefficient, resampled until square-free. Deterministic in seed.
Polynomial random_squarefree(int d, int tau, std::uint64_t seed);

}  // namespace cfroots
