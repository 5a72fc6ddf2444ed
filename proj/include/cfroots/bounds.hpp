#pragma once

#include <cstddef>

#include <gmpxx.h>

#include "cfroots/polynomial.hpp"
#include "cfroots/rational.hpp"
#include "cfroots/taylor_shift.hpp"

namespace cfroots {

struct LowerBound {
  mpz_class value;     // b: no real root of A lies in (0, b]
  std::size_t shifts;  // Taylor shifts (probes) performed to find it
};

/// Exponential-search positive lower bound.
///
/// With drop(t) := var(A(x+t)) < var(A), probes t = 1, 2, 4, ... until the
/// first drop, then binary-searches the bracket (last non-dropping probe,
/// first dropping probe] for the smallest dropping t*. Returns b = t* - 1, so
/// var(A(x+b)) = var(A), var(A(x+b+1)) < var(A), and by Budan's theorem A has
/// no real root in (0, b].
///
/// Every probe shifts the original A by its absolute offset. Probes never
/// exceed upper_root_bound(A), where a drop is guaranteed.
///
/// Requires var(A) >= 1 (precondition_error otherwise).
LowerBound plb_exponential(const Polynomial& a, ShiftAlgorithm algo = ShiftAlgorithm::dnc);

/// Cauchy lower bound 1/U on the positive roots, with U the Cauchy bound
/// 1 + max_{i<d} |b_i|/|b_d| of B = reverse(A). Requires A(0) != 0.
Rational plb_cauchy(const Polynomial& a);

/// U = 1 + ceil(max_{i<d} |a_i| / |a_d|) + 1. Every complex root of A has
/// modulus < U - 1, so A(U) != 0. Requires A != 0.
mpz_class upper_root_bound(const Polynomial& a);

}  // namespace cfroots
