#pragma once

#include <optional>

#include <gmpxx.h>

#include "cfroots/rational.hpp"

namespace cfroots {

/// M(X) = (p1 X + p0) / (q1 X + q0) with nonnegative integer entries.
///
/// Along a CF tree path the columns (p1, q1) and (p0, q0) are consecutive
/// convergents P_n/Q_n and P_{n-1}/Q_{n-1} of the root being approximated, and
/// |p1 q0 - p0 q1| = 1.
struct Mobius {
  mpz_class p1 = 1;
  mpz_class p0 = 0;
  mpz_class q1 = 0;
  mpz_class q0 = 1;

  static Mobius identity() { return {}; }

  /// M(X + b).
  Mobius shifted(const mpz_class& b) const;
  /// M(1 / (1 + X)).
  Mobius unit_inverted() const;

  mpz_class determinant() const { return p1 * q0 - p0 * q1; }

  /// M(0) = p0/q0.
  Rational at_zero() const;
  /// M(inf) = p1/q1, or nullopt (infinity) when q1 = 0.
  std::optional<Rational> at_infinity() const;
  /// M(x) for x in [0, inf).
  Rational at(const Rational& x) const;

  friend bool operator==(const Mobius&, const Mobius&) = default;
};

}  // namespace cfroots
