#include "cfroots/mobius.hpp"

#include "cfroots/errors.hpp"

namespace cfroots {

Mobius Mobius::shifted(const mpz_class& b) const {
  if (b == 0) return *this;
  return {p1, p1 * b + p0, q1, q1 * b + q0};
}

Mobius Mobius::unit_inverted() const { return {p0, p1 + p0, q0, q1 + q0}; }

Rational Mobius::at_zero() const {
  if (q0 == 0) {
    if (p0 == 0) throw internal_error("Mobius image 0/0 at zero");
    throw internal_error("Mobius image at zero is infinite");
  }
  return Rational(p0, q0);
}

std::optional<Rational> Mobius::at_infinity() const {
  if (q1 == 0) {
    if (p1 == 0) throw internal_error("Mobius image 0/0 at infinity");
    return std::nullopt;
  }
  return Rational(p1, q1);
}

Rational Mobius::at(const Rational& x) const {
  mpz_class num = p1 * x.num() + p0 * x.den();
  mpz_class den = q1 * x.num() + q0 * x.den();
  if (den == 0) throw internal_error("Mobius image has zero denominator");
  return Rational(std::move(num), std::move(den));
}

}  // namespace cfroots
