#include "cfroots/bounds.hpp"

#include "cfroots/errors.hpp"

namespace cfroots {

mpz_class upper_root_bound(const Polynomial& a) {
  if (a.is_zero()) throw precondition_error("upper_root_bound of the zero polynomial");
  mpz_class best = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    mpz_class v = abs(a[i]);
    if (v > best) best = v;
  }
  mpz_class lead = abs(a.leading());
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), best.get_mpz_t(), lead.get_mpz_t());
  return q + 2;
}

Rational plb_cauchy(const Polynomial& a) {
  Polynomial b = reverse(a);
  mpz_class best = 0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    mpz_class v = abs(b[i]);
    if (v > best) best = v;
  }
  mpz_class lead = abs(b.leading());
  // 1 / (1 + best/lead) = lead / (lead + best)
  return Rational(lead, lead + best);
}

LowerBound plb_exponential(const Polynomial& a, ShiftAlgorithm algo) {
  const std::size_t v = sign_variations(a);
  if (v == 0) {
    throw precondition_error("plb_exponential requires at least one sign variation");
  }
  const mpz_class cap = upper_root_bound(a);
  std::size_t shifts = 0;
  auto drops = [&](const mpz_class& t) {
    ++shifts;
    return sign_variations(taylor_shift(a, t, algo)) < v;
  };

  // Doubling phase: find (last non-dropping probe, first dropping probe].
  mpz_class lo = 0;
  mpz_class hi = 1;
  for (;;) {
    if (hi > cap) hi = cap;
    if (drops(hi)) break;
    if (hi == cap) {
      throw internal_error("no sign-variation drop up to the upper root bound");
    }
    lo = hi;
    hi *= 2;
  }

  // var(A(x+t)) is nonincreasing in t (Budan), so drop(t) is monotone.
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (drops(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi - 1, shifts};
}

}  // namespace cfroots
