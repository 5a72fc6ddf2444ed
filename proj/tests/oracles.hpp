#pragma once

// Test-only reference computations, written independently of the library
// code paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "cfroots/polynomial.hpp"
#include "cfroots/rational.hpp"

namespace oracle {

using cfroots::Polynomial;
using cfroots::Rational;

// A(x + c) by direct binomial expansion: sum_i a_i sum_j C(i, j) c^(i-j) x^j.
inline Polynomial shift_by_binomials(const Polynomial& a, const mpz_class& c) {
  std::vector<mpz_class> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      mpz_class binom, cp;
      mpz_bin_uiui(binom.get_mpz_t(), i, j);
      mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), i - j);
      out[j] += a[i] * binom * cp;
    }
  }
  return Polynomial(std::move(out));
}

inline std::size_t variations(const Polynomial& a) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& c : a.coeffs()) {
    int s = sgn(c);
    if (s != 0 && prev != 0 && s != prev) ++v;
    if (s != 0) prev = s;
  }
  return v;
}

// Linear scan t = 1, 2, 3, ... for the first variation drop; returns t - 1.
inline mpz_class brute_force_plb(const Polynomial& a, unsigned long limit = 1u << 20) {
  const std::size_t v = variations(a);
  for (unsigned long t = 1; t <= limit; ++t) {
    if (variations(shift_by_binomials(a, mpz_class(t))) < v) return mpz_class(t - 1);
  }
  return -1;
}

// sum_i a_i (p/q)^i with explicit rational powers.
inline Rational eval_naive(const Polynomial& a, const Rational& r) {
  Rational acc(0);
  Rational power(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = acc + Rational(a[i]) * power;
    power = power * r;
  }
  return acc;
}

// prod (den x - num) over the given rationals.
inline Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p({1});
  for (const auto& r : roots) p = p * Polynomial(std::vector<mpz_class>{-r.num(), r.den()});
  return p;
}

// Coefficients uniform in (-2^bits, 2^bits), leading coefficient nonzero.
inline Polynomial random_poly(std::mt19937_64& rng, int degree, int bits) {
  auto draw = [&] {
    mpz_class v = 0;
    for (int done = 0; done < bits + 1; done += 32) {
      v <<= 32;
      v += static_cast<unsigned long>(rng() & 0xffffffffU);
    }
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    mpz_class range = 2 * m - 1;  // values -(m-1) .. (m-1)
    v %= range;
    return mpz_class(v - (m - 1));
  };
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = draw();
  while (c.back() == 0) c.back() = draw();
  return Polynomial(std::move(c));
}

inline Polynomial coeffs(std::initializer_list<long> c) { return Polynomial(c); }

}  // namespace oracle
