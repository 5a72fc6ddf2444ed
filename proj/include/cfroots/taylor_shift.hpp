#pragma once

#include <gmpxx.h>

#include "cfroots/polynomial.hpp"

namespace cfroots {

enum class ShiftAlgorithm {
  horner,  // iterated synthetic division, O(d^2) additions/addmuls
  dnc,     // split A = lo + x^m hi, shift halves, recombine with (x+c)^m
};

/// A(x + c) for c >= 0. Both algorithms return identical coefficients.
Polynomial taylor_shift(const Polynomial& a, const mpz_class& c,
                        ShiftAlgorithm algo = ShiftAlgorithm::dnc);

Polynomial taylor_shift_horner(const Polynomial& a, const mpz_class& c);
Polynomial taylor_shift_dnc(const Polynomial& a, const mpz_class& c);

namespace omp {

/// OpenMP divide-and-conquer shift: the two halves run as tasks and the
/// recombination product is split across threads. Reference: the serial
/// cfroots::taylor_shift_dnc.
Polynomial taylor_shift_dnc(const Polynomial& a, const mpz_class& c, int threads);

}  // namespace omp

}  // namespace cfroots
