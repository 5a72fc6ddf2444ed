#include <random>

#include "doctest.h"

#include "cfroots/errors.hpp"
#include "cfroots/polynomial.hpp"
#include "cfroots/rational.hpp"
#include "cfroots/taylor_shift.hpp"
#include "oracles.hpp"

using namespace cfroots;
using P = Polynomial;

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    Rational r(mpz_class(6), mpz_class(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(mpz_class(8), mpz_class(4)).to_string() == "2");
    CHECK(Rational::parse("-10/4") == Rational(mpz_class(-5), mpz_class(2)));
    CHECK(Rational(mpz_class(-7), mpz_class(2)).floor() == -4);
    CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), precondition_error);
    CHECK(Rational(1) < Rational(mpz_class(3), mpz_class(2)));
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("representation") {
    P a{1, 2, 0, 0};
    CHECK(a.degree() == 1);
    CHECK(P{}.degree() == -1);
    CHECK(P{0, 0}.is_zero());
    CHECK(P{-4, 1}.bitsize() == 4);  // |-4| = 100b plus sign
    CHECK(P{}.bitsize() == 0);
  }

  TEST_CASE("sign_variations") {
    CHECK(sign_variations(P{2, -3, 1}) == 2);
    CHECK(sign_variations(P{1, 0, 0, 1}) == 0);
    CHECK(sign_variations(P{-6, 11, -6, 1}) == 3);
    CHECK(sign_variations(P{-1, 0, 0, 1}) == 1);
  }

  TEST_CASE("taylor_shift examples") {
    for (auto algo : {ShiftAlgorithm::horner, ShiftAlgorithm::dnc}) {
      CHECK(taylor_shift(P{0, 0, 1}, mpz_class(1), algo) == P{1, 2, 1});
      CHECK(oracle::shift_by_binomials(P{-7, 0, 1}, mpz_class(2)) == P{-3, 4, 1});
      CHECK(taylor_shift(P{-7, 0, 1}, mpz_class(2), algo) == P{-3, 4, 1});
      P a{5, -1, 3, 9, -2};
      CHECK(taylor_shift(a, mpz_class(0), algo) == a);
    }
    CHECK_THROWS_AS(taylor_shift(P{1, 1}, mpz_class(-1)), precondition_error);
  }

  TEST_CASE("taylor_shift agrees with the binomial expansion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      int d = 1 + static_cast<int>(rng() % 40);
      P a = oracle::random_poly(rng, d, 1 + static_cast<int>(rng() % 64));
      mpz_class c(static_cast<unsigned long>(rng() % 100000));
      P expected = oracle::shift_by_binomials(a, c);
      CHECK(taylor_shift_horner(a, c) == expected);
      CHECK(taylor_shift_dnc(a, c) == expected);
    }
  }

  TEST_CASE("taylor_shift composes additively") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      P a = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 30), 40);
      mpz_class s(static_cast<unsigned long>(rng() % 5000));
      mpz_class t(static_cast<unsigned long>(rng() % 5000));
      CHECK(taylor_shift(taylor_shift(a, s), t) == taylor_shift(a, s + t));
    }
  }

  TEST_CASE("horner and divide-and-conquer are bit-identical") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
      int d = 1 + static_cast<int>(rng() % 64);
      P a = oracle::random_poly(rng, d, 1 + static_cast<int>(rng() % 128));
      mpz_class c(static_cast<unsigned long>(rng() % 65536));
      CHECK(taylor_shift_horner(a, c) == taylor_shift_dnc(a, c));
    }
  }

  TEST_CASE("OpenMP shift matches the serial reference") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 12; ++trial) {
      int d = 40 + static_cast<int>(rng() % 200);
      P a = oracle::random_poly(rng, d, 64);
      mpz_class c(static_cast<unsigned long>(1 + rng() % 1000));
      CHECK(omp::taylor_shift_dnc(a, c, 4) == taylor_shift_dnc(a, c));
    }
  }

  TEST_CASE("Budan: positive shifts never add variations") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 200; ++trial) {
      P a = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 20), 16);
      mpz_class c(static_cast<unsigned long>(1 + rng() % 50));
      CHECK(sign_variations(taylor_shift(a, c)) <= sign_variations(a));
    }
  }

  TEST_CASE("reverse") {
    CHECK(reverse(P{2, -3, 1}) == P{1, -3, 2});
    CHECK(reverse(P{5}) == P{5});
    CHECK_THROWS_AS(reverse(P{0, 1}), precondition_error);
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 50; ++trial) {
      P a = oracle::random_poly(rng, static_cast<int>(rng() % 12), 20);
      if (a[0] == 0) continue;
      CHECK(reverse(reverse(a)) == a);
    }
  }

  TEST_CASE("unit_inverse_transform") {
    P a = unit_inverse_transform(P{-2, 1});
    CHECK(a == P{-1, -2});
    CHECK(sign_variations(a) == 0);
    P b = unit_inverse_transform(P{-1, 2});
    CHECK(b == P{1, -1});
    CHECK(sign_variations(b) == 1);
    CHECK(unit_inverse_transform(P{5}) == P{5});
    CHECK_THROWS_AS(unit_inverse_transform(P{0, 1}), precondition_error);
  }

  TEST_CASE("negate_variable") { CHECK(negate_variable(P{1, 2, 3, 4}) == P{1, -2, 3, -4}); }

  TEST_CASE("derivative, gcd, square-freeness") {
    CHECK(derivative(P{5, 3, 0, 2}) == P{3, 0, 6});
    CHECK(derivative(P{7}).is_zero());
    CHECK_FALSE(is_squarefree(P{1, -2, 1}));
    CHECK(is_squarefree(P{-2, 0, 1}));
    CHECK(is_squarefree(P{0, 1}));
    CHECK(is_squarefree(P{3}));
    CHECK_FALSE(is_squarefree(P{}));
    CHECK_THROWS_AS(gcd(P{}, P{}), precondition_error);

    P f = oracle::from_roots({Rational(1), Rational(2)});
    P g = oracle::from_roots({Rational(1), Rational(3)});
    CHECK(gcd(f, g) == P{-1, 1});
    CHECK(gcd(mpz_class(6) * f, mpz_class(4) * g) == mpz_class(2) * P{-1, 1});
    CHECK(gcd(f, P{}) == f);
    CHECK(gcd(P{2, 0, 1}, P{-1, 1}) == P{1});
    // (2x - 1)^2 (x + 3)
    P h = oracle::from_roots({Rational(mpz_class(1), mpz_class(2)),
                              Rational(mpz_class(1), mpz_class(2)), Rational(-3)});
    CHECK_FALSE(is_squarefree(h));
    CHECK(gcd(h, derivative(h)) == P{-1, 2});
  }

  TEST_CASE("pseudo_remainder identity") {
    // lc(b)^(deg a - deg b + 1) a = q b + r with deg r < deg b
    P a{3, -1, 4, 1, -5, 9};
    P b{2, -6, 5};
    P r = pseudo_remainder(a, b);
    CHECK(r.degree() < b.degree());
    mpz_class lc = 625;  // 5^(5-2+1)
    // lc * a - r must be an exact multiple of b over Z.
    P lhs = lc * a - r;
    std::vector<mpz_class> rem(lhs.coeffs().begin(), lhs.coeffs().end());
    for (int i = lhs.degree(); i >= b.degree(); --i) {
      mpz_class q = rem[i] / b.leading();
      CHECK(q * b.leading() == rem[i]);
      for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b[j];
    }
    CHECK(Polynomial(rem).is_zero());
  }

  TEST_CASE("eval_sign_at_rational") {
    CHECK(eval_sign_at_rational(P{-2, 0, 1}, Rational(1)) == -1);
    CHECK(eval_sign_at_rational(P{-2, 0, 1}, Rational(mpz_class(3), mpz_class(2))) == 1);
    CHECK(eval_sign_at_rational(P{-1, 2}, Rational(mpz_class(1), mpz_class(2))) == 0);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      P a = oracle::random_poly(rng, static_cast<int>(rng() % 10), 12);
      long num = static_cast<long>(rng() % 41) - 20;
      long den = 1 + static_cast<long>(rng() % 13);
      Rational r{mpz_class(num), mpz_class(den)};
      Rational exact = oracle::eval_naive(a, r);
      CHECK(eval_sign_at_rational(a, r) == exact.sign());
      CHECK(eval_at_rational(a, r) == exact);
    }
  }

  TEST_CASE("remove_zero_roots") {
    auto s1 = remove_zero_roots(P{0, -2, 1});
    CHECK(s1.multiplicity == 1);
    CHECK(s1.quotient == P{-2, 1});
    auto s0 = remove_zero_roots(P{2, -3, 1});
    CHECK(s0.multiplicity == 0);
    CHECK(s0.quotient == P{2, -3, 1});
    auto s2 = remove_zero_roots(P{0, 0, 1});
    CHECK(s2.multiplicity == 2);
    CHECK(s2.quotient == P{1});
    CHECK_THROWS_AS(remove_zero_roots(P{}), precondition_error);
  }
}
