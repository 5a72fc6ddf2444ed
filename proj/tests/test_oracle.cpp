#include <random>
#include <set>

#include "doctest.h"

#include "cfroots/errors.hpp"
#include "cfroots/generators.hpp"
#include "cfroots/sturm.hpp"
#include "oracles.hpp"

using namespace cfroots;
using P = Polynomial;

namespace {
Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }
}  // namespace

TEST_SUITE("sturm") {
  TEST_CASE("examples") {
    P a{-2, 0, 1};
    CHECK(sturm_count(a, q(0), q(2)) == 1);
    CHECK(sturm_count(a, q(-2), q(2)) == 2);
    CHECK(sturm_count(P{1, 0, 1}, q(-10), q(10)) == 0);
    CHECK(sturm_total(P{-6, 11, -6, 1}) == 3);
    CHECK(sturm_total(P{5}) == 0);
  }

  TEST_CASE("errors") {
    P a{-1, 2};
    CHECK_THROWS_AS(sturm_count(a, q(1, 2), q(2)), precondition_error);
    CHECK_THROWS_AS(sturm_count(P{-2, 0, 1}, q(2), q(1)), precondition_error);
    CHECK_THROWS_AS(SturmSequence(P{1, -2, 1}), not_squarefree_error);
  }

  TEST_CASE("counts are additive over a split point") {
    std::mt19937_64 rng(41);
    int tested = 0;
    while (tested < 60) {
      P a = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 10), 10);
      if (!is_squarefree(a)) continue;
      Rational lo = q(-static_cast<long>(rng() % 50) - 4, 3);
      Rational hi = q(static_cast<long>(rng() % 50) + 4, 3);
      Rational mid = q(static_cast<long>(rng() % 7) - 3, 5);
      if (eval_sign_at_rational(a, lo) == 0 || eval_sign_at_rational(a, hi) == 0 ||
          eval_sign_at_rational(a, mid) == 0) {
        continue;
      }
      ++tested;
      SturmSequence s(a);
      CHECK(s.count(lo, hi) == s.count(lo, mid) + s.count(mid, hi));
    }
  }

  TEST_CASE("agrees with sign changes on a dense grid") {
    // Roots on the half-integers in [-6, 6] plus an irreducible quadratic; the
    // grid (2m+1)/8 never hits a root and puts at most one root per cell.
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      std::set<long> halves;
      const std::size_t k = 1 + rng() % 4;
      while (halves.size() < k) halves.insert(static_cast<long>(rng() % 25) - 12);
      std::vector<Rational> roots;
      for (long h : halves) roots.push_back(q(h, 2));
      P a = oracle::from_roots(roots) * P{1 + static_cast<long>(rng() % 5), 0, 1};
      REQUIRE(a.degree() <= 6);

      std::vector<Rational> grid;
      for (long m = -60; m <= 60; ++m) grid.push_back(q(2 * m + 1, 8));
      std::vector<int> signs;
      for (const auto& g : grid) signs.push_back(oracle::eval_naive(a, g).sign());

      SturmSequence s(a);
      for (int probe = 0; probe < 10; ++probe) {
        std::size_t i = rng() % grid.size();
        std::size_t j = rng() % grid.size();
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        std::size_t changes = 0;
        for (std::size_t t = i; t < j; ++t) changes += signs[t] != signs[t + 1] ? 1 : 0;
        CHECK(s.count(grid[i], grid[j]) == changes);
      }
    }
  }
}

TEST_SUITE("verify_isolation") {
  TEST_CASE("examples") {
    P a{-2, 0, 1};
    auto ok = verify_isolation(a, {RootInterval{q(-4), q(0)}, RootInterval{q(0), q(4)}});
    CHECK(ok.ok);

    auto overlap = verify_isolation(a, {RootInterval{q(0), q(4)}, RootInterval{q(1), q(3)}});
    CHECK_FALSE(overlap.ok);
    bool saw_overlap = false;
    for (const auto& f : overlap.failures) saw_overlap |= f.kind == FailureKind::overlap;
    CHECK(saw_overlap);

    auto missing = verify_isolation(a, {RootInterval{q(0), q(4)}});
    CHECK_FALSE(missing.ok);
    REQUIRE(missing.failures.size() == 1);
    CHECK(missing.failures[0].kind == FailureKind::total_mismatch);
  }

  TEST_CASE("other failure kinds") {
    P a = oracle::from_roots({q(1), q(2)});
    auto has = [](const VerifyReport& r, FailureKind k) {
      for (const auto& f : r.failures) {
        if (f.kind == k) return true;
      }
      return false;
    };
    CHECK(has(verify_isolation(a, {ExactRoot{q(1)}, ExactRoot{q(3)}}), FailureKind::exact_not_root));
    CHECK(has(verify_isolation(a, {RootInterval{q(0), q(3)}}), FailureKind::interval_count));
    CHECK(has(verify_isolation(a, {RootInterval{q(1), q(3, 2)}, ExactRoot{q(2)}}),
              FailureKind::endpoint_is_root));
    CHECK(has(verify_isolation(a, {ExactRoot{q(2)}, ExactRoot{q(1)}}), FailureKind::unsorted));
    CHECK(has(verify_isolation(a, {ExactRoot{q(1)}, ExactRoot{q(1)}, ExactRoot{q(2)}}),
              FailureKind::overlap));
    CHECK(has(verify_isolation(a, {RootInterval{q(3, 2), q(1, 2)}, ExactRoot{q(2)}}),
              FailureKind::bad_interval));
    CHECK(verify_isolation(a, {ExactRoot{q(1)}, RootInterval{q(3, 2), q(5, 2)}}).ok);
  }
}

TEST_SUITE("generators") {
  TEST_CASE("mignotte") {
    CHECK(mignotte(4, 2) == P{-2, 8, -8, 0, 1});
    CHECK(mignotte(3, 1) == P{-2, 4, -2, 1});
    CHECK(mignotte(5, 3) == P{-2, 12, -18, 0, 0, 1});
    CHECK_THROWS_AS(mignotte(2, 4), precondition_error);
    CHECK_THROWS_AS(mignotte(5, 0), precondition_error);
    for (int d : {3, 4, 5, 8, 12, 16}) {
      for (long a : {2L, 10L, 256L}) CHECK(is_squarefree(mignotte(d, a)));
    }
  }

  TEST_CASE("random_squarefree contract") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      int d = 1 + static_cast<int>(seed % 20);
      int tau = 1 + static_cast<int>(seed % 40);
      P a = random_squarefree(d, tau, seed);
      CHECK(a.degree() == d);
      CHECK(a.bitsize() <= static_cast<std::size_t>(tau) + 1);
      CHECK(is_squarefree(a));
      CHECK(random_squarefree(d, tau, seed) == a);
    }
    CHECK(random_squarefree(10, 30, 1) != random_squarefree(10, 30, 2));
  }
}
