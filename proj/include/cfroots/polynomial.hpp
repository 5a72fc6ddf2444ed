#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cfroots/rational.hpp"

namespace cfroots {

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i.
///
/// Trailing zero coefficients are stripped on construction, so the leading
/// coefficient is nonzero unless the polynomial is identically zero (which is
/// stored as an empty coefficient vector and has degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial monomial(std::size_t degree, mpz_class coeff = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Max over coefficients of bit length plus one sign bit; 0 for the zero
  /// polynomial.
  std::size_t bitsize() const;

  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
  const mpz_class& leading() const { return coeffs_.back(); }
  /// A(0); zero for the zero polynomial.
  mpz_class constant_term() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.front(); }

  /// Moves the coefficients out, leaving the polynomial zero.
  std::vector<mpz_class> release() && { return std::move(coeffs_); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const mpz_class& k, const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Number of sign changes in the coefficient sequence, zeros skipped.
std::size_t sign_variations(const Polynomial& a);
std::size_t sign_variations(std::span<const mpz_class> coeffs);

/// x^d * A(1/x). Requires A(0) != 0 so the degree is preserved.
Polynomial reverse(const Polynomial& a);

/// (1+x)^d * A(1/(1+x)), i.e. taylor_shift(reverse(A), 1). Positive roots of
/// the result correspond to roots of A in (0, 1) under x -> 1/(1+x).
Polynomial unit_inverse_transform(const Polynomial& a);

/// A(-x).
Polynomial negate_variable(const Polynomial& a);

Polynomial derivative(const Polynomial& a);

/// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
mpz_class content(const Polynomial& a);

/// A / content(A), with positive leading coefficient.
Polynomial primitive_part(const Polynomial& a);

/// lc(b)^(deg a - deg b + 1) * a  mod  b, computed over Z. Requires b != 0.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor over Z via the primitive PRS: the result has a
/// positive leading coefficient and content gcd(content(a), content(b)).
/// gcd(0, 0) throws precondition_error.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// deg gcd(A, A') == 0. The zero polynomial is not square-free.
bool is_squarefree(const Polynomial& a);

/// Sign of A(r), computed as the sign of q^d * A(p/q) in integer arithmetic.
int eval_sign_at_rational(const Polynomial& a, const Rational& r);

/// Exact value A(r).
Rational eval_at_rational(const Polynomial& a, const Rational& r);

struct ZeroRootSplit {
  std::size_t multiplicity;
  Polynomial quotient;
};

/// Strips the factor x^k from A with k maximal. Throws precondition_error on
/// the zero polynomial.
ZeroRootSplit remove_zero_roots(const Polynomial& a);

/// Bit length of |v| (0 for v = 0).
std::size_t bit_length(const mpz_class& v);

}  // namespace cfroots
