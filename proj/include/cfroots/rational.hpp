#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cfroots {

/// Exact fraction num/den, always reduced with den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpz_class value) : num_(std::move(value)), den_(1) {}
  Rational(mpz_class num, mpz_class den);

  /// Parses "p" or "p/q" (decimal, optional leading '-').
  static Rational parse(std::string_view text);

  const mpz_class& num() const noexcept { return num_; }
  const mpz_class& den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_integer() const noexcept { return den_ == 1; }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  /// floor(num/den).
  mpz_class floor() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void canonicalize();

  mpz_class num_;
  mpz_class den_;
};

}  // namespace cfroots
