#include "cfroots/polynomial.hpp"

#include <algorithm>

#include "cfroots/errors.hpp"
#include "cfroots/taylor_shift.hpp"

namespace cfroots {

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(std::size_t degree, mpz_class coeff) {
  std::vector<mpz_class> c(degree + 1);
  c[degree] = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t Polynomial::bitsize() const {
  std::size_t best = 0;
  for (const auto& c : coeffs_) best = std::max(best, bit_length(c) + 1);
  return best;
}

Polynomial Polynomial::operator-() const {
  std::vector<mpz_class> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& big = a.size() >= b.size() ? a.coeffs_ : b.coeffs_;
  const auto& small = a.size() >= b.size() ? b.coeffs_ : a.coeffs_;
  std::vector<mpz_class> c(big);
  for (std::size_t i = 0; i < small.size(); ++i) c[i] += small[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const mpz_class& k, const Polynomial& a) {
  std::vector<mpz_class> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coeffs_[i];
  return Polynomial(std::move(c));
}

std::size_t sign_variations(std::span<const mpz_class> coeffs) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

std::size_t sign_variations(const Polynomial& a) { return sign_variations(a.coeffs()); }

Polynomial reverse(const Polynomial& a) {
  if (a.is_zero() || a[0] == 0) {
    throw precondition_error("reverse requires a nonzero constant coefficient");
  }
  std::vector<mpz_class> c(a.coeffs().rbegin(), a.coeffs().rend());
  return Polynomial(std::move(c));
}

Polynomial unit_inverse_transform(const Polynomial& a) {
  return taylor_shift(reverse(a), mpz_class(1));
}

Polynomial negate_variable(const Polynomial& a) {
  std::vector<mpz_class> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& a) {
  if (a.size() <= 1) return {};
  std::vector<mpz_class> c(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) c[i - 1] = a[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(c));
}

mpz_class content(const Polynomial& a) {
  mpz_class g = 0;
  for (const auto& c : a.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& a) {
  if (a.is_zero()) return a;
  mpz_class g = content(a);
  if (sgn(a.leading()) < 0) g = -g;
  std::vector<mpz_class> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(c[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  }
  return Polynomial(std::move(c));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw precondition_error("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const int delta = a.degree() - db;
  const mpz_class& lb = b.leading();
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  int steps = 0;
  int top = static_cast<int>(r.size()) - 1;
  while (top >= db) {
    if (r[top] == 0) {
      --top;
      continue;
    }
    // r <- lb * r - r[top] * x^(top-db) * b
    mpz_class lr = r[top];
    for (int i = 0; i <= top; ++i) r[i] *= lb;
    for (int j = 0; j <= db; ++j) r[top - db + j] -= lr * b[j];
    ++steps;
    --top;
  }
  r.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
  for (auto& c : r) c *= scale;
  return Polynomial(std::move(r));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw precondition_error("gcd(0, 0) is undefined");
  mpz_class cg;
  {
    mpz_class ca = content(a), cb = content(b);
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  Polynomial u = primitive_part(a);
  Polynomial v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) return Polynomial(std::vector<mpz_class>{cg});
    Polynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return cg * u;
}

bool is_squarefree(const Polynomial& a) {
  if (a.is_zero()) return false;
  if (a.degree() <= 0) return true;
  return gcd(a, derivative(a)).degree() == 0;
}

namespace {

// q^d * A(p/q) for r = p/q, d = deg A.
mpz_class homogeneous_value(const Polynomial& a, const Rational& r) {
  if (a.is_zero()) return 0;
  const mpz_class& p = r.num();
  const mpz_class& q = r.den();
  mpz_class acc = a.leading();
  mpz_class qpow = 1;
  for (int i = a.degree() - 1; i >= 0; --i) {
    qpow *= q;
    acc *= p;
    mpz_addmul(acc.get_mpz_t(), a[static_cast<std::size_t>(i)].get_mpz_t(), qpow.get_mpz_t());
  }
  return acc;
}

}  // namespace

int eval_sign_at_rational(const Polynomial& a, const Rational& r) {
  return sgn(homogeneous_value(a, r));
}

Rational eval_at_rational(const Polynomial& a, const Rational& r) {
  if (a.is_zero()) return Rational(0);
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(a.degree()));
  return Rational(homogeneous_value(a, r), den);
}

ZeroRootSplit remove_zero_roots(const Polynomial& a) {
  if (a.is_zero()) throw precondition_error("zero polynomial has no well-defined zero root");
  std::size_t k = 0;
  while (a[k] == 0) ++k;
  if (k == 0) return {0, a};
  std::vector<mpz_class> c(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k), a.coeffs().end());
  return {k, Polynomial(std::move(c))};
}

}  // namespace cfroots
