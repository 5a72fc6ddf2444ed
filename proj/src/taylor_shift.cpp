#include "cfroots/taylor_shift.hpp"

#include <omp.h>

#include <span>
#include <vector>

#include "cfroots/errors.hpp"

namespace cfroots {

namespace {

using Coeffs = std::vector<mpz_class>;

// Below this many coefficients the divide-and-conquer shift falls back to
// Horner.
constexpr std::size_t kDncLeaf = 8;
// Below this many coefficients the OpenMP variant stops spawning tasks.
constexpr std::size_t kTaskCutoff = 48;

void horner_in_place(Coeffs& a, const mpz_class& c) {
  const std::size_t n = a.size();
  if (n < 2) return;
  const bool unit = c == 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      if (unit) {
        mpz_add(a[j].get_mpz_t(), a[j].get_mpz_t(), a[j + 1].get_mpz_t());
      } else {
        mpz_addmul(a[j].get_mpz_t(), c.get_mpz_t(), a[j + 1].get_mpz_t());
      }
    }
  }
}

// Coefficients of (x + c)^m.
Coeffs binomial_power(std::size_t m, const mpz_class& c) {
  Coeffs cpow(m + 1);
  cpow[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) cpow[i] = cpow[i - 1] * c;
  Coeffs out(m + 1);
  mpz_class binom = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    out[k] = binom * cpow[m - k];
    // C(m, k+1) = C(m, k) * (m - k) / (k + 1)
    binom *= static_cast<unsigned long>(m - k);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return out;
}

// out[k] += sum_{i+j=k} p[i] * h[j] for k in [begin, end).
void accumulate_product(std::span<const mpz_class> p, std::span<const mpz_class> h,
                        std::size_t begin, std::size_t end, Coeffs& out) {
  for (std::size_t k = begin; k < end; ++k) {
    std::size_t ilo = k >= h.size() ? k - h.size() + 1 : 0;
    std::size_t ihi = std::min(k, p.size() - 1);
    for (std::size_t i = ilo; i <= ihi; ++i) {
      mpz_addmul(out[k].get_mpz_t(), p[i].get_mpz_t(), h[k - i].get_mpz_t());
    }
  }
}

// A(x+c) on a fixed-length coefficient vector (leading entries may be zero).
Coeffs dnc_serial(std::span<const mpz_class> a, const mpz_class& c) {
  const std::size_t n = a.size();
  if (n <= kDncLeaf) {
    Coeffs out(a.begin(), a.end());
    horner_in_place(out, c);
    return out;
  }
  const std::size_t m = n / 2;
  Coeffs lo = dnc_serial(a.first(m), c);
  Coeffs hi = dnc_serial(a.subspan(m), c);
  Coeffs pw = binomial_power(m, c);
  Coeffs out(n);
  for (std::size_t k = 0; k < m; ++k) out[k] = std::move(lo[k]);
  accumulate_product(pw, hi, 0, n, out);
  return out;
}

Coeffs dnc_tasks(std::span<const mpz_class> a, const mpz_class& c) {
  const std::size_t n = a.size();
  if (n <= kTaskCutoff) return dnc_serial(a, c);
  const std::size_t m = n / 2;
  Coeffs lo, hi, pw;
#pragma omp task shared(lo, a, c)
  lo = dnc_tasks(a.first(m), c);
#pragma omp task shared(hi, a, c)
  hi = dnc_tasks(a.subspan(m), c);
  pw = binomial_power(m, c);
#pragma omp taskwait
  Coeffs out(n);
  for (std::size_t k = 0; k < m; ++k) out[k] = std::move(lo[k]);
  constexpr std::size_t kChunk = 16;
#pragma omp taskloop shared(pw, hi, out) grainsize(1)
  for (std::size_t b = 0; b < n; b += kChunk) {
    accumulate_product(pw, hi, b, std::min(n, b + kChunk), out);
  }
  return out;
}

void require_nonnegative(const mpz_class& c) {
  if (sgn(c) < 0) throw precondition_error("taylor_shift requires a nonnegative offset");
}

}  // namespace

Polynomial taylor_shift_horner(const Polynomial& a, const mpz_class& c) {
  require_nonnegative(c);
  if (c == 0) return a;
  Coeffs out(a.coeffs().begin(), a.coeffs().end());
  horner_in_place(out, c);
  return Polynomial(std::move(out));
}

Polynomial taylor_shift_dnc(const Polynomial& a, const mpz_class& c) {
  require_nonnegative(c);
  if (c == 0) return a;
  return Polynomial(dnc_serial(a.coeffs(), c));
}

Polynomial taylor_shift(const Polynomial& a, const mpz_class& c, ShiftAlgorithm algo) {
  return algo == ShiftAlgorithm::horner ? taylor_shift_horner(a, c) : taylor_shift_dnc(a, c);
}

namespace omp {

Polynomial taylor_shift_dnc(const Polynomial& a, const mpz_class& c, int threads) {
  require_nonnegative(c);
  if (c == 0) return a;
  if (threads <= 1 || a.size() <= kTaskCutoff) return cfroots::taylor_shift_dnc(a, c);
  Coeffs out;
#pragma omp parallel num_threads(threads) shared(out, a, c)
#pragma omp single
  out = dnc_tasks(a.coeffs(), c);
  return Polynomial(std::move(out));
}

}  // namespace omp

}  // namespace cfroots
