#include "cfroots/generators.hpp"

#include <vector>

#include <gmpxx.h>

#include "cfroots/errors.hpp"

namespace cfroots {

Polynomial mignotte(int d, long a) {
  if (d < 3) throw precondition_error("mignotte requires d >= 3");
  if (a < 1) throw precondition_error("mignotte requires a >= 1");
  std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
  mpz_class am(a);
  c[0] = -2;
  c[1] = 4 * am;
  c[2] = -2 * am * am;
  c[static_cast<std::size_t>(d)] = 1;
  return Polynomial(std::move(c));
}

Polynomial random_squarefree(int d, int tau, std::uint64_t seed) {
  if (d < 1) throw precondition_error("random_squarefree requires d >= 1");
  if (tau < 1) throw precondition_error("random_squarefree requires tau >= 1");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(mpz_class(std::to_string(seed)));
  const auto bits = static_cast<unsigned long>(tau);
  mpz_class offset;
  mpz_ui_pow_ui(offset.get_mpz_t(), 2, bits);
  const mpz_class lowest = -offset;

  // Uniform in (-2^tau, 2^tau).
  auto draw = [&] {
    for (;;) {
      mpz_class v = rng.get_z_bits(bits + 1) - offset;
      if (v != lowest) return v;
    }
  };

  for (;;) {
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = draw();
    while (c.back() == 0) c.back() = draw();
    Polynomial p(std::move(c));
    if (is_squarefree(p)) return p;
  }
}

}  // namespace cfroots
