#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfroots/cf.hpp"
#include "cfroots/polynomial.hpp"
#include "cfroots/rational.hpp"

namespace cfroots {

/// Sturm sequence S0 = A, S1 = A', S_{k+1} = -(positive multiple of) S_{k-1}
/// mod S_k, kept in Z[x] through primitive pseudo-remainders. Independent of
/// the Descartes/CF machinery; used as ground truth.
class SturmSequence {
 public:
  /// Requires A square-free and nonzero.
  explicit SturmSequence(const Polynomial& a);

  /// Distinct real roots in (lo, hi). Requires lo < hi and A(lo), A(hi) != 0.
  std::size_t count(const Rational& lo, const Rational& hi) const;

  /// Sign variations of the sequence evaluated at r.
  std::size_t variations_at(const Rational& r) const;

  const std::vector<Polynomial>& chain() const noexcept { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

std::size_t sturm_count(const Polynomial& a, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of A, counted on (-U, U).
std::size_t sturm_total(const Polynomial& a);

enum class FailureKind {
  unsorted,
  overlap,
  bad_interval,       // lo >= hi
  endpoint_is_root,
  interval_count,     // Sturm count on the interval != 1
  exact_not_root,
  total_mismatch,
};

struct VerifyFailure {
  FailureKind kind;
  std::size_t index;  // offending record (record count for total_mismatch)
  std::string message;
};

struct VerifyReport {
  bool ok = true;
  std::vector<VerifyFailure> failures;
};

/// Checks records against the Sturm oracle: sorted, pairwise disjoint (touching
/// only at non-roots), each interval isolates exactly one root, each exact value
/// is a root, and the record count equals the number of real roots.
VerifyReport verify_isolation(const Polynomial& a, const std::vector<RootRecord>& records);

std::string to_string(FailureKind kind);

}  // namespace cfroots
