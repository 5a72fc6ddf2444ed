#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cfroots/polynomial.hpp"
#include "cfroots/rational.hpp"
#include "cfroots/taylor_shift.hpp"

namespace cfroots {

struct ExactRoot {
  Rational value;
  friend bool operator==(const ExactRoot&, const ExactRoot&) = default;
};

/// Open interval (lo, hi), lo < hi, neither endpoint a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

using RootRecord = std::variant<ExactRoot, RootInterval>;

const Rational& lower(const RootRecord& r);
const Rational& upper(const RootRecord& r);
bool is_exact(const RootRecord& r);
/// Image under x -> -x: exact values negated, interval endpoints negated and
/// swapped.
RootRecord negated(const RootRecord& r);

/// Orders by lower endpoint; an exact root precedes an interval starting at
/// the same point.
bool record_less(const RootRecord& a, const RootRecord& b);

struct RunStats {
  std::size_t nodes_visited = 0;
  std::size_t plb_calls = 0;
  // Sum over PLB results b of ceil(lg(1 + b)), i.e. the bit length of b.
  std::size_t sum_lg_bounds = 0;
  std::size_t max_coeff_bitsize = 0;
  std::size_t exact_roots_found = 0;
  std::size_t intervals_found = 0;
  std::size_t max_depth = 0;
  // Instrumented mode only.
  std::size_t mobius_checks = 0;
  std::size_t mobius_violations = 0;

  void merge(const RunStats& other);
};

enum class PlbStrategy {
  exponential,  // plb_exponential
  cauchy,       // floor(plb_cauchy)
};

struct CfConfig {
  PlbStrategy plb = PlbStrategy::exponential;
  ShiftAlgorithm shift = ShiftAlgorithm::dnc;
  // 0 selects the default cap 64 * (d + tau).
  std::size_t max_depth = 0;
  // > 1 expands subtrees as OpenMP tasks; output is identical either way.
  int threads = 1;
  // Check |det M| = 1 at every node (counted in RunStats).
  bool check_mobius = false;
};

struct IsolationResult {
  std::vector<RootRecord> roots;  // sorted, pairwise disjoint
  RunStats stats;
};

/// Isolates the positive real roots of a square-free A (Alg. CF with
/// Mobius bookkeeping). A root at 0 is reported as ExactRoot(0).
IsolationResult cf_isolate_positive(const Polynomial& a, const CfConfig& config = {});

/// All real roots: root 0, the positive pass on A, and the positive pass on
/// A(-x) mapped back through x -> -x.
IsolationResult isolate_all(const Polynomial& a, const CfConfig& config = {});

/// Default depth cap 64 * (d + tau) for A.
std::size_t default_depth_cap(const Polynomial& a);

}  // namespace cfroots
