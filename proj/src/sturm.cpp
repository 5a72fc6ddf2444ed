#include "cfroots/sturm.hpp"

#include "cfroots/bounds.hpp"
#include "cfroots/errors.hpp"

namespace cfroots {

namespace {

// Divides by the positive content, keeping the sign of every value.
Polynomial divide_content(const Polynomial& p) {
  mpz_class g = content(p);
  std::vector<mpz_class> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return Polynomial(std::move(c));
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& a) {
  if (a.is_zero()) throw precondition_error("Sturm sequence of the zero polynomial");
  if (!is_squarefree(a)) throw not_squarefree_error();
  chain_.push_back(a);
  if (a.degree() == 0) return;
  chain_.push_back(divide_content(derivative(a)));
  while (chain_.back().degree() > 0) {
    const Polynomial& prev = chain_[chain_.size() - 2];
    const Polynomial& cur = chain_.back();
    // prem = lc^(delta+1) * rem. Flip so that next = -(positive) * rem.
    Polynomial r = pseudo_remainder(prev, cur);
    const int delta = prev.degree() - cur.degree();
    const bool lc_power_negative = sgn(cur.leading()) < 0 && (delta + 1) % 2 == 1;
    if (!lc_power_negative) r = -r;
    if (r.is_zero()) throw internal_error("Sturm chain ended early on square-free input");
    chain_.push_back(divide_content(r));
  }
}

std::size_t SturmSequence::variations_at(const Rational& r) const {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& s : chain_) {
    int sg = eval_sign_at_rational(s, r);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++v;
    prev = sg;
  }
  return v;
}

std::size_t SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) throw precondition_error("sturm_count requires lo < hi");
  if (eval_sign_at_rational(chain_.front(), lo) == 0 ||
      eval_sign_at_rational(chain_.front(), hi) == 0) {
    throw precondition_error("sturm_count endpoint is a root");
  }
  std::size_t vlo = variations_at(lo);
  std::size_t vhi = variations_at(hi);
  if (vlo < vhi) throw internal_error("Sturm variation count increased across interval");
  return vlo - vhi;
}

std::size_t sturm_count(const Polynomial& a, const Rational& lo, const Rational& hi) {
  return SturmSequence(a).count(lo, hi);
}

std::size_t sturm_total(const Polynomial& a) {
  Rational u(upper_root_bound(a));
  return SturmSequence(a).count(-u, u);
}

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::unsorted: return "unsorted";
    case FailureKind::overlap: return "overlap";
    case FailureKind::bad_interval: return "bad_interval";
    case FailureKind::endpoint_is_root: return "endpoint_is_root";
    case FailureKind::interval_count: return "interval_count";
    case FailureKind::exact_not_root: return "exact_not_root";
    case FailureKind::total_mismatch: return "total_mismatch";
  }
  return "unknown";
}

namespace {

std::string describe(const RootRecord& r) {
  if (const auto* e = std::get_if<ExactRoot>(&r)) return "= " + e->value.to_string();
  const auto& iv = std::get<RootInterval>(r);
  return "(" + iv.lo.to_string() + ", " + iv.hi.to_string() + ")";
}

}  // namespace

VerifyReport verify_isolation(const Polynomial& a, const std::vector<RootRecord>& records) {
  VerifyReport report;
  auto fail = [&](FailureKind kind, std::size_t index, std::string msg) {
    report.ok = false;
    report.failures.push_back({kind, index, std::move(msg)});
  };

  SturmSequence sturm(a);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (const auto* e = std::get_if<ExactRoot>(&r)) {
      if (eval_sign_at_rational(a, e->value) != 0) {
        fail(FailureKind::exact_not_root, i, describe(r) + " is not a root");
      }
      continue;
    }
    const auto& iv = std::get<RootInterval>(r);
    if (!(iv.lo < iv.hi)) {
      fail(FailureKind::bad_interval, i, describe(r) + " is empty");
      continue;
    }
    if (eval_sign_at_rational(a, iv.lo) == 0 || eval_sign_at_rational(a, iv.hi) == 0) {
      fail(FailureKind::endpoint_is_root, i, describe(r) + " has a root endpoint");
      continue;
    }
    std::size_t n = sturm.count(iv.lo, iv.hi);
    if (n != 1) {
      fail(FailureKind::interval_count, i,
           describe(r) + " contains " + std::to_string(n) + " roots");
    }
  }

  // Sorted by lower endpoint, each record must start at or after the furthest
  // upper endpoint seen so far, touching it only at a non-root.
  const Rational* reach = records.empty() ? nullptr : &upper(records[0]);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Rational& lo = lower(records[i]);
    if (lo < lower(records[i - 1])) {
      fail(FailureKind::unsorted, i, describe(records[i]) + " is out of order");
    } else if (lo < *reach || (lo == *reach && eval_sign_at_rational(a, lo) == 0)) {
      fail(FailureKind::overlap, i, describe(records[i]) + " overlaps an earlier record");
    }
    if (*reach < upper(records[i])) reach = &upper(records[i]);
  }

  Rational u(upper_root_bound(a));
  std::size_t total = sturm.count(-u, u);
  if (records.size() != total) {
    fail(FailureKind::total_mismatch, records.size(),
         std::to_string(records.size()) + " records for " + std::to_string(total) +
             " real roots");
  }
  return report;
}

}  // namespace cfroots
