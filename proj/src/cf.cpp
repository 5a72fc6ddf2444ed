#include "cfroots/cf.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <utility>

#include "cfroots/bounds.hpp"
#include "cfroots/errors.hpp"
#include "cfroots/mobius.hpp"

namespace cfroots {

const Rational& lower(const RootRecord& r) {
  return std::visit(
      [](const auto& v) -> const Rational& {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ExactRoot>) {
          return v.value;
        } else {
          return v.lo;
        }
      },
      r);
}

const Rational& upper(const RootRecord& r) {
  return std::visit(
      [](const auto& v) -> const Rational& {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ExactRoot>) {
          return v.value;
        } else {
          return v.hi;
        }
      },
      r);
}

bool is_exact(const RootRecord& r) { return std::holds_alternative<ExactRoot>(r); }

RootRecord negated(const RootRecord& r) {
  if (const auto* e = std::get_if<ExactRoot>(&r)) return ExactRoot{-e->value};
  const auto& iv = std::get<RootInterval>(r);
  return RootInterval{-iv.hi, -iv.lo};
}

bool record_less(const RootRecord& a, const RootRecord& b) {
  auto c = lower(a) <=> lower(b);
  if (c != 0) return c < 0;
  if (is_exact(a) != is_exact(b)) return is_exact(a);
  return upper(a) < upper(b);
}

void RunStats::merge(const RunStats& o) {
  nodes_visited += o.nodes_visited;
  plb_calls += o.plb_calls;
  sum_lg_bounds += o.sum_lg_bounds;
  max_coeff_bitsize = std::max(max_coeff_bitsize, o.max_coeff_bitsize);
  exact_roots_found += o.exact_roots_found;
  intervals_found += o.intervals_found;
  max_depth = std::max(max_depth, o.max_depth);
  mobius_checks += o.mobius_checks;
  mobius_violations += o.mobius_violations;
}

std::size_t default_depth_cap(const Polynomial& a) {
  return 64 * (static_cast<std::size_t>(std::max(a.degree(), 0)) + a.bitsize());
}

namespace {

struct Node {
  Polynomial poly;
  Mobius map;
  std::size_t depth = 0;
};

struct Expansion {
  std::vector<RootRecord> records;
  std::vector<Node> children;  // right child (1, inf) first, then left (0, 1)
  RunStats stats;
};

struct Context {
  // Polynomial whose roots the records refer to; endpoints are checked
  // against it.
  const Polynomial& reference;
  const CfConfig& config;
  std::size_t depth_cap;
};

mpz_class compute_plb(const Polynomial& a, const CfConfig& config) {
  if (config.plb == PlbStrategy::cauchy) return plb_cauchy(a).floor();
  return plb_exponential(a, config.shift).value;
}

// Record for a node whose polynomial has exactly one sign variation, hence
// exactly one root image in M((0, inf)).
RootRecord leaf_record(const Polynomial& a, const Mobius& map, const Context& ctx) {
  if (a.degree() == 1) {
    return ExactRoot{map.at(Rational(-a[0], a[1]))};
  }
  // M(0) or M(inf) may coincide with a root extracted earlier (at this node or
  // an ancestor); pull such endpoints inward to X-space points that stay clear
  // of the positive root of a.
  Rational lo_x = 0;
  if (eval_sign_at_rational(ctx.reference, map.at_zero()) == 0) lo_x = plb_cauchy(a);
  Rational lo = map.at(lo_x);

  std::optional<Rational> hi = map.at_infinity();
  if (!hi || eval_sign_at_rational(ctx.reference, *hi) == 0) {
    hi = map.at(Rational(upper_root_bound(a)));
  }
  if (*hi < lo) std::swap(lo, *hi);
  return RootInterval{std::move(lo), std::move(*hi)};
}

Expansion expand(Node node, const Context& ctx) {
  Expansion out;
  const CfConfig& cfg = ctx.config;
  out.stats.nodes_visited = 1;
  out.stats.max_coeff_bitsize = node.poly.bitsize();
  out.stats.max_depth = node.depth;
  if (cfg.check_mobius) {
    out.stats.mobius_checks = 1;
    if (abs(node.map.determinant()) != 1) out.stats.mobius_violations = 1;
  }

  if (node.poly[0] == 0) {
    out.records.push_back(ExactRoot{node.map.at_zero()});
    auto split = remove_zero_roots(node.poly);
    if (split.multiplicity != 1) throw not_squarefree_error();
    node.poly = std::move(split.quotient);
  }

  const std::size_t v = sign_variations(node.poly);
  if (v == 0) return out;
  if (v == 1) {
    out.records.push_back(leaf_record(node.poly, node.map, ctx));
    return out;
  }

  if (node.depth + 1 > ctx.depth_cap) throw depth_exceeded_error(ctx.depth_cap);

  mpz_class b = compute_plb(node.poly, cfg);
  out.stats.plb_calls = 1;
  out.stats.sum_lg_bounds = bit_length(b);
  if (b >= 1) {
    node.poly = taylor_shift(node.poly, b, cfg.shift);
    node.map = node.map.shifted(b);
  }

  Node right{taylor_shift(node.poly, mpz_class(1), cfg.shift), node.map.shifted(1),
             node.depth + 1};
  Node left{taylor_shift(reverse(node.poly), mpz_class(1), cfg.shift), node.map.unit_inverted(),
            node.depth + 1};
  out.children.push_back(std::move(right));
  out.children.push_back(std::move(left));
  return out;
}

void run_serial(Node root, const Context& ctx, std::vector<RootRecord>& records,
                RunStats& stats) {
  std::vector<Node> work;
  work.push_back(std::move(root));
  while (!work.empty()) {
    Node node = std::move(work.back());
    work.pop_back();
    Expansion e = expand(std::move(node), ctx);
    stats.merge(e.stats);
    std::move(e.records.begin(), e.records.end(), std::back_inserter(records));
    for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) {
      work.push_back(std::move(*it));
    }
  }
}

struct SharedSink {
  std::vector<RootRecord> records;
  RunStats stats;
  std::atomic<bool> failed{false};
  std::exception_ptr error;
};

void expand_task(Node node, const Context& ctx, SharedSink& sink) {
  if (sink.failed.load(std::memory_order_relaxed)) return;
  Expansion e;
  try {
    e = expand(std::move(node), ctx);
  } catch (...) {
#pragma omp critical(cfroots_cf_sink)
    {
      if (!sink.error) sink.error = std::current_exception();
    }
    sink.failed.store(true, std::memory_order_relaxed);
    return;
  }
#pragma omp critical(cfroots_cf_sink)
  {
    sink.stats.merge(e.stats);
    std::move(e.records.begin(), e.records.end(), std::back_inserter(sink.records));
  }
  for (auto& child : e.children) {
    Node* owned = new Node(std::move(child));
#pragma omp task firstprivate(owned) shared(ctx, sink)
    {
      std::unique_ptr<Node> guard(owned);
      expand_task(std::move(*guard), ctx, sink);
    }
  }
}

void run_parallel(Node root, const Context& ctx, int threads, std::vector<RootRecord>& records,
                  RunStats& stats) {
  SharedSink sink;
#pragma omp parallel num_threads(threads) shared(sink, ctx, root)
#pragma omp single
  {
    expand_task(std::move(root), ctx, sink);
#pragma omp taskwait
  }
  if (sink.error) std::rethrow_exception(sink.error);
  stats.merge(sink.stats);
  std::move(sink.records.begin(), sink.records.end(), std::back_inserter(records));
}

void normalize(std::vector<RootRecord>& records, RunStats& stats) {
  std::sort(records.begin(), records.end(), record_less);
  records.erase(std::unique(records.begin(), records.end()), records.end());
  stats.exact_roots_found = 0;
  stats.intervals_found = 0;
  for (const auto& r : records) {
    if (is_exact(r)) {
      ++stats.exact_roots_found;
    } else {
      ++stats.intervals_found;
    }
  }
}

void check_input(const Polynomial& a) {
  if (a.is_zero()) throw precondition_error("the zero polynomial has no isolated roots");
  if (!is_squarefree(a)) throw not_squarefree_error();
}

void positive_pass(const Polynomial& a, const CfConfig& config, std::size_t cap,
                   std::vector<RootRecord>& records, RunStats& stats) {
  Context ctx{a, config, cap};
  Node root{a, Mobius::identity(), 0};
  if (config.threads > 1) {
    run_parallel(std::move(root), ctx, config.threads, records, stats);
  } else {
    run_serial(std::move(root), ctx, records, stats);
  }
}

std::size_t resolve_cap(const Polynomial& a, const CfConfig& config) {
  return config.max_depth != 0 ? config.max_depth : default_depth_cap(a);
}

}  // namespace

IsolationResult cf_isolate_positive(const Polynomial& a, const CfConfig& config) {
  check_input(a);
  IsolationResult result;
  positive_pass(a, config, resolve_cap(a, config), result.roots, result.stats);
  normalize(result.roots, result.stats);
  return result;
}

IsolationResult isolate_all(const Polynomial& a, const CfConfig& config) {
  check_input(a);
  const std::size_t cap = resolve_cap(a, config);
  IsolationResult result;
  positive_pass(a, config, cap, result.roots, result.stats);

  std::vector<RootRecord> negative;
  positive_pass(negate_variable(a), config, cap, negative, result.stats);
  for (const auto& r : negative) result.roots.push_back(negated(r));

  normalize(result.roots, result.stats);
  return result;
}

}  // namespace cfroots
