#include "cfroots/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "cfroots/cf.hpp"
#include "cfroots/errors.hpp"
#include "cfroots/generators.hpp"
#include "cfroots/parse.hpp"
#include "cfroots/report.hpp"
#include "cfroots/sturm.hpp"

namespace cfroots::cli {

namespace {

struct Options {
  std::string coeffs;
  std::string expr;
  bool from_stdin = false;
  std::string bench;
  int d = 8;
  long a = 256;
  int tau = 16;
  int count = 1;
  std::uint64_t seed = 1;
  std::string plb = "exp";
  std::string shift = "dnc";
  bool json = false;
  bool stats = false;
  bool check = false;
  std::size_t max_depth = 0;
  int threads = 1;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {
    config_.plb = opt.plb == "cauchy" ? PlbStrategy::cauchy : PlbStrategy::exponential;
    config_.shift = opt.shift == "horner" ? ShiftAlgorithm::horner : ShiftAlgorithm::dnc;
    config_.max_depth = opt.max_depth;
    config_.threads = std::max(opt.threads, 1);
  }

  // Isolates one polynomial and prints its report; label prefixes diagnostics
  // in batch runs.
  int process(const Polynomial& a, const std::string& label) {
    if (a.is_zero() || !is_squarefree(a)) {
      err_ << label << "input is not square-free\n";
      return kNotSquarefree;
    }
    IsolationResult result;
    try {
      result = isolate_all(a, config_);
    } catch (const depth_exceeded_error& e) {
      err_ << label << e.what() << '\n';
      return kInternalError;
    } catch (const internal_error& e) {
      err_ << label << "internal error: " << e.what() << '\n';
      return kInternalError;
    }
    totals_.merge(result.stats);

    if (opt_.json) {
      out_ << to_json(a, result, opt_.stats).dump() << '\n';
    } else {
      if (batch_) out_ << "# " << render_coefficients(a) << '\n';
      out_ << to_text(result.roots);
      if (opt_.stats) out_ << stats_to_text(result.stats);
    }

    if (opt_.check) {
      VerifyReport report = verify_isolation(a, result.roots);
      if (!report.ok) {
        for (const auto& f : report.failures) {
          err_ << label << "verification failed [" << to_string(f.kind) << "] " << f.message
               << '\n';
        }
        return kVerifyFailed;
      }
    }
    return kOk;
  }

  int run_single(const Polynomial& a) { return process(a, ""); }

  int run_stdin(std::istream& in) {
    batch_ = true;
    int code = kOk;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const std::string label = "line " + std::to_string(lineno) + ": ";
      int rc;
      try {
        rc = process(parse_coefficients(line), label);
      } catch (const parse_error& e) {
        err_ << label << e.what() << '\n';
        rc = kParseError;
      }
      if (code == kOk) code = rc;
    }
    return code;
  }

  int run_bench() {
    batch_ = true;
    std::vector<Polynomial> instances;
    if (opt_.bench == "mignotte") {
      instances.push_back(mignotte(opt_.d, opt_.a));
    } else {
      for (int i = 0; i < opt_.count; ++i) {
        instances.push_back(
            random_squarefree(opt_.d, opt_.tau, opt_.seed + static_cast<std::uint64_t>(i)));
      }
    }
    int code = kOk;
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < instances.size(); ++i) {
      int rc = process(instances[i], "instance " + std::to_string(i) + ": ");
      if (code == kOk) code = rc;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    if (!opt_.json) {
      out_ << "# instances " << instances.size() << " nodes " << totals_.nodes_visited
           << " plb_calls " << totals_.plb_calls << " elapsed_ms " << ms.count() << '\n';
    }
    return code;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  CfConfig config_;
  RunStats totals_;
  bool batch_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Isolate the real roots of a square-free integer polynomial", "isolate"};
  Options opt;
  auto* coeffs = app.add_option("--coeffs", opt.coeffs, "ascending coefficient list a0,a1,...");
  auto* expr = app.add_option("--expr", opt.expr, "polynomial expression in x");
  auto* from_stdin =
      app.add_flag("--stdin", opt.from_stdin, "read coefficient lists from standard input");
  auto* bench = app.add_option("--bench", opt.bench, "benchmark family")
                    ->check(CLI::IsMember({"mignotte", "random"}));
  coeffs->excludes(expr, from_stdin, bench);
  expr->excludes(from_stdin, bench);
  from_stdin->excludes(bench);
  app.add_option("--d", opt.d, "benchmark degree")->check(CLI::Range(1, 100000));
  app.add_option("--a", opt.a, "Mignotte parameter")->check(CLI::PositiveNumber);
  app.add_option("--tau", opt.tau, "random coefficient bit budget")->check(CLI::Range(1, 1 << 20));
  app.add_option("--count", opt.count, "random instances")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opt.seed, "first random seed");
  app.add_option("--plb", opt.plb, "positive lower bound")->check(CLI::IsMember({"exp", "cauchy"}));
  app.add_option("--shift", opt.shift, "Taylor shift algorithm")
      ->check(CLI::IsMember({"horner", "dnc"}));
  app.add_flag("--json", opt.json, "JSON output");
  app.add_flag("--stats", opt.stats, "include run statistics");
  app.add_flag("--check", opt.check, "verify against the Sturm oracle");
  app.add_option("--max-depth", opt.max_depth, "tree depth cap (0: 64*(d+tau))");
  app.add_option("--threads", opt.threads, "threads for subtree expansion")
      ->check(CLI::Range(1, 1024));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  const int sources = static_cast<int>(coeffs->count() > 0) + static_cast<int>(expr->count() > 0) +
                      static_cast<int>(opt.from_stdin) + static_cast<int>(bench->count() > 0);
  if (sources != 1) {
    err << "exactly one of --coeffs, --expr, --stdin, --bench is required\n";
    return kParseError;
  }

  Runner runner(opt, out, err);
  try {
    if (opt.from_stdin) return runner.run_stdin(in);
    if (!opt.bench.empty()) return runner.run_bench();
    Polynomial a = coeffs->count() > 0 ? parse_coefficients(opt.coeffs) : parse_expression(opt.expr);
    return runner.run_single(a);
  } catch (const parse_error& e) {
    err << e.what() << '\n';
    return kParseError;
  } catch (const precondition_error& e) {
    err << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace cfroots::cli
