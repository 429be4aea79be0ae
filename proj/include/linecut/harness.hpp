#pragma once

// Differential verification against the enumeration oracle, and the
// empirical complexity benchmark.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linecut/detail/parallel.hpp"
#include "linecut/gen.hpp"
#include "linecut/io.hpp"
#include "linecut/model.hpp"
#include "linecut/oracle.hpp"
#include "linecut/solver.hpp"

namespace linecut {

/// MAX unconstrained plus MAX and MIN EXACT(k) for every k in 0..n.
inline std::vector<ProblemSpec> all_specs(count_t n) {
  std::vector<ProblemSpec> specs{ProblemSpec::max_cut()};
  for (count_t k = 0; k <= n; ++k) {
    specs.push_back(ProblemSpec::partition(Objective::Max, k));
    specs.push_back(ProblemSpec::partition(Objective::Min, k));
  }
  return specs;
}

/// Random generator spec for trial `index`: the kind cycles through all
/// three, everything else is drawn from `seed`.
inline GenSpec random_gen_spec(std::uint64_t seed, count_t n_max, std::size_t index) {
  std::mt19937_64 rng(seed);
  static constexpr std::int64_t kSpans[] = {1, 3, 10, 1000, 1'000'000};
  GenSpec spec;
  spec.kind = static_cast<GenKind>(index % 3);
  spec.n = detail::draw_between(rng, 1, n_max);
  spec.span = kSpans[detail::draw_below(rng, std::size(kSpans))];
  spec.distinct_target = detail::draw_between(rng, 1, std::min<count_t>(spec.n, spec.span + 1));
  spec.clusters = detail::draw_between(rng, 1, 3);
  spec.seed = rng();
  return spec;
}

/// Per-trial seeds drawn sequentially from one engine, so trial t sees the
/// same instance however trials are scheduled.
inline std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> seeds(trials);
  for (auto& s : seeds) s = rng();
  return seeds;
}

struct VerifyOptions {
  count_t n_max = 8;
  count_t trials = 500;
  std::uint64_t seed = 7;
  unsigned threads = 1;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  bool fault_strict_lower_bound = false;
};

struct VerifyReport {
  count_t trials = 0;
  count_t checks = 0;
  count_t failures = 0;
  std::optional<std::string> first_counterexample;

  bool passed() const noexcept { return failures == 0; }

  std::string to_text() const {
    std::ostringstream os;
    os << "trials: " << trials << "\n";
    os << "checks: " << checks << "\n";
    os << failures << " failures\n";
    if (first_counterexample) os << "first counterexample:\n" << *first_counterexample;
    return os.str();
  }
};

/// Compares solve with oracle_solve on seeded random instances for every
/// spec, exactly, and checks that each reconstructed profile re-evaluates
/// to the reported value.
inline VerifyReport run_verify(const VerifyOptions& options) {
  struct TrialResult {
    count_t checks = 0;
    count_t failures = 0;
    std::string first_failure;
  };
  const auto seeds = trial_seeds(options.seed, static_cast<std::size_t>(options.trials));
  std::vector<TrialResult> results(seeds.size());
  SolveOptions solve_options;
  solve_options.fault_strict_lower_bound = options.fault_strict_lower_bound;

  auto run_trials = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      const auto gen_spec = random_gen_spec(seeds[t], options.n_max, t);
      const auto instance = generate(gen_spec);
      const auto ci = compress(instance);
      auto& res = results[t];
      for (const auto& spec : all_specs(ci.n())) {
        ++res.checks;
        std::string problem;
        try {
          const auto expected = oracle_solve(ci, spec, options.oracle_cap);
          const auto got = solve(ci, spec, solve_options);
          if (got.value != expected.value) {
            problem = "dp value " + to_decimal(got.value.value) + " != oracle value " +
                      to_decimal(expected.value.value);
          } else if (!got.profile || cut_value_sweep(ci, *got.profile) != got.value) {
            problem = "reconstructed profile does not evaluate to the reported value";
          } else if (spec.k && got.k_actual != *spec.k) {
            problem = "first set has " + std::to_string(got.k_actual) + " points";
          }
        } catch (const Error& e) {
          problem = std::string(errc_name(e.code())) + ": " + e.what();
        }
        if (problem.empty()) continue;
        if (res.failures++ == 0) {
          std::ostringstream os;
          os << "trial " << t << ", " << describe(spec) << ": " << problem << "\n"
             << "# instance (" << gen_kind_name(gen_spec.kind) << ", seed " << gen_spec.seed
             << ")\n"
             << render_instance(instance);
          res.first_failure = os.str();
        }
      }
    }
  };
  detail::parallel_chunks(0, seeds.size(), options.threads, run_trials);

  VerifyReport report;
  report.trials = options.trials;
  for (const auto& r : results) {
    report.checks += r.checks;
    report.failures += r.failures;
    if (r.failures > 0 && !report.first_counterexample) report.first_counterexample = r.first_failure;
  }
  return report;
}

struct BenchRecord {
  count_t n = 0;
  std::size_t l = 0;
  std::string kind;
  std::uint64_t seed = 0;
  std::string problem;
  std::int64_t elapsed_ns = 0;
  CutValue value;
};

inline const char* kBenchCsvHeader = "n,l,kind,seed,problem,elapsed_ns,value";

inline std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.l << ',' << r.kind << ',' << r.seed << ',' << r.problem << ','
     << r.elapsed_ns << ',' << to_decimal(r.value.value);
  return os.str();
}

struct BenchOptions {
  std::vector<count_t> sizes{100, 200, 400};
  count_t trials = 3;
  std::uint64_t seed = 1;
  GenKind kind = GenKind::Uniform;
  /// Distinct values for the Duplicates kind.
  std::optional<count_t> distinct;
  std::int64_t span = 1'000'000'000;
  unsigned threads = 1;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<double> median_ns;
  double fitted_exponent = 0.0;
};

/// Least-squares slope of log(y) against log(x).
inline double log_log_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

/// Instance for one bench trial. Uniform instances are redrawn (seed + 1,
/// + 2, ...) until all points are distinct, pinning l = n.
inline Instance bench_instance(const BenchOptions& options, count_t n, std::uint64_t seed) {
  GenSpec spec;
  spec.kind = options.kind;
  spec.n = n;
  spec.span = options.span;
  spec.distinct_target = options.distinct;
  spec.seed = seed;
  for (;;) {
    auto inst = generate(spec);
    if (options.kind != GenKind::Uniform || compress(inst).l() == static_cast<std::size_t>(n))
      return inst;
    ++spec.seed;
  }
}

/// Times solve(MAX, EXACT(floor(n/2))) per size and trial; the exponent is
/// fitted to the per-size median times.
inline BenchResult run_bench(const BenchOptions& options) {
  BenchResult result;
  std::vector<double> xs;
  const auto seeds = trial_seeds(options.seed, options.sizes.size() * static_cast<std::size_t>(options.trials));
  std::size_t next_seed = 0;
  SolveOptions solve_options;
  solve_options.threads = options.threads;

  for (const count_t n : options.sizes) {
    std::vector<double> times;
    for (count_t trial = 0; trial < options.trials; ++trial) {
      const auto seed = seeds[next_seed++];
      const auto ci = compress(bench_instance(options, n, seed));
      const auto spec = ProblemSpec::partition(Objective::Max, n / 2);
      const auto start = std::chrono::steady_clock::now();
      const auto sol = solve(ci, spec, solve_options);
      const auto stop = std::chrono::steady_clock::now();
      if (cut_value_sweep(ci, *sol.profile) != sol.value)
        throw Error(Errc::InternalInconsistency, "bench solution failed re-evaluation");
      BenchRecord rec;
      rec.n = n;
      rec.l = ci.l();
      rec.kind = gen_kind_name(options.kind);
      rec.seed = seed;
      rec.problem = n % 2 == 0 ? "max-bisection" : "max-partition";
      rec.elapsed_ns = std::max<std::int64_t>(
          1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      rec.value = sol.value;
      times.push_back(static_cast<double>(rec.elapsed_ns));
      result.records.push_back(std::move(rec));
    }
    std::sort(times.begin(), times.end());
    const auto mid = times.size() / 2;
    result.median_ns.push_back(times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2);
    xs.push_back(static_cast<double>(n));
  }
  if (xs.size() >= 2) result.fitted_exponent = log_log_slope(xs, result.median_ns);
  return result;
}

}  // namespace linecut
