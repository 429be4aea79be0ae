// Command-line front end: solve, oracle, verify, gen, bench.
//
// Exit codes: 0 success, 1 solver or validation error, 2 usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linecut/linecut.hpp"

namespace {

using namespace linecut;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct ProblemArgs {
  std::string problem = "max-cut";
  std::optional<count_t> k;
  std::string input = "-";
  std::string output = "text";
};

void add_problem_options(CLI::App* cmd, ProblemArgs& args) {
  cmd->add_option("--problem", args.problem, "Problem to solve")
      ->check(CLI::IsMember(problem_names()));
  cmd->add_option("--k", args.k, "First-set size for max-partition / min-partition");
  cmd->add_option("--input", args.input, "Instance file, '-' for stdin");
  cmd->add_option("--output", args.output, "Output format")->check(CLI::IsMember({"text", "json"}));
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

OutputFormat format_of(const std::string& name) {
  return name == "json" ? OutputFormat::Json : OutputFormat::Text;
}

std::vector<count_t> parse_sizes(const std::string& text) {
  std::vector<count_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad size '" + item + "'");
    sizes.push_back(v);
  }
  if (sizes.empty()) throw std::invalid_argument("--sizes is empty");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 50) throw std::invalid_argument("bench sizes must be at least 50");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw std::invalid_argument("bench sizes must ascend");
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact optimal cuts and partitions of points on the real line"};
  app.require_subcommand(1);

  ProblemArgs solve_args;
  bool no_assignment = false;
  bool timing = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve with the dynamic program");
  add_problem_options(solve_cmd, solve_args);
  solve_cmd->add_flag("--no-assignment", no_assignment,
                      "Value only, O(n^2) memory, no reconstructed partition");
  solve_cmd->add_flag("--timing", timing, "Report wall-clock solve time (elapsed_ns)");

  ProblemArgs oracle_args;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  auto* oracle_cmd = app.add_subcommand("oracle", "Solve by exhaustive enumeration");
  add_problem_options(oracle_cmd, oracle_args);
  oracle_cmd->add_option("--cap", oracle_cap, "Maximum number of count profiles to enumerate");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Differential check of solve against the oracle");
  verify_cmd->add_option("--n-max", verify_opts.n_max, "Largest instance size")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", verify_opts.trials, "Number of random instances")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify_opts.seed, "Seed");

  GenSpec gen_spec;
  std::string gen_kind = "uniform";
  std::string gen_out = "-";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--kind", gen_kind, "Instance kind")
      ->check(CLI::IsMember({"uniform", "duplicates", "clustered"}));
  gen_cmd->add_option("--n", gen_spec.n, "Number of points")->required();
  gen_cmd->add_option("--span", gen_spec.span, "Coordinates lie in [0, span]");
  gen_cmd->add_option("--distinct", gen_spec.distinct_target, "Distinct values (duplicates kind)");
  gen_cmd->add_option("--clusters", gen_spec.clusters, "Cluster count (clustered kind)");
  gen_cmd->add_option("--seed", gen_spec.seed, "Seed");
  gen_cmd->add_option("--out", gen_out, "Output file, '-' for stdout");

  BenchOptions bench_opts;
  std::string bench_sizes = "100,200,400";
  std::string bench_kind = "uniform";
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Empirical complexity of the solver");
  bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated ascending sizes (>= 50)");
  bench_cmd->add_option("--trials", bench_opts.trials, "Instances per size")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_opts.seed, "Seed");
  bench_cmd->add_option("--kind", bench_kind, "Instance kind")
      ->check(CLI::IsMember({"uniform", "duplicates", "clustered"}));
  bench_cmd->add_option("--distinct", bench_opts.distinct, "Distinct values (duplicates kind)");
  bench_cmd->add_option("--csv", bench_csv, "Also write the CSV records to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const unsigned threads = detail::threads_from_env();
  try {
    if (*solve_cmd || *oracle_cmd) {
      const bool is_solve = static_cast<bool>(*solve_cmd);
      const auto& args = is_solve ? solve_args : oracle_args;
      const auto ci = compress(parse_instance(read_input(args.input)));
      const auto spec = problem_spec_for(args.problem, args.k, ci.n());
      Solution sol;
      std::optional<std::int64_t> elapsed;
      if (is_solve) {
        SolveOptions opts;
        opts.threads = threads;
        opts.value_only = no_assignment;
        const auto start = std::chrono::steady_clock::now();
        sol = solve(ci, spec, opts);
        const auto stop = std::chrono::steady_clock::now();
        if (timing)
          elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
      } else {
        sol = oracle_solve(ci, spec, oracle_cap);
      }
      std::cout << render_solution(sol, ci, args.problem, format_of(args.output), elapsed);
      return 0;
    }

    if (*verify_cmd) {
      verify_opts.threads = threads;
      std::cout << "verify: n_max=" << verify_opts.n_max << " trials=" << verify_opts.trials
                << " seed=" << verify_opts.seed << "\n";
      const auto report = run_verify(verify_opts);
      std::cout << report.to_text();
      return report.passed() ? 0 : kExitError;
    }

    if (*gen_cmd) {
      gen_spec.kind = *parse_gen_kind(gen_kind);
      const auto text = render_instance(generate(gen_spec));
      if (gen_out == "-") {
        std::cout << text;
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + gen_out + "'");
        out << text;
      }
      return 0;
    }

    if (*bench_cmd) {
      bench_opts.sizes = parse_sizes(bench_sizes);
      bench_opts.kind = *parse_gen_kind(bench_kind);
      const auto result = run_bench(bench_opts);
      std::ostringstream csv;
      csv << kBenchCsvHeader << "\n";
      for (const auto& rec : result.records) csv << to_csv_row(rec) << "\n";
      std::cout << csv.str();
      for (std::size_t i = 0; i < bench_opts.sizes.size(); ++i)
        std::cout << "# median n=" << bench_opts.sizes[i] << " ns=" << result.median_ns[i] << "\n";
      std::cout << "# fitted_exponent " << result.fitted_exponent << "\n";
      if (!bench_csv.empty()) {
        std::ofstream out(bench_csv, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + bench_csv + "'");
        out << csv.str();
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
