#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "covmat/cli/commands.hpp"
#include "covmat/error.hpp"

namespace {

using namespace covmat;
using namespace covmat::cli;

std::uint64_t env_seed(std::uint64_t fallback) {
  const char* text = std::getenv("COVMAT_SEED");
  if (!text || !*text) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != std::string(text).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("COVMAT_SEED is not an unsigned integer: '") + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariance-matrix entanglement criteria and concurrence bounds"};
  app.require_subcommand(1);

  std::string format_text;
  double tolerance = kDecisionTolerance;
  app.add_option("--tolerance", tolerance, "Decision tolerance for verdicts")
      ->check(CLI::NonNegativeNumber);

  auto* analyze_cmd = app.add_subcommand("analyze", "Run every applicable criterion on one state");
  std::string state, file;
  std::string analyze_format = "text";
  auto* state_opt = analyze_cmd->add_option("--state", state, "State description, e.g. bennett3x3");
  auto* file_opt = analyze_cmd->add_option("--file", file, "JSON state file");
  state_opt->excludes(file_opt);
  analyze_cmd->add_option("--format", analyze_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  analyze_cmd->add_option("--tolerance", tolerance, "Decision tolerance for verdicts")
      ->check(CLI::NonNegativeNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds along (1 - x) base + x target");
  SweepOptions sweep_opts;
  std::string grid_text = "0:1:101";
  std::string sweep_format = "csv";
  sweep_cmd->add_option("--base", sweep_opts.base, "State at x = 0")->capture_default_str();
  sweep_cmd->add_option("--target", sweep_opts.target, "State at x = 1")->capture_default_str();
  sweep_cmd->add_option("--grid", grid_text, "START:STOP:STEPS")->capture_default_str();
  sweep_cmd->add_option("--format", sweep_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sweep_cmd->add_option("--threads", sweep_opts.threads, "Worker threads (0: all cores)");
  sweep_cmd->add_option("--tolerance", tolerance, "Decision tolerance for verdicts")
      ->check(CLI::NonNegativeNumber);

  auto* bench_cmd = app.add_subcommand("bench", "Detection counts over a random ensemble");
  BenchOptions bench_opts;
  std::string ensemble_text = "separable:3x3:5";
  std::optional<std::uint64_t> seed;
  std::string bench_format = "text";
  bench_cmd->add_option("--ensemble", ensemble_text,
                        "separable:DIMS:TERMS, mixed:DIMS:RANK or pure:DIMS")
      ->capture_default_str();
  bench_cmd->add_option("--count", bench_opts.count, "Number of samples")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--seed", seed, "Base seed (falls back to COVMAT_SEED, then 1)");
  bench_cmd->add_option("--format", bench_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  bench_cmd->add_option("--threads", bench_opts.threads, "Worker threads (0: all cores)");
  bench_cmd->add_option("--tolerance", tolerance, "Decision tolerance for verdicts")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*analyze_cmd) {
      if (state.empty() && file.empty()) throw InvalidArgument("analyze needs --state or --file");
      const StateSpec spec = file.empty() ? parse_state_spec(state) : StateSpec{spec::File{file}};
      return run_analyze(spec, format_from_string(analyze_format), tolerance, std::cout, std::cerr);
    }
    if (*sweep_cmd) {
      sweep_opts.grid = parse_grid(grid_text);
      sweep_opts.tolerance = tolerance;
      return run_sweep(sweep_opts, format_from_string(sweep_format), std::cout, std::cerr);
    }
    bench_opts.ensemble = parse_ensemble(ensemble_text);
    bench_opts.seed = seed ? *seed : env_seed(1);
    bench_opts.tolerance = tolerance;
    return run_bench(bench_opts, format_from_string(bench_format), std::cout, std::cerr);
  } catch (const std::exception& e) {
    report_error(std::cerr, e);
    return kExitError;
  }
}
