#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covmat/cli/report.hpp"
#include "covmat/criteria.hpp"
#include "covmat/state_spec.hpp"

namespace covmat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitEntangled = 2;

AnalysisReport analyze(const StateSpec& spec, double tolerance = kDecisionTolerance);

/// Prints the report and returns 0, or 2 if any verdict is ENTANGLED.
/// Errors are written to `err` and give 1.
int run_analyze(const StateSpec& spec, Format format, double tolerance, std::ostream& out,
                std::ostream& err);

/// Inclusive grid of `steps` points from start to stop.
struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int steps = 101;

  std::vector<double> points() const;
};

/// Parses "a:b:n".
Grid parse_grid(const std::string& text);

struct SweepRow {
  double x = 0.0;
  double bound10 = 0.0;  // PPT / realignment bound
  double bound11 = 0.0;  // local uncertainty bound, Gell-Mann bases
  double bound12 = 0.0;  // optimized correlation bound
  double kf_margin = 0.0;
  double hs_margin = 0.0;
  double ppt_min_eig = 0.0;
  double ccnr_norm = 0.0;

  bool operator==(const SweepRow&) const = default;
};

struct SweepOptions {
  std::string base = "bennett3x3";
  std::string target = "mes:3";
  Grid grid;
  double tolerance = kDecisionTolerance;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Rows of (1 - x) base + x target, in grid order.
std::vector<SweepRow> sweep(const SweepOptions& options);
void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, Format format);
int run_sweep(const SweepOptions& options, Format format, std::ostream& out, std::ostream& err);

/// Random-state ensemble: "separable:DIMS:TERMS", "pure:DIMS" or
/// "mixed:DIMS:RANK", with DIMS like 3x3 or 2x2x2.
struct Ensemble {
  enum class Kind { kSeparable, kPure, kMixed } kind = Kind::kSeparable;
  std::vector<int> dims;
  int param = 1;

  bool operator==(const Ensemble&) const = default;
};

Ensemble parse_ensemble(const std::string& text);
std::string to_string(const Ensemble& e);

struct BenchOptions {
  Ensemble ensemble;
  int count = 1000;
  std::uint64_t seed = 1;
  double tolerance = kDecisionTolerance;
  unsigned threads = 0;
};

struct BenchResult {
  std::string ensemble;
  int count = 0;
  std::uint64_t seed = 0;
  std::map<std::string, int> detected;
  // Pure bipartite ensembles only: states with concurrence > 1e-6, and how
  // many of those each criterion caught.
  std::optional<int> pure_entangled;
  std::map<std::string, int> detected_among_entangled;

  bool operator==(const BenchResult&) const = default;
};

/// Seed of sample i; independent of thread scheduling.
std::uint64_t sample_seed(std::uint64_t seed, int index);

BenchResult bench(const BenchOptions& options);
void write_bench(std::ostream& out, const BenchResult& result, Format format);
int run_bench(const BenchOptions& options, Format format, std::ostream& out, std::ostream& err);

/// Writes a one-line diagnostic for the active exception; InvalidState
/// errors name the failing invariant and its residual.
void report_error(std::ostream& err, const std::exception& e);

}  // namespace covmat::cli
