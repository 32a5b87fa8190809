#include <chrono>
#include <ostream>

#include "covmat/cli/commands.hpp"
#include "covmat/concurrence.hpp"
#include "covmat/covariance.hpp"
#include "covmat/error.hpp"
#include "covmat/state_spec.hpp"

namespace covmat::cli {

namespace {

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

AnalysisReport analyze(const StateSpec& spec, double tolerance) {
  Stopwatch clock;
  AnalysisReport report;
  report.state_description = to_string(spec);
  const DensityMatrix rho = build_state(spec);
  report.dims = rho.dims();
  report.purities = reduced_purities(rho);
  report.timing_ms["build"] = clock.lap_ms();

  if (rho.parties() == 2) {
    report.verdicts = {kf_criterion(rho, tolerance), hs_criterion(rho, tolerance),
                       ppt_criterion(rho, tolerance), ccnr_criterion(rho, tolerance)};
    report.timing_ms["criteria"] = clock.lap_ms();
    report.bounds = concurrence_bounds(rho);
    report.timing_ms["bounds"] = clock.lap_ms();
  } else {
    MultipartiteReport m = multipartite_full_sep(rho, tolerance);
    for (const auto& [pair, pv] : m.pair_verdicts) {
      report.verdicts.push_back(pv.hs);
      report.verdicts.push_back(pv.kf);
    }
    report.multipartite = std::move(m);
    report.timing_ms["criteria"] = clock.lap_ms();
  }
  return report;
}

void report_error(std::ostream& err, const std::exception& e) {
  if (const auto* bad = dynamic_cast<const InvalidState*>(&e)) {
    err << "error: invalid state: " << bad->invariant() << " violated (residual "
        << format_number(bad->residual()) << "): " << bad->what() << "\n";
  } else {
    err << "error: " << e.what() << "\n";
  }
}

int run_analyze(const StateSpec& spec, Format format, double tolerance, std::ostream& out,
                std::ostream& err) {
  try {
    const AnalysisReport report = analyze(spec, tolerance);
    write_report(out, report, format);
    return report.any_entangled() ? kExitEntangled : kExitOk;
  } catch (const std::exception& e) {
    report_error(err, e);
    return kExitError;
  }
}

}  // namespace covmat::cli
