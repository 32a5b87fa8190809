#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "covmat/cli/commands.hpp"
#include "covmat/concurrence.hpp"
#include "covmat/error.hpp"
#include "covmat/states.hpp"
#include "parallel.hpp"

namespace covmat::cli {

namespace {

double parse_double(const std::string& s, const std::string& whole) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw InvalidArgument("invalid grid '" + whole + "': bad number '" + s + "'");
  }
  return value;
}

SweepRow evaluate(const DensityMatrix& rho, double x, double tolerance) {
  const ConcurrenceBounds b = concurrence_bounds(rho);
  SweepRow row;
  row.x = x;
  row.bound10 = b.bound_ccnr_ppt;
  row.bound11 = b.bound_lur;
  row.bound12 = b.bound_optimized;
  row.kf_margin = kf_criterion(rho, tolerance).margin;
  row.hs_margin = hs_criterion(rho, tolerance).margin;
  row.ppt_min_eig = -ppt_criterion(rho, tolerance).lhs;
  row.ccnr_norm = b.realign_norm;
  return row;
}

constexpr const char* kColumns[] = {"x",         "bound10",   "bound11",     "bound12",
                                    "kf_margin", "hs_margin", "ppt_min_eig", "ccnr_norm"};

std::array<double, 8> values(const SweepRow& r) {
  return {r.x, r.bound10, r.bound11, r.bound12, r.kf_margin, r.hs_margin, r.ppt_min_eig, r.ccnr_norm};
}

}  // namespace

std::vector<double> Grid::points() const {
  if (steps < 1) throw InvalidArgument("empty grid: need at least one point");
  if (steps == 1) return {start};
  std::vector<double> xs(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) xs[k] = start + (stop - start) * k / (steps - 1);
  xs.back() = stop;
  return xs;
}

Grid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw InvalidArgument("invalid grid '" + text + "': expected START:STOP:STEPS");
  }
  Grid g;
  g.start = parse_double(text.substr(0, first), text);
  g.stop = parse_double(text.substr(first + 1, second - first - 1), text);
  const std::string steps = text.substr(second + 1);
  const auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), g.steps);
  if (ec != std::errc() || ptr != steps.data() + steps.size()) {
    throw InvalidArgument("invalid grid '" + text + "': bad step count '" + steps + "'");
  }
  if (g.steps < 1) throw InvalidArgument("empty grid: need at least one point");
  return g;
}

std::vector<SweepRow> sweep(const SweepOptions& options) {
  const DensityMatrix base = build_state(parse_state_spec(options.base));
  const DensityMatrix target = build_state(parse_state_spec(options.target));
  if (base.dims() != target.dims()) {
    throw DimensionMismatch("sweep: base and target have different dims");
  }
  if (base.parties() != 2) throw NotBipartite("sweep needs bipartite states");
  const std::vector<double> xs = options.grid.points();
  for (double x : xs) {
    if (x < 0.0 || x > 1.0) throw InvalidArgument("sweep: grid points must lie in [0, 1]");
  }
  std::vector<SweepRow> rows(xs.size());
  detail::parallel_for(static_cast<int>(xs.size()), options.threads, [&](int i) {
    rows[i] = evaluate(mix(base, target, xs[i]), xs[i], options.tolerance);
  });
  return rows;
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, Format format) {
  if (format == Format::kJson) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json o;
      const auto v = values(r);
      for (std::size_t c = 0; c < v.size(); ++c) o[kColumns[c]] = v[c];
      j.push_back(o);
    }
    out << j.dump(2) << "\n";
    return;
  }
  const char sep = format == Format::kCsv ? ',' : ' ';
  for (std::size_t c = 0; c < std::size(kColumns); ++c) {
    if (c) out << sep;
    out << kColumns[c];
  }
  out << "\n";
  for (const auto& r : rows) {
    const auto v = values(r);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c) out << sep;
      out << format_number(v[c]);
    }
    out << "\n";
  }
}

int run_sweep(const SweepOptions& options, Format format, std::ostream& out, std::ostream& err) {
  try {
    write_sweep(out, sweep(options), format);
    return kExitOk;
  } catch (const std::exception& e) {
    report_error(err, e);
    return kExitError;
  }
}

}  // namespace covmat::cli
