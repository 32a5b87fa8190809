#include <charconv>
#include <ostream>

#include <json.hpp>

#include "covmat/cli/commands.hpp"
#include "covmat/concurrence.hpp"
#include "covmat/error.hpp"
#include "covmat/states.hpp"
#include "parallel.hpp"

namespace covmat::cli {

namespace {

constexpr double kPureEntangledThreshold = 1e-6;

int parse_int(const std::string& s, const std::string& whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
    throw InvalidArgument("invalid ensemble '" + whole + "': bad number '" + s + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& s, char c) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(c, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

struct Sample {
  std::vector<std::pair<std::string, bool>> detected;
  bool pure_entangled = false;
};

Sample evaluate(const BenchOptions& options, int index) {
  const Ensemble& e = options.ensemble;
  Rng rng(sample_seed(options.seed, index));
  Sample s;
  DensityMatrix rho = [&] {
    switch (e.kind) {
      case Ensemble::Kind::kSeparable: return random_separable(e.dims, e.param, rng);
      case Ensemble::Kind::kMixed: return random_mixed(e.dims, e.param, rng);
      case Ensemble::Kind::kPure: break;
    }
    const ComplexVector psi = haar_vector(product_of(e.dims), rng);
    if (e.dims.size() == 2) {
      s.pure_entangled = pure_concurrence(psi, e.dims[0], e.dims[1]) > kPureEntangledThreshold;
    }
    return pure_state(psi, e.dims);
  }();

  const double tol = options.tolerance;
  if (rho.parties() == 2) {
    s.detected = {{"kf", kf_criterion(rho, tol).entangled()},
                  {"hs", hs_criterion(rho, tol).entangled()},
                  {"ppt", ppt_criterion(rho, tol).entangled()},
                  {"ccnr", ccnr_criterion(rho, tol).entangled()}};
  } else {
    const MultipartiteReport m = multipartite_full_sep(rho, tol);
    bool hs = false, kf = false;
    for (const auto& [pair, pv] : m.pair_verdicts) {
      hs = hs || pv.hs.entangled();
      kf = kf || pv.kf.entangled();
    }
    s.detected = {{"kf", kf}, {"hs", hs}};
  }
  return s;
}

}  // namespace

Ensemble parse_ensemble(const std::string& text) {
  const auto parts = split(text, ':');
  Ensemble e;
  if (parts[0] == "separable" && parts.size() == 3) {
    e.kind = Ensemble::Kind::kSeparable;
  } else if (parts[0] == "mixed" && parts.size() == 3) {
    e.kind = Ensemble::Kind::kMixed;
  } else if (parts[0] == "pure" && parts.size() == 2) {
    e.kind = Ensemble::Kind::kPure;
  } else {
    throw InvalidArgument("invalid ensemble '" + text +
                          "': expected separable:DIMS:TERMS, mixed:DIMS:RANK or pure:DIMS");
  }
  for (const auto& d : split(parts[1], 'x')) {
    const int dim = parse_int(d, text);
    if (dim < 2) throw InvalidArgument("invalid ensemble '" + text + "': dimensions must be >= 2");
    e.dims.push_back(dim);
  }
  if (e.dims.size() < 2) throw InvalidArgument("invalid ensemble '" + text + "': need two or more parties");
  if (parts.size() == 3) e.param = parse_int(parts[2], text);
  return e;
}

std::string to_string(const Ensemble& e) {
  std::string dims;
  for (std::size_t i = 0; i < e.dims.size(); ++i) dims += (i ? "x" : "") + std::to_string(e.dims[i]);
  switch (e.kind) {
    case Ensemble::Kind::kSeparable: return "separable:" + dims + ":" + std::to_string(e.param);
    case Ensemble::Kind::kMixed: return "mixed:" + dims + ":" + std::to_string(e.param);
    case Ensemble::Kind::kPure: return "pure:" + dims;
  }
  return dims;
}

std::uint64_t sample_seed(std::uint64_t seed, int index) {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BenchResult bench(const BenchOptions& options) {
  if (options.count < 0) throw InvalidArgument("bench: count must be non-negative");
  std::vector<Sample> samples(static_cast<std::size_t>(options.count));
  detail::parallel_for(options.count, options.threads,
                       [&](int i) { samples[i] = evaluate(options, i); });

  BenchResult r;
  r.ensemble = to_string(options.ensemble);
  r.count = options.count;
  r.seed = options.seed;
  const bool track_pure =
      options.ensemble.kind == Ensemble::Kind::kPure && options.ensemble.dims.size() == 2;
  if (track_pure) r.pure_entangled = 0;
  const bool bipartite = options.ensemble.dims.size() == 2;
  for (const char* name : bipartite ? std::vector<const char*>{"kf", "hs", "ppt", "ccnr"}
                                    : std::vector<const char*>{"kf", "hs"}) {
    r.detected[name] = 0;
    if (track_pure) r.detected_among_entangled[name] = 0;
  }
  for (const auto& s : samples) {
    if (track_pure && s.pure_entangled) ++*r.pure_entangled;
    for (const auto& [name, hit] : s.detected) {
      if (!hit) continue;
      ++r.detected[name];
      if (track_pure && s.pure_entangled) ++r.detected_among_entangled[name];
    }
  }
  return r;
}

void write_bench(std::ostream& out, const BenchResult& r, Format format) {
  if (format == Format::kJson) {
    nlohmann::json j = {{"ensemble", r.ensemble},
                        {"count", r.count},
                        {"seed", r.seed},
                        {"detected", r.detected}};
    if (r.pure_entangled) {
      j["pure_entangled"] = *r.pure_entangled;
      j["detected_among_entangled"] = r.detected_among_entangled;
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (format == Format::kCsv) {
    out << "criterion,detected,count" << (r.pure_entangled ? ",detected_among_entangled" : "") << "\n";
    for (const auto& [name, n] : r.detected) {
      out << name << "," << n << "," << r.count;
      if (r.pure_entangled) out << "," << r.detected_among_entangled.at(name);
      out << "\n";
    }
    return;
  }
  out << "ensemble: " << r.ensemble << "  count: " << r.count << "  seed: " << r.seed << "\n";
  if (r.pure_entangled) out << "entangled (concurrence > 1e-6): " << *r.pure_entangled << "\n";
  for (const auto& [name, n] : r.detected) {
    out << "  " << name << std::string(6 - std::min<std::size_t>(name.size(), 5), ' ') << n << " / "
        << r.count;
    if (r.pure_entangled) out << "  (" << r.detected_among_entangled.at(name) << " of the entangled)";
    out << "\n";
  }
}

int run_bench(const BenchOptions& options, Format format, std::ostream& out, std::ostream& err) {
  try {
    write_bench(out, bench(options), format);
    return kExitOk;
  } catch (const std::exception& e) {
    report_error(err, e);
    return kExitError;
  }
}

}  // namespace covmat::cli
