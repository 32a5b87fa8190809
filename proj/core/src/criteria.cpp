#include "covmat/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "covmat/covariance.hpp"
#include "covmat/error.hpp"
#include "covmat/observables.hpp"

namespace covmat {

namespace {

void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (rho.parties() != 2) {
    throw NotBipartite(std::string(what) + " needs a bipartite state, got " +
                       std::to_string(rho.parties()) + " parties");
  }
}

char party_letter(int p) { return static_cast<char>('A' + p); }

struct PairData {
  RealMatrix block;
  double linear_entropy_i;
  double linear_entropy_j;
};

PairData pair_data(const DensityMatrix& rho, int i, int j,
                   const std::vector<ObservableBasis>& bases, const std::vector<double>& purities) {
  return {correlation_block(rho, i, j, bases[i], bases[j]), 1.0 - purities[i], 1.0 - purities[j]};
}

CriterionVerdict hs_from(const PairData& d, std::string name, double tol) {
  const double hs = hs_norm(d.block);
  return make_verdict(std::move(name), hs * hs, d.linear_entropy_i * d.linear_entropy_j, tol);
}

CriterionVerdict kf_from(const PairData& d, std::string name, double tol) {
  const double rhs = 0.5 * (d.linear_entropy_i + d.linear_entropy_j);
  CriterionVerdict v = make_verdict(std::move(name), trace_norm(d.block), rhs, tol);
  v.diagnostics.push_back({"diag_abs_sum", d.block.diagonal().cwiseAbs().sum()});
  return v;
}

std::string pair_suffix(int i, int j) {
  return std::string("[") + party_letter(i) + "," + party_letter(j) + "]";
}

bool straddles(const std::vector<bool>& in_group, int i, int j) {
  return in_group[i] != in_group[j];
}

std::vector<bool> membership(const std::vector<int>& group, int n) {
  std::vector<bool> in(n, false);
  for (int p : group) in[p] = true;
  return in;
}

// True when some pair in `violated` crosses the cut.
bool cut_refuted(const std::vector<std::pair<int, int>>& violated, const std::vector<bool>& in) {
  return std::any_of(violated.begin(), violated.end(),
                     [&](const auto& pr) { return straddles(in, pr.first, pr.second); });
}

}  // namespace

const char* to_string(Conclusion c) noexcept {
  switch (c) {
    case Conclusion::kEntangled:
      return "ENTANGLED";
    case Conclusion::kInconclusive:
      return "INCONCLUSIVE";
    case Conclusion::kBoundary:
      return "BOUNDARY";
  }
  return "INCONCLUSIVE";
}

Conclusion conclusion_from_string(const std::string& text) {
  if (text == "ENTANGLED") return Conclusion::kEntangled;
  if (text == "INCONCLUSIVE") return Conclusion::kInconclusive;
  if (text == "BOUNDARY") return Conclusion::kBoundary;
  throw InvalidArgument("unknown conclusion '" + text + "'");
}

CriterionVerdict make_verdict(std::string name, double lhs, double rhs, double tolerance) {
  CriterionVerdict v;
  v.name = std::move(name);
  v.lhs = lhs;
  v.rhs = rhs;
  v.margin = lhs - rhs;
  if (v.margin > tolerance) {
    v.conclusion = Conclusion::kEntangled;
  } else if (std::abs(v.margin) <= tolerance) {
    v.conclusion = Conclusion::kBoundary;
  } else {
    v.conclusion = Conclusion::kInconclusive;
  }
  return v;
}

CriterionVerdict kf_criterion(const DensityMatrix& rho, double tolerance) {
  require_bipartite(rho, "kf_criterion");
  const auto bases = gell_mann_bases(rho.dims());
  return kf_from(pair_data(rho, 0, 1, bases, reduced_purities(rho)), "kf", tolerance);
}

CriterionVerdict hs_criterion(const DensityMatrix& rho, double tolerance) {
  require_bipartite(rho, "hs_criterion");
  const auto bases = gell_mann_bases(rho.dims());
  return hs_from(pair_data(rho, 0, 1, bases, reduced_purities(rho)), "hs", tolerance);
}

CriterionVerdict ppt_criterion(const DensityMatrix& rho, double tolerance) {
  require_bipartite(rho, "ppt_criterion");
  const double lambda_min = min_eigenvalue(partial_transpose(rho, 0));
  return make_verdict("ppt", -lambda_min, 0.0, tolerance);
}

CriterionVerdict ccnr_criterion(const DensityMatrix& rho, double tolerance) {
  require_bipartite(rho, "ccnr_criterion");
  return make_verdict("ccnr", trace_norm(realign(rho)), 1.0, tolerance);
}

std::vector<std::string> bipartition_labels(int n_parties) {
  if (n_parties < 2 || n_parties > 26) throw InvalidArgument("bipartitions need 2..26 parties");
  std::vector<std::string> labels;
  const unsigned count = (1u << (n_parties - 1)) - 1;
  for (unsigned mask = 0; mask < count; ++mask) {
    std::string left(1, 'A'), right;
    for (int p = 1; p < n_parties; ++p) {
      ((mask >> (p - 1)) & 1u ? left : right).push_back(party_letter(p));
    }
    labels.push_back(left + "|" + right);
  }
  return labels;
}

std::vector<int> parse_bipartition(const std::string& label, int n_parties) {
  const auto labels = bipartition_labels(n_parties);
  if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
    throw InvalidArgument("invalid bipartition '" + label + "' for " +
                          std::to_string(n_parties) + " parties");
  }
  std::vector<int> group;
  for (char c : label.substr(0, label.find('|'))) group.push_back(c - 'A');
  return group;
}

MultipartiteReport multipartite_full_sep(const DensityMatrix& rho, double tolerance) {
  const int n = rho.parties();
  if (n < 2) throw InvalidArgument("multipartite_full_sep needs at least two parties");
  const auto bases = gell_mann_bases(rho.dims());
  const auto purities = reduced_purities(rho);

  MultipartiteReport report;
  std::vector<std::pair<int, int>> hs_violated, kf_violated;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const PairData d = pair_data(rho, i, j, bases, purities);
      PairVerdicts pv{hs_from(d, "hs" + pair_suffix(i, j), tolerance),
                      kf_from(d, "kf" + pair_suffix(i, j), tolerance)};
      if (pv.hs.entangled()) hs_violated.emplace_back(i, j);
      if (pv.kf.entangled()) kf_violated.emplace_back(i, j);
      report.pair_verdicts.emplace(std::make_pair(i, j), std::move(pv));
    }
  }
  report.full_sep_refuted = !hs_violated.empty() || !kf_violated.empty();

  bool hs_all = true, kf_all = true;
  for (const auto& label : bipartition_labels(n)) {
    const auto in = membership(parse_bipartition(label, n), n);
    const bool hs_cut = cut_refuted(hs_violated, in);
    const bool kf_cut = cut_refuted(kf_violated, in);
    report.bisep_refuted[label] = hs_cut || kf_cut;
    hs_all = hs_all && hs_cut;
    kf_all = kf_all && kf_cut;
  }
  report.fully_entangled = hs_all || kf_all;
  return report;
}

MultipartiteReport tripartite_full_sep(const DensityMatrix& rho, double tolerance) {
  if (rho.parties() != 3) {
    throw InvalidArgument("tripartite_full_sep needs exactly three parties");
  }
  return multipartite_full_sep(rho, tolerance);
}

MultipartiteReport tripartite_bisep(const DensityMatrix& rho, const std::string& partition,
                                    double tolerance) {
  if (rho.parties() != 3) throw InvalidArgument("tripartite_bisep needs exactly three parties");
  const auto in = membership(parse_bipartition(partition, 3), 3);
  const auto bases = gell_mann_bases(rho.dims());
  const auto purities = reduced_purities(rho);

  MultipartiteReport report;
  bool violated = false;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!straddles(in, i, j)) continue;
      const PairData d = pair_data(rho, i, j, bases, purities);
      PairVerdicts pv{hs_from(d, "hs" + pair_suffix(i, j), tolerance),
                      kf_from(d, "kf" + pair_suffix(i, j), tolerance)};
      violated = violated || pv.hs.entangled() || pv.kf.entangled();
      report.pair_verdicts.emplace(std::make_pair(i, j), std::move(pv));
    }
  }
  report.bisep_refuted[partition] = violated;
  report.full_sep_refuted = violated;
  return report;
}

}  // namespace covmat
