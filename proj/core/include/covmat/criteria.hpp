#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "covmat/linalg.hpp"

namespace covmat {

/// Default margin below which a criterion is called BOUNDARY rather than
/// violated or satisfied.
inline constexpr double kDecisionTolerance = 1e-9;

enum class Conclusion { kEntangled, kInconclusive, kBoundary };

const char* to_string(Conclusion c) noexcept;
Conclusion conclusion_from_string(const std::string& text);

struct Diagnostic {
  std::string name;
  double value = 0.0;

  bool operator==(const Diagnostic&) const = default;
};

/// One evaluated necessary condition for separability, lhs <= rhs.
/// Violation proves entanglement; satisfaction proves nothing.
struct CriterionVerdict {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
  Conclusion conclusion = Conclusion::kInconclusive;
  std::vector<Diagnostic> diagnostics;

  bool entangled() const noexcept { return conclusion == Conclusion::kEntangled; }
  bool operator==(const CriterionVerdict&) const = default;
};

CriterionVerdict make_verdict(std::string name, double lhs, double rhs,
                              double tolerance = kDecisionTolerance);

/// Ky Fan criterion: ||C||_KF <= ((1 - tr rho_A^2) + (1 - tr rho_B^2)) / 2,
/// with C the correlation block in Gell-Mann bases. The basis-dependent
/// form sum_i |C_ii| <= rhs is attached as diagnostic "diag_abs_sum".
CriterionVerdict kf_criterion(const DensityMatrix& rho, double tolerance = kDecisionTolerance);

/// ||C||_HS^2 <= (1 - tr rho_A^2)(1 - tr rho_B^2).
CriterionVerdict hs_criterion(const DensityMatrix& rho, double tolerance = kDecisionTolerance);

/// Peres-Horodecki: lhs = -lambda_min(rho^{T_A}), rhs = 0.
CriterionVerdict ppt_criterion(const DensityMatrix& rho, double tolerance = kDecisionTolerance);

/// Computable cross-norm / realignment: ||R(rho)||_tr <= 1.
CriterionVerdict ccnr_criterion(const DensityMatrix& rho, double tolerance = kDecisionTolerance);

struct PairVerdicts {
  CriterionVerdict hs;
  CriterionVerdict kf;

  bool operator==(const PairVerdicts&) const = default;
};

/// Pairwise covariance criteria for a multipartite state and what they
/// rule out.
///
/// Bipartitions are labelled by party letters, e.g. "A|BC" or "AC|B"; the
/// group containing party A is written first.
struct MultipartiteReport {
  std::map<std::pair<int, int>, PairVerdicts> pair_verdicts;
  bool full_sep_refuted = false;
  std::map<std::string, bool> bisep_refuted;
  bool fully_entangled = false;

  bool operator==(const MultipartiteReport&) const = default;
};

/// All bipartition labels for n parties, in a fixed order. For n = 3:
/// "A|BC", "AB|C", "AC|B".
std::vector<std::string> bipartition_labels(int n_parties);

/// Party indices of the group containing party A for a label such as "AC|B".
/// Throws InvalidArgument for malformed labels.
std::vector<int> parse_bipartition(const std::string& label, int n_parties);

/// Full-separability check for three parties: HS and KF inequalities on the
/// AB, AC and BC blocks. Also reports which bipartitions the violations refute.
MultipartiteReport tripartite_full_sep(const DensityMatrix& rho,
                                       double tolerance = kDecisionTolerance);

/// Only the four inequalities that biseparability across `partition`
/// imposes (the two cross pairs of the cut).
MultipartiteReport tripartite_bisep(const DensityMatrix& rho, const std::string& partition,
                                    double tolerance = kDecisionTolerance);

/// HS and KF inequalities for every pair i < j of an N-party state.
/// Unequal local dimensions are handled by zero-padding the bases.
///
/// A bipartition S|S' is refuted when some violated pair straddles the cut.
/// `fully_entangled` is set when, within a single family (HS or KF), the
/// violated pairs refute every bipartition; for three parties that is
/// exactly "two of the three inequalities are violated".
MultipartiteReport multipartite_full_sep(const DensityMatrix& rho,
                                         double tolerance = kDecisionTolerance);

}  // namespace covmat
