// Acceptance suite: one PASS/FAIL line per criterion, followed by the
// individual checks behind it. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "covmat/cli/commands.hpp"
#include "covmat/covmat.hpp"
#include "support.hpp"

namespace {

using namespace covmat;
using covmat::testing::to_oracle;

struct Check {
  std::string what;
  bool ok;
};

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void check(bool ok, const std::string& what) { checks_.push_back({what, ok}); }

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.ok) return false;
    return !checks_.empty();
  }

  void print(int index) const {
    std::printf("%s  [%d] %s\n", passed() ? "PASS" : "FAIL", index, title_.c_str());
    for (const auto& c : checks_) std::printf("        %-4s %s\n", c.ok ? "ok" : "FAIL", c.what.c_str());
    std::fflush(stdout);
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void within(Criterion& c, const char* name, double value, double target, double tol) {
  c.check(std::abs(value - target) <= tol,
          fmt("%s = %.6f (target %.4f +- %.4f)", name, value, target, tol));
}

Criterion bennett_bounds() {
  Criterion c("Bennett-state bound reproduction");
  const auto t0 = std::chrono::steady_clock::now();
  const cli::AnalysisReport r = cli::analyze(parse_state_spec("bennett3x3"));
  const double elapsed = seconds_since(t0);
  const ConcurrenceBounds& b = *r.bounds;
  within(c, "bound_ccnr_ppt", b.bound_ccnr_ppt, 0.050, 5e-4);
  within(c, "bound_lur (Gell-Mann)", b.bound_lur, 0.052, 5e-4);
  within(c, "bound_optimized", b.bound_optimized, 0.0555, 5e-4);
  c.check(elapsed < 1.0, fmt("runtime %.3f s < 1 s", elapsed));
  return c;
}

Criterion sweep_dominance() {
  Criterion c("Mixture-family dominance of the optimized bound");
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = cli::sweep(cli::SweepOptions{});
  const double elapsed = seconds_since(t0);

  double worst = INFINITY, worst_x = 0.0, jump10 = 0.0, jump12 = 0.0;
  int violations = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double margin = rows[k].bound12 - rows[k].bound10;
    if (margin < worst) worst = margin, worst_x = rows[k].x;
    if (margin < -1e-9) ++violations;
    if (k > 0) {
      jump10 = std::max(jump10, std::abs(rows[k].bound10 - rows[k - 1].bound10));
      jump12 = std::max(jump12, std::abs(rows[k].bound12 - rows[k - 1].bound12));
    }
  }
  c.check(rows.size() == 101, fmt("%zu grid points", rows.size()));
  c.check(violations == 0,
          fmt("bound_optimized >= bound_ccnr_ppt - 1e-9 at every point: %d of %zu violate, "
              "worst margin %.6f at x = %.2f",
              violations, rows.size(), worst, worst_x));
  c.check(jump10 < 0.05, fmt("bound_ccnr_ppt max adjacent jump %.5f < 0.05", jump10));
  c.check(jump12 < 0.05, fmt("bound_optimized max adjacent jump %.5f < 0.05", jump12));
  c.check(elapsed < 10.0, fmt("runtime %.3f s < 10 s", elapsed));
  return c;
}

Criterion bennett_is_bound_entangled() {
  Criterion c("Bennett state is PPT but detected by CCNR and Ky Fan");
  const DensityMatrix rho = bennett_state();
  const double min_eig = min_eigenvalue(partial_transpose(rho, 0));
  c.check(min_eig >= -1e-10, fmt("min eigenvalue of partial transpose %.3e >= -1e-10", min_eig));
  const CriterionVerdict ccnr = ccnr_criterion(rho);
  const CriterionVerdict kf = kf_criterion(rho);
  c.check(ccnr.entangled(), fmt("ccnr: %s (margin %.6f)", to_string(ccnr.conclusion), ccnr.margin));
  c.check(kf.entangled(), fmt("kf: %s (margin %.6f)", to_string(kf.conclusion), kf.margin));
  return c;
}

Criterion observable_algebra() {
  Criterion c("Observable-basis identities");
  for (int d = 2; d <= 5; ++d) {
    const ObservableBasis b = gell_mann_basis(d);
    double ortho = 0.0;
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < d * d; ++a) {
      sum += b[a] * b[a];
      for (int k = 0; k < d * d; ++k) {
        const double expected = a == k ? 1.0 : 0.0;
        ortho = std::max(ortho, std::abs((b[a] * b[k]).trace() - expected));
      }
    }
    const double complete = (sum - d * ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    c.check(ortho <= 1e-12, fmt("d=%d  max |tr(l_a l_b) - delta_ab| = %.2e <= 1e-12", d, ortho));
    c.check(complete <= 1e-10, fmt("d=%d  max |sum l_k^2 - d I| = %.2e <= 1e-10", d, complete));
  }

  Rng rng(4);
  double product_worst = 0.0, local_worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const std::vector<int> dims{2 + s % 4, 2 + (s / 4) % 4};
    const DensityMatrix rho = random_mixed(dims, 1 + s % (dims[0] * dims[1]), rng);
    const ObservableBasis a = gell_mann_basis(dims[0]);
    const ObservableBasis b = gell_mann_basis(dims[1]);
    double product_sum = 0.0, local_sum = 0.0;
    for (int k = 0; k < dims[0] * dims[0]; ++k) {
      for (int l = 0; l < dims[1] * dims[1]; ++l) {
        product_sum += std::pow(expectation(rho, kron(a[k], b[l])), 2);
      }
      local_sum += std::pow(expectation(rho, embed(a[k], dims, 0)), 2);
    }
    for (int l = 0; l < dims[1] * dims[1]; ++l) {
      local_sum += std::pow(expectation(rho, embed(b[l], dims, 1)), 2);
    }
    const auto p = reduced_purities(rho);
    product_worst = std::max(product_worst, std::abs(product_sum - rho.purity()));
    local_worst = std::max(local_worst, std::abs(local_sum - p[0] - p[1]));
  }
  c.check(product_worst <= 1e-10,
          fmt("sum <A_k x B_l>^2 = tr rho^2 on 100 random bipartite states: max err %.2e", product_worst));
  c.check(local_worst <= 1e-10,
          fmt("sum over local set = tr rho_A^2 + tr rho_B^2 on the same states: max err %.2e", local_worst));
  return c;
}

int count_detections(const DensityMatrix& rho) {
  int hits = 0;
  if (rho.parties() == 2) {
    hits += kf_criterion(rho).entangled() + hs_criterion(rho).entangled() +
            ppt_criterion(rho).entangled() + ccnr_criterion(rho).entangled();
    return hits;
  }
  const MultipartiteReport m = multipartite_full_sep(rho);
  for (const auto& [pair, pv] : m.pair_verdicts) hits += pv.hs.entangled() + pv.kf.entangled();
  hits += m.full_sep_refuted + m.fully_entangled;
  for (const auto& [label, refuted] : m.bisep_refuted) hits += refuted;
  if (rho.parties() == 3) {
    const MultipartiteReport t = tripartite_full_sep(rho);
    hits += t.full_sep_refuted;
    for (const auto& label : bipartition_labels(3)) hits += tripartite_bisep(rho, label).bisep_refuted.at(label);
  }
  // Bipartite criteria across the contiguous cuts.
  const auto& dims = rho.dims();
  for (std::size_t cut = 1; cut < dims.size(); ++cut) {
    const int left = product_of(std::span(dims).first(cut));
    const DensityMatrix grouped({left, rho.total_dim() / left}, rho.matrix());
    hits += count_detections(grouped);
  }
  return hits;
}

Criterion soundness() {
  Criterion c("Soundness on random separable states");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::vector<int>> shapes{{2, 2}, {3, 3}, {2, 4}, {2, 2, 2}, {3, 3, 3}};
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    Rng rng(1000 + s);
    int hits = 0;
    for (int k = 0; k < 1000; ++k) {
      hits += count_detections(random_separable(shapes[s], 1 + k % 12, rng));
    }
    std::string shape;
    for (std::size_t i = 0; i < shapes[s].size(); ++i) shape += (i ? "x" : "") + std::to_string(shapes[s][i]);
    c.check(hits == 0, fmt("%-6s 1000 states, %d ENTANGLED verdicts", shape.c_str(), hits));
  }
  const double elapsed = seconds_since(t0);
  c.check(elapsed < 60.0, fmt("runtime %.2f s < 60 s", elapsed));
  return c;
}

Criterion optimized_dominates_lur() {
  Criterion c("Optimized bound dominates the Gell-Mann local-uncertainty bound");
  Rng rng(6);
  double worst = INFINITY, rotated = 0.0;
  for (int k = 0; k < 500; ++k) {
    const DensityMatrix rho = random_mixed({3, 3}, 1 + k % 9, rng);
    const double opt = bound_optimized(rho);
    worst = std::min(worst, opt - bound_lur(rho));
    const auto [a, b] = optimal_lur_bases(rho);
    rotated = std::max(rotated, std::abs(bound_lur(rho, a, b) - opt));
  }
  c.check(worst >= -1e-9, fmt("min(bound_optimized - bound_lur) over 500 states = %.3e >= -1e-9", worst));
  c.check(rotated <= 1e-9, fmt("SVD-rotated bases reproduce bound_optimized: max err %.2e <= 1e-9", rotated));
  return c;
}

Criterion pure_state_validity() {
  Criterion c("Bounds never exceed the concurrence of pure states");
  Rng rng(7);
  const std::vector<std::vector<int>> shapes{{2, 2}, {2, 3}, {3, 3}, {3, 2}, {2, 4}};
  double worst = -INFINITY;
  for (int k = 0; k < 500; ++k) {
    const auto& dims = shapes[k % shapes.size()];
    const ComplexVector psi = haar_vector(dims[0] * dims[1], rng);
    const DensityMatrix rho = pure_state(psi, dims);
    const double exact = pure_concurrence(psi, dims[0], dims[1]);
    const ConcurrenceBounds b = concurrence_bounds(rho);
    for (double bound : {b.bound_ccnr_ppt, b.bound_lur, b.bound_optimized}) {
      worst = std::max(worst, bound - exact);
    }
  }
  c.check(worst <= 1e-8, fmt("max(bound - concurrence) over 500 Haar states = %.3e <= 1e-8", worst));
  const double mes = bound_ccnr_ppt(max_entangled(3));
  const double exact = pure_concurrence(max_entangled_vector(3), 3, 3);
  c.check(std::abs(mes - std::sqrt(4.0 / 3.0)) <= 1e-9 && std::abs(exact - std::sqrt(4.0 / 3.0)) <= 1e-9,
          fmt("MES_3: bound_ccnr_ppt = %.12f, concurrence = %.12f, sqrt(4/3) = %.12f", mes, exact,
              std::sqrt(4.0 / 3.0)));
  return c;
}

Criterion oracle_equivalence() {
  Criterion c("Agreement with an independent brute-force implementation");
  Rng rng(8);
  double block = 0.0, kf = 0.0, hs = 0.0, realign_err = 0.0, spectrum = 0.0;
  const auto bases = gell_mann_bases(std::vector<int>{2, 2});
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = random_mixed({2, 2}, 1 + k % 4, rng);
    const oracle::CMat o = to_oracle(rho.matrix());

    const RealMatrix cm = correlation_block(rho, 0, 1, bases[0], bases[1]);
    const oracle::RMat co = oracle::correlation_block(o, 2, 2);
    block = std::max(block, covmat::testing::max_diff(cm, co));
    kf = std::max(kf, std::abs(trace_norm(cm) - oracle::trace_norm(co)));
    hs = std::max(hs, std::abs(hs_norm(cm) - oracle::hs_norm(co)));
    realign_err = std::max(realign_err, std::abs(trace_norm(realign(rho)) -
                                                 oracle::trace_norm(oracle::realign(o, 2, 2))));

    const RealVector ev = hermitian_eigenvalues(partial_transpose(rho, 0));
    auto evo = oracle::hermitian_eigenvalues(oracle::transpose_a(o, 2, 2));
    std::sort(evo.begin(), evo.end());
    std::vector<double> evl(ev.data(), ev.data() + ev.size());
    std::sort(evl.begin(), evl.end());
    for (std::size_t i = 0; i < evl.size(); ++i) spectrum = std::max(spectrum, std::abs(evl[i] - evo[i]));
  }
  c.check(block <= 1e-10, fmt("correlation blocks: max err %.2e", block));
  c.check(kf <= 1e-10, fmt("||C||_KF: max err %.2e", kf));
  c.check(hs <= 1e-10, fmt("||C||_HS: max err %.2e", hs));
  c.check(realign_err <= 1e-10, fmt("realignment trace norm: max err %.2e", realign_err));
  c.check(spectrum <= 1e-10, fmt("partial-transpose spectra: max err %.2e", spectrum));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::function<Criterion()>> suite{
      bennett_bounds, sweep_dominance,         bennett_is_bound_entangled, observable_algebra,
      soundness,      optimized_dominates_lur, pure_state_validity,        oracle_equivalence};
  int passed = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    Criterion c = [&] {
      try {
        return suite[i]();
      } catch (const std::exception& e) {
        Criterion failed("criterion threw");
        failed.check(false, e.what());
        return failed;
      }
    }();
    c.print(static_cast<int>(i + 1));
    passed += c.passed();
  }
  std::printf("\nacceptance: %d of %zu criteria passed\n", passed, suite.size());
  return passed == static_cast<int>(suite.size()) ? 0 : 1;
}
