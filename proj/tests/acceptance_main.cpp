// Acceptance suite: one line per criterion, exit 0 iff everything holds at
// the stated tolerance. Criteria marked "exact" require literally zero error.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "reglab/scenarios.hpp"

using namespace reglab;

namespace {

int failures = 0;

void line(int idx, bool pass, const std::string& text) {
  std::printf("criterion %02d %s  %s\n", idx, pass ? "PASS" : "FAIL", text.c_str());
  if (!pass) ++failures;
}

double max_err(const Report& r) {
  double m = 0.0;
  for (const auto& row : r.rows) m = std::max(m, row.abs_err);
  return m;
}

bool all_rows_pass(const Report& r) {
  bool ok = !r.rows.empty();
  for (const auto& row : r.rows) ok = ok && row.pass;
  return ok;
}

bool all_rows_exact(const Report& r) {
  bool ok = !r.rows.empty();
  for (const auto& row : r.rows) ok = ok && (row.abs_err == 0.0);
  return ok;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();

  // 1. Closed-form eta against the Hurwitz-zeta oracle, under one second.
  {
    Report r = run_scenario(default_scenario("eta_closed_vs_zeta"));
    bool ok = all_rows_pass(r) && r.wall_ms < 1000.0;
    line(1, ok, "eta closed form vs zeta oracle: max err " + fmt(max_err(r)) + " <= 1e-8, " +
                    fmt(r.wall_ms) + " ms");
  }

  // 2. rho values on flat line bundles at 1e-12.
  {
    Report r = run_scenario(default_scenario("rho_flat_line_bundle"));
    line(2, all_rows_pass(r),
         "rho on flat line bundles ([1/2], [1/4], graded cancellation): max err " +
             fmt(max_err(r)));
  }

  // 3. Toeplitz index = -winding across windows 64/128/256.
  {
    Report r = run_scenario(default_scenario("toeplitz_index_vs_winding"));
    line(3, all_rows_pass(r) && all_rows_exact(r),
         "toeplitz index = -winding for |w| <= 3 with degree-4 perturbations, stable in N");
  }

  // 4. Cocycle comparison: spread and drift of kappa_1 below 1e-6.
  {
    Report r = run_scenario(default_scenario("cocycle_ab_comparison"));
    double kre = r.measured.at("kappa_re").get<double>();
    double kim = r.measured.at("kappa_im").get<double>();
    double dev = r.measured.at("kappa_minus_one_abs").get<double>();
    line(4, all_rows_pass(r),
         "cocycle ratio kappa_1 = " + fmt(kre) + " + " + fmt(kim) +
             "i constant across cycles and windows (|kappa-1| = " + fmt(dev) + ", reported)");
  }

  // 5. The operator cochain annihilates boundaries.
  {
    Report r = run_scenario(default_scenario("boundary_annihilation"));
    line(5, all_rows_pass(r),
         "cochain_a vanishes on 20 random boundaries at N=512: max scaled err " +
             fmt(max_err(r)));
  }

  // 6. Determinant invariant against the exponentiated pairing.
  {
    Report r = run_scenario(default_scenario("determinant_vs_deligne"));
    line(6, all_rows_pass(r),
         "det of the multiplicative Toeplitz commutator vs exp((1/2pi i) int g1 dg2): max err " +
             fmt(max_err(r)) + " <= 1e-6 at N=256");
  }

  // 7. Cech evaluation vs closed form, with refinement invariance.
  {
    Report r = run_scenario(default_scenario("deligne_consistency"));
    line(7, all_rows_pass(r),
         "Cech pairing = closed form mod Z on 20 unit pairs incl. windings; refinement "
         "invariant: max err " + fmt(max_err(r)) + " <= 1e-10");
  }

  // 8. sigma_2 against the Deligne pairing.
  {
    Report r = run_scenario(default_scenario("sigma2_vs_deligne"));
    line(8, all_rows_pass(r), "sigma_2(exp(g1) cup u2) = Deligne pairing mod Z: max err " +
                                  fmt(max_err(r)) + " <= 1e-10");
  }

  // 9. End-to-end theorem check with one fitted global sign.
  {
    Report r = run_scenario(default_scenario("sigma2_vs_determinant"));
    int sign = r.measured.at("fitted_sign").get<int>();
    line(9, all_rows_pass(r),
         "exp(2 pi i s sigma_2) = commutator determinant at N=256, fitted s = " +
             std::to_string(sign) + ", max err " + fmt(max_err(r)) + " <= 1e-5");
  }

  // 10. Exact structural suite: zero error demanded.
  {
    Report a = run_scenario(default_scenario("chain_map_pi"));
    Report b = run_scenario(default_scenario("vanishing_extra_factor"));
    Report c = run_scenario(default_scenario("hp_shift_roundtrip"));
    bool ok = all_rows_exact(a) && all_rows_exact(b) && all_rows_exact(c);
    line(10, ok,
         "exact suite (d^2, Leibniz, b o b, chain map, shift/psi laws, extra-factor "
         "vanishing): all errors identically zero");
  }

  double total_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = total_s <= 300.0;
  std::printf("total wall time %.1f s (budget 300 s) %s\n", total_s,
              in_budget ? "PASS" : "FAIL");
  if (!in_budget) ++failures;

  return failures == 0 ? 0 : 1;
}
