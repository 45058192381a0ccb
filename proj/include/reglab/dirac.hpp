#pragma once

#include <vector>

#include "reglab/forms.hpp"

namespace reglab {

/// Circle Dirac operator twisted by a flat line bundle with holonomy v,
/// |v| = 1. The angle theta in [0, 2 pi) satisfies log v = i theta with the
/// branch theta in (0, 2 pi) for v != 1 and theta = 0 for v = 1; the real
/// spectrum is {2 pi n + theta}.
class CircleDirac {
public:
  explicit CircleDirac(cplx holonomy);
  static CircleDirac from_theta(double theta);

  cplx holonomy() const noexcept { return v_; }
  double theta() const noexcept { return theta_; }
  bool has_zero_mode() const noexcept { return theta_ == 0.0; }

private:
  CircleDirac(cplx v, double theta) : v_(v), theta_(theta) {}
  cplx v_;
  double theta_;
};

/// Eigenvalues 2 pi n + theta for n = -N..N, each with multiplicity one.
std::vector<double> spectrum(const CircleDirac& D, int N);

struct EtaXi {
  double eta = 0.0;
  int dim_ker = 0;
  CZValue xi;  // [(eta + dim ker)/2]
};

/// Closed forms: eta = 1 - theta/pi for v != 1; eta = 0, dim ker = 1 at v = 1.
EtaXi eta_xi_closed(const CircleDirac& D);

/// Independent spectral-asymmetry oracle: the difference of two Hurwitz zeta
/// values at s = 0, each evaluated by Euler-Maclaurin summation. Throws
/// "OracleNotConverged" if the remainder estimate exceeds 1e-9.
double eta_zeta_oracle(const CircleDirac& D);

/// Hurwitz zeta by Euler-Maclaurin with >= 10 Bernoulli correction terms;
/// writes the remainder estimate if requested. Real s <= 4, 0 < a <= 1.
double hurwitz_zeta_em(double s, double a, double* remainder_estimate = nullptr);

/// Local index family of the untwisted circle operator: the constant 1 in
/// the p = 0 component.
PeriodicFamily ahat_circle();

/// integral over X of Ahat ^ iota_{d+1} gamma for closed gamma, odd d.
cplx rho_tilde(const PeriodicFamily& gamma, int d);

/// Z/2-graded sum of line bundles on the circle, given by holonomies and
/// grading signs.
struct GradedBundle {
  struct Summand {
    cplx v;
    int eps;  // +1 or -1
  };
  std::vector<Summand> summands;

  GradedBundle() = default;
  explicit GradedBundle(std::vector<Summand> s);
};

/// rho(x) = sum_i eps_i xi(v_i) + [rho_tilde(gamma, 1)] on the circle.
CZValue rho_dirac(const GradedBundle& V, const PeriodicFamily& gamma);
CZValue rho_dirac(const GradedBundle& V);  // gamma = 0

}  // namespace reglab
