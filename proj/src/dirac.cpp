#include "reglab/dirac.hpp"

#include <cmath>

namespace reglab {

CircleDirac::CircleDirac(cplx holonomy) : v_(holonomy) {
  require(std::abs(std::abs(holonomy) - 1.0) <= 1e-12, "BadHolonomy",
          "holonomy must lie on the unit circle");
  double a = std::arg(holonomy);  // principal branch (-pi, pi]
  if (a < 0) a += kTwoPi;
  if (std::abs(holonomy - cplx(1.0)) <= 1e-15) a = 0.0;
  theta_ = a;
}

CircleDirac CircleDirac::from_theta(double theta) {
  require(theta >= 0 && theta < kTwoPi, "BadHolonomy", "theta must lie in [0, 2 pi)");
  return CircleDirac(std::polar(1.0, theta), theta);
}

std::vector<double> spectrum(const CircleDirac& D, int N) {
  require(N >= 1, "BadParams", "spectrum needs N >= 1");
  std::vector<double> out;
  out.reserve(std::size_t(2 * N + 1));
  for (int n = -N; n <= N; ++n) out.push_back(kTwoPi * n + D.theta());
  return out;
}

EtaXi eta_xi_closed(const CircleDirac& D) {
  EtaXi r;
  if (D.has_zero_mode()) {
    r.eta = 0.0;
    r.dim_ker = 1;
  } else {
    r.eta = 1.0 - D.theta() / kPi;
    r.dim_ker = 0;
  }
  r.xi = reduce(cplx((r.eta + r.dim_ker) / 2.0, 0.0));
  return r;
}

namespace {

// Bernoulli numbers B_2, B_4, ..., B_28.
constexpr double kBernoulli[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double hurwitz_zeta_em(double s, double a, double* remainder_estimate) {
  require(a > 0 && a <= 1.0 + 1e-15, "BadParams", "Hurwitz parameter must have 0 < a <= 1");
  require(s <= 4.0 && s != 1.0, "BadParams", "implemented for real s <= 4, s != 1");
  const int M = 24;  // direct terms
  const int J = 12;  // Bernoulli correction terms (>= 10)

  double direct = 0.0;
  for (int n = 0; n < M; ++n) direct += std::pow(n + a, -s);
  double x = M + a;
  double value = direct + std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);

  for (int j = 1; j <= J; ++j) {
    // (s)_{2j-1} = s (s+1) ... (s + 2j - 2)
    double poch = 1.0;
    for (int i = 0; i < 2 * j - 1; ++i) poch *= (s + i);
    value += kBernoulli[j - 1] / factorial(2 * j) * poch * std::pow(x, -s - 2 * j + 1);
  }

  // First omitted term bounds the remainder for real s in this range.
  double poch = 1.0;
  for (int i = 0; i < 2 * (J + 1) - 1; ++i) poch *= (s + i);
  double rem =
      std::abs(kBernoulli[J] / factorial(2 * (J + 1)) * poch * std::pow(x, -s - 2 * J - 1));
  if (remainder_estimate) *remainder_estimate = rem;
  return value;
}

double eta_zeta_oracle(const CircleDirac& D) {
  if (D.has_zero_mode()) {
    // Zero mode excluded explicitly; the remaining spectrum {2 pi n, n != 0}
    // is symmetric, so the asymmetry vanishes.
    return 0.0;
  }
  double a = D.theta() / kTwoPi;  // in (0,1)
  double r1 = 0.0, r2 = 0.0;
  // eta(s) = (2 pi)^{-s} (zeta_H(s, a) - zeta_H(s, 1 - a)); at s = 0 the
  // prefactor is 1.
  double value = hurwitz_zeta_em(0.0, a, &r1) - hurwitz_zeta_em(0.0, 1.0 - a, &r2);
  require(r1 + r2 <= 1e-9, "OracleNotConverged",
          "Euler-Maclaurin remainder estimate above 1e-9");
  return value;
}

PeriodicFamily ahat_circle() {
  PeriodicFamily fam(1, Truncation::none);
  fam.add_form(0, Form::from_function(TrigPoly::constant(1, 1.0)));
  return fam;
}

cplx rho_tilde(const PeriodicFamily& gamma, int d) {
  require(d % 2 == 1, "BadParams", "rho_tilde is defined for odd d");
  require(closedness_residual(gamma) <= 1e-12, "NotClosed", "gamma must be closed");
  return integrate_family(family_wedge(ahat_circle(), shift(gamma, d + 1)));
}

GradedBundle::GradedBundle(std::vector<Summand> s) : summands(std::move(s)) {
  require(!summands.empty(), "BadParams", "graded bundle needs at least one summand");
  for (const auto& sm : summands) {
    require(std::abs(std::abs(sm.v) - 1.0) <= 1e-12, "BadHolonomy",
            "holonomy must lie on the unit circle");
    require(sm.eps == 1 || sm.eps == -1, "BadParams", "grading sign must be +1 or -1");
  }
}

CZValue rho_dirac(const GradedBundle& V, const PeriodicFamily& gamma) {
  CZValue acc;
  for (const auto& sm : V.summands) {
    CZValue xi = eta_xi_closed(CircleDirac(sm.v)).xi;
    acc = (sm.eps > 0) ? acc + xi : acc - xi;
  }
  if (!gamma.empty()) acc = acc + reduce(rho_tilde(gamma, 1));
  return acc;
}

CZValue rho_dirac(const GradedBundle& V) {
  return rho_dirac(V, PeriodicFamily(1, Truncation::none));
}

}  // namespace reglab
