#include "reglab/czvalue.hpp"

#include <cmath>

namespace reglab {

CZValue CZValue::reduce(cplx z) {
  require(std::isfinite(z.real()) && std::isfinite(z.imag()), "NonFiniteValue",
          "cannot reduce a non-finite value modulo Z");
  double re = z.real() - std::floor(z.real());
  if (re >= 1.0) re -= 1.0;  // guards the floor(1.0 - eps) rounding corner
  if (re < 0.0) re = 0.0;
  return CZValue(cplx(re, z.imag()));
}

CZValue reduce(cplx z) { return CZValue::reduce(z); }

double cz_dist(const CZValue& a, const CZValue& b) {
  double best = std::abs(a.rep() - b.rep());
  for (int n : {-1, 1}) {
    best = std::min(best, std::abs(a.rep() - b.rep() - cplx(double(n), 0.0)));
  }
  return best;
}

bool eq_mod_z(const CZValue& a, const CZValue& b, const TolerancePolicy& tol) {
  tol.validate();
  return cz_dist(a, b) <= tol.abs_tol;
}

}  // namespace reglab
