#pragma once

#include <complex>

#include "reglab/error.hpp"

namespace reglab {

using cplx = std::complex<double>;

/// Complex number considered modulo the integers. The stored representative
/// has real part in [0,1); the imaginary part is unrestricted.
class CZValue {
public:
  CZValue() = default;

  const cplx& rep() const noexcept { return rep_; }

  /// Canonical reduction of an arbitrary finite complex number.
  static CZValue reduce(cplx z);

  CZValue operator+(const CZValue& o) const { return reduce(rep_ + o.rep_); }
  CZValue operator-(const CZValue& o) const { return reduce(rep_ - o.rep_); }
  CZValue operator-() const { return reduce(-rep_); }

private:
  explicit CZValue(cplx canonical) : rep_(canonical) {}
  cplx rep_{0.0, 0.0};
};

struct TolerancePolicy {
  double abs_tol = 1e-9;  // default for exact-quadrature scenarios
  double rel_tol = 0.0;

  void validate() const {
    require(std::isfinite(abs_tol) && std::isfinite(rel_tol) && abs_tol > 0 && rel_tol >= 0,
            "BadTolerance", "abs_tol must be finite positive, rel_tol finite nonnegative");
  }
};

/// Default policy for truncation-limited (operator window) scenarios.
inline TolerancePolicy truncation_tolerance() { return TolerancePolicy{1e-5, 0.0}; }

CZValue reduce(cplx z);

/// Distance between two canonical representatives modulo Z (bounded search
/// over the shifts -1, 0, +1, which suffices for canonical reps).
double cz_dist(const CZValue& a, const CZValue& b);

bool eq_mod_z(const CZValue& a, const CZValue& b, const TolerancePolicy& tol);

}  // namespace reglab
