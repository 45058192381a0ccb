#pragma once

#include <array>
#include <compare>
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "reglab/czvalue.hpp"
#include "reglab/error.hpp"

namespace reglab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// (2*pi*i)^p, evaluated with the exact quarter-turn branch for i^p.
cplx twopii_pow(int p);

/// Fourier mode on T^k, k <= 3; unused trailing coordinates stay zero.
struct Mode {
  std::array<int, 3> n{0, 0, 0};

  Mode() = default;
  Mode(std::initializer_list<int> v) {
    int i = 0;
    for (int x : v) n[std::size_t(i++)] = x;
  }

  auto operator<=>(const Mode&) const = default;
  int& operator[](int i) { return n[std::size_t(i)]; }
  int operator[](int i) const { return n[std::size_t(i)]; }
  int norm_inf() const;
  Mode operator+(const Mode& o) const {
    Mode r;
    for (int i = 0; i < 3; ++i) r.n[std::size_t(i)] = n[std::size_t(i)] + o.n[std::size_t(i)];
    return r;
  }
  Mode operator-() const {
    Mode r;
    for (int i = 0; i < 3; ++i) r.n[std::size_t(i)] = -n[std::size_t(i)];
    return r;
  }
};

/// Finitely supported Fourier series on T^k with coordinates in [0,1)^k and
/// characters e_n(t) = exp(2*pi*i*<n,t>).
///
/// Stored coefficients carry a common prefactor (2*pi*i)^scale: the value of
/// the polynomial is (2*pi*i)^scale * sum_n c_n e_n. Differentiation only
/// bumps the scale and multiplies coefficients by integers, so chains of
/// products and derivatives of integer-coefficient inputs stay exact in
/// double arithmetic; the transcendental factor enters once, on evaluation.
class TrigPoly {
public:
  TrigPoly() : dim_(1) {}
  explicit TrigPoly(int dim);

  static TrigPoly constant(int dim, cplx c, int scale = 0);
  static TrigPoly character(int dim, Mode n, cplx c = 1.0);

  int dim() const noexcept { return dim_; }
  int scale() const noexcept { return scale_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const;  // max ||n||_inf over the support, 0 for the zero poly

  const std::map<Mode, cplx>& coeffs() const noexcept { return coeffs_; }

  /// Stored coefficient (without the (2*pi*i)^scale prefactor).
  cplx raw_coeff(Mode n) const;
  /// Coefficient as a number, prefactor included.
  cplx coeff_value(Mode n) const { return raw_coeff(n) * twopii_pow(scale_); }

  void set_raw_coeff(Mode n, cplx c);
  void add_raw_coeff(Mode n, cplx c);

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator-(const TrigPoly& o) const;
  TrigPoly operator-() const;
  TrigPoly operator*(const TrigPoly& o) const;  // coefficient convolution

  TrigPoly scaled(cplx c) const;
  /// Multiply by (2*pi*i)^k without touching stored coefficients.
  TrigPoly scaled_twopii(int k) const;
  /// Re-express with the given prefactor exponent (materializes the ratio).
  TrigPoly with_scale(int target) const;

  /// d/dt_axis including the 2*pi*i factor: coefficient at n picks up
  /// 2*pi*i*n_axis.
  TrigPoly derive(int axis) const;

  /// Integral over the unit-volume torus: the zero-mode coefficient.
  cplx integrate() const;

  cplx eval(const std::array<double, 3>& t) const;
  cplx eval1(double t) const { return eval({t, 0.0, 0.0}); }

  double max_abs_value() const;    // max materialized |coefficient|
  double total_abs_value() const;  // sum of materialized |coefficient|

  /// Structural comparison used for canonical word ordering; total order.
  std::strong_ordering cmp(const TrigPoly& o) const;
  bool operator==(const TrigPoly& o) const { return cmp(o) == std::strong_ordering::equal; }

  bool approx_equal(const TrigPoly& o, double tol) const;

private:
  void trim();

  int dim_;
  int scale_ = 0;
  std::map<Mode, cplx> coeffs_;
};

/// Dimension-1 character e_n.
inline TrigPoly e1(int n, cplx c = 1.0) { return TrigPoly::character(1, Mode{n}, c); }

/// Nowhere-vanishing function on T^k stored as
///   u(t) = exp(2*pi*i*<w,t>) * exp(g(t)),
/// with w the winding vector and g a trig polynomial.
class UnitFunction {
public:
  UnitFunction() : winding_{0, 0, 0}, logpart_(1) {}
  UnitFunction(std::array<int, 3> winding, TrigPoly logpart);

  int dim() const { return logpart_.dim(); }
  const std::array<int, 3>& winding() const noexcept { return winding_; }
  int winding1() const { return winding_[0]; }
  const TrigPoly& logpart() const noexcept { return logpart_; }

  cplx eval(const std::array<double, 3>& t) const;
  cplx eval1(double t) const { return eval({t, 0.0, 0.0}); }

  UnitFunction operator*(const UnitFunction& o) const;
  UnitFunction inverse() const;

private:
  std::array<int, 3> winding_;
  TrigPoly logpart_;
};

/// The unit exp(f) with zero winding. Validates on a 4*out_degree sampling
/// grid that the stored representation reproduces exp(f) to tail_tol.
UnitFunction exp_unit(const TrigPoly& f, int out_degree, double tail_tol);

struct LogUnitResult {
  std::array<int, 3> winding{0, 0, 0};
  TrigPoly logpart;
};

/// Inverse of the unit encoding: recovers (winding, g) from samples of a
/// nonvanishing function on the uniform grid with samples_per_period points
/// per axis. Winding by continuous-argument tracking along each axis, g by
/// discrete Fourier analysis of the tracked logarithm (principal branch at
/// the base point).
LogUnitResult log_unit(int samples_per_period,
                       const std::function<cplx(const std::array<double, 3>&)>& u, int dim);

std::array<int, 3> recompute_winding(const UnitFunction& u, int samples_per_period = 64);

/// Fourier coefficients of u itself (not of its logarithm), dimension 1 only.
/// The expansion is truncated at |n| <= max_degree; if the dropped tail
/// exceeds tail_tol the error code is "ToeplitzBandwidth".
TrigPoly expand_unit_coeffs(const UnitFunction& u, int max_degree, double tail_tol);

}  // namespace reglab
