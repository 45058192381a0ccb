#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reglab/trigpoly.hpp"

namespace reglab {

/// Homogeneous differential form on T^k with TrigPoly coefficients.
/// Components are keyed by an axis bitmask; antisymmetry is structural
/// (only the canonically ordered tuple is stored). A declared degree above
/// k is allowed and necessarily has no components: that is the zero form of
/// overflowing degree.
class Form {
public:
  Form() : dim_(1), degree_(0) {}
  Form(int dim, int degree);

  static Form from_function(const TrigPoly& f);           // degree 0
  static Form monomial(int dim, std::uint8_t axes_mask, const TrigPoly& coeff);

  int dim() const noexcept { return dim_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return comps_.empty(); }

  const std::map<std::uint8_t, TrigPoly>& components() const noexcept { return comps_; }
  TrigPoly component(std::uint8_t axes_mask) const;

  void add_component(std::uint8_t axes_mask, const TrigPoly& coeff);

  Form operator+(const Form& o) const;
  Form operator-() const;
  Form operator-(const Form& o) const { return *this + (-o); }
  Form scaled(cplx c) const;
  Form scaled_twopii(int k) const;

  double max_abs_value() const;

  bool operator==(const Form& o) const;
  bool approx_equal(const Form& o, double tol) const;

private:
  void trim();

  int dim_;
  int degree_;
  std::map<std::uint8_t, TrigPoly> comps_;
};

/// Graded-commutative exterior product.
Form wedge(const Form& a, const Form& b);

/// de Rham differential (2*pi*i factors included via TrigPoly::derive).
Form exterior_d(const Form& a);

enum class Truncation { none, atleast_p, atmost_p };

std::string to_string(Truncation t);
Truncation truncation_from_string(const std::string& s);

/// Finitely supported family p -> forms, the container for the two-periodic
/// complex and its degree-truncated variants:
///   atleast_p : entry p holds degrees >= p   (negative/connective side)
///   atmost_p  : entry p holds degrees <= p   (quotient side)
///   none      : no constraint                (two-periodic side)
/// Each entry keeps at most one form per degree.
class PeriodicFamily {
public:
  PeriodicFamily() : dim_(1), trunc_(Truncation::none) {}
  PeriodicFamily(int dim, Truncation trunc) : dim_(dim), trunc_(trunc) {}

  int dim() const noexcept { return dim_; }
  Truncation truncation() const noexcept { return trunc_; }
  bool empty() const noexcept { return entries_.empty(); }

  const std::map<int, std::vector<Form>>& entries() const noexcept { return entries_; }

  /// Accumulate a form into entry p; enforces the truncation invariant.
  void add_form(int p, const Form& f);

  PeriodicFamily operator+(const PeriodicFamily& o) const;
  PeriodicFamily scaled(cplx c) const;

  double max_abs_value() const;
  bool approx_zero(double tol) const { return max_abs_value() <= tol; }
  bool operator==(const PeriodicFamily& o) const;

private:
  int dim_;
  Truncation trunc_;
  std::map<int, std::vector<Form>> entries_;
};

/// sum_p of the integral of the top-degree (= dim) component of entry p.
cplx integrate_family(const PeriodicFamily& fam);

/// Periodicity shift by the even integer two_k: entry p of the result is
/// entry p - two_k/2 of the input.
PeriodicFamily shift(const PeriodicFamily& fam, int two_k);

/// Componentwise projection onto degrees <= p (two-periodic -> quotient).
PeriodicFamily psi_project(const PeriodicFamily& fam);

/// Componentwise de Rham differential honoring the truncation.
PeriodicFamily family_d(const PeriodicFamily& fam);

/// Entrywise wedge with convolution over the p-index.
PeriodicFamily family_wedge(const PeriodicFamily& a, const PeriodicFamily& b);

double closedness_residual(const PeriodicFamily& fam);

/// Closed family, canonical representative of its cohomology class.
class HPClass {
public:
  explicit HPClass(PeriodicFamily rep);
  const PeriodicFamily& rep() const noexcept { return rep_; }

private:
  PeriodicFamily rep_;
};

/// Harmonic (constant-coefficient) representative of a closed family on the
/// torus. Verifies closedness and that the dropped oscillatory part is exact
/// by constructing a primitive mode by mode.
HPClass hp_representative(const PeriodicFamily& fam);

}  // namespace reglab
