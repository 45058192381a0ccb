#pragma once

#include <vector>

#include "reglab/forms.hpp"

namespace reglab {

/// Product class exp(f) cup u_2 cup ... cup u_d on T^k; requires k <= d-1.
struct ProductClass {
  TrigPoly f;
  std::vector<UnitFunction> units;

  ProductClass(TrigPoly f_, std::vector<UnitFunction> units_);

  int dim() const { return f.dim(); }
  int d() const { return 1 + int(units.size()); }
};

/// d log u / (2 pi i) = w dt + dg/(2 pi i), a 1-form.
Form reg_unit(const UnitFunction& u);

/// d log u = 2 pi i w dt + dg.
Form dlog(const UnitFunction& u);

/// The transgressed curvature form
///   (1/(2 pi i)^d) f dlog(u_2) ^ ... ^ dlog(u_d),
/// a (d-1)-form.
Form reg_product_form(const ProductClass& x);

/// Top-dimensional evaluation on T^{d-1}: the integral of the curvature form
/// reduced modulo Z. Requires k = d-1.
CZValue sigma_eval(const ProductClass& x);

/// With dim+1 unit factors the curvature form has degree dim+1 and must be
/// the zero form; returns it and throws "VanishingViolated" otherwise.
Form sigma_vanishing_extra_factor(const TrigPoly& f, const std::vector<UnitFunction>& units);

/// Flat-evaluation homomorphism on the circle: [z] -> [orientation_sign * (-z)];
/// the circle with the non-bounding spin structure contributes the fixed -1.
CZValue r_dirac_compose(const CZValue& sigma, int orientation_sign);

}  // namespace reglab
