#include "reglab/regulator.hpp"

namespace reglab {

ProductClass::ProductClass(TrigPoly f_, std::vector<UnitFunction> units_)
    : f(std::move(f_)), units(std::move(units_)) {
  for (const auto& u : units)
    require(u.dim() == f.dim(), "DimMismatch", "all product factors must share the torus");
  require(f.dim() <= d() - 1, "DimensionMismatchForEvaluation",
          "product class needs dim(X) <= d-1");
}

Form dlog(const UnitFunction& u) {
  Form r(u.dim(), 1);
  for (int axis = 0; axis < u.dim(); ++axis) {
    TrigPoly c(u.dim());
    if (u.winding()[std::size_t(axis)] != 0)
      c = TrigPoly::constant(u.dim(), double(u.winding()[std::size_t(axis)]), 1);
    c += u.logpart().derive(axis);
    r.add_component(std::uint8_t(1u << axis), c);
  }
  return r;
}

Form reg_unit(const UnitFunction& u) { return dlog(u).scaled_twopii(-1); }

Form reg_product_form(const ProductClass& x) {
  int d = x.d();
  Form acc = Form::from_function(x.f);
  for (const auto& u : x.units) acc = wedge(acc, dlog(u));
  return acc.scaled_twopii(-d);
}

CZValue sigma_eval(const ProductClass& x) {
  require(x.dim() == x.d() - 1, "DimensionMismatchForEvaluation",
          "sigma evaluates top-dimensional classes only (k = d-1)");
  Form curv = reg_product_form(x);
  std::uint8_t top = std::uint8_t((1u << x.dim()) - 1);
  return reduce(curv.component(top).integrate());
}

Form sigma_vanishing_extra_factor(const TrigPoly& f, const std::vector<UnitFunction>& units) {
  require(int(units.size()) == f.dim() + 1, "DimensionMismatchForEvaluation",
          "expected dim+1 unit factors");
  ProductClass x(f, units);
  Form curv = reg_product_form(x);
  require(curv.is_zero(), "VanishingViolated",
          "degree-overflow curvature form is unexpectedly nonzero");
  return curv;
}

CZValue r_dirac_compose(const CZValue& sigma, int orientation_sign) {
  require(orientation_sign == 1 || orientation_sign == -1, "BadParams",
          "orientation sign must be +1 or -1");
  const double sign_flat = -1.0;  // non-bounding spin circle
  return reduce(double(orientation_sign) * sign_flat * sigma.rep());
}

}  // namespace reglab
