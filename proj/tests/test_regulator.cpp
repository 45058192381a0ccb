#include <doctest.h>

#include "reglab/deligne.hpp"
#include "reglab/regulator.hpp"
#include "reglab/rng.hpp"

using namespace reglab;

namespace {
const TolerancePolicy kTight{1e-12, 0.0};

UnitFunction circle_unit(Rng& rng, int winding, int deg, double radius) {
  return UnitFunction({winding, 0, 0}, rng.trigpoly(1, deg, 2, radius));
}
}  // namespace

TEST_CASE("reg_unit") {
  // Winding-1 character maps to dt.
  UnitFunction z({1, 0, 0}, TrigPoly(1));
  Form r = reg_unit(z);
  CHECK(r.component(0b1) == TrigPoly::constant(1, 1.0));

  // exp(g) maps to dg/(2 pi i).
  Rng rng(4);
  TrigPoly g = rng.trigpoly_int(1, 3, 3, 3);
  UnitFunction eg({0, 0, 0}, g);
  CHECK(reg_unit(eg).component(0b1) == g.derive(0).scaled_twopii(-1));

  // Constants map to zero.
  UnitFunction c({0, 0, 0}, TrigPoly::constant(1, cplx(0.3, 0.7)));
  CHECK(reg_unit(c).is_zero());
}

TEST_CASE("reg_product_form examples") {
  // d=2 on the circle, f=1, u the winding-1 character: (1/2 pi i) dt.
  UnitFunction z({1, 0, 0}, TrigPoly(1));
  ProductClass x(TrigPoly::constant(1, 1.0), {z});
  Form curv = reg_product_form(x);
  CHECK(curv.component(0b1) == TrigPoly::constant(1, 1.0, -1));

  // Linearity in f.
  TrigPoly f = e1(1) + e1(-1);
  Form curv2 = reg_product_form(ProductClass(f, {z}));
  CHECK(curv2.component(0b1) == f.scaled_twopii(-1));

  // d=3 on T^2 with the two coordinate characters: (1/2 pi i) dt1 ^ dt2.
  TrigPoly one2 = TrigPoly::constant(2, 1.0);
  UnitFunction z1({1, 0, 0}, TrigPoly(2));
  UnitFunction z2({0, 1, 0}, TrigPoly(2));
  Form curv3 = reg_product_form(ProductClass(one2, {z1, z2}));
  CHECK(curv3.component(0b11) == TrigPoly::constant(2, 1.0, -1));
}

TEST_CASE("sigma_eval examples") {
  UnitFunction z({1, 0, 0}, TrigPoly(1));

  // f = 1: [1/(2 pi i)], purely imaginary representative.
  CZValue s = sigma_eval(ProductClass(TrigPoly::constant(1, 1.0), {z}));
  CHECK(s.rep().real() == 0.0);
  CHECK(s.rep().imag() == doctest::Approx(-1.0 / kTwoPi).epsilon(1e-15));

  // Zero-mean f pairs to zero against dt.
  CZValue s2 = sigma_eval(ProductClass(e1(2) + e1(-1), {z}));
  CHECK(eq_mod_z(s2, reduce(0.0), kTight));

  // u = exp(e_1): the integrand is exact.
  UnitFunction u = exp_unit(e1(1), 1, 1e-12);
  CZValue s3 = sigma_eval(ProductClass(TrigPoly::constant(1, 1.0), {u}));
  CHECK(eq_mod_z(s3, reduce(0.0), kTight));

  // Dimension guard: evaluation needs k = d-1.
  TrigPoly one2 = TrigPoly::constant(2, 1.0);
  UnitFunction z1({1, 0, 0}, TrigPoly(2));
  CHECK_THROWS_WITH_AS(sigma_eval(ProductClass(one2, {z1})),
                       doctest::Contains("DimensionMismatchForEvaluation"), Error);
}

TEST_CASE("sigma additivity in f") {
  Rng rng(6);
  UnitFunction u = circle_unit(rng, 1, 3, 0.4);
  TrigPoly f1 = rng.trigpoly(1, 4, 3, 0.8);
  TrigPoly f2 = rng.trigpoly(1, 4, 3, 0.8);
  CZValue lhs = sigma_eval(ProductClass(f1 + f2, {u}));
  CZValue rhs = sigma_eval(ProductClass(f1, {u})) + sigma_eval(ProductClass(f2, {u}));
  CHECK(eq_mod_z(lhs, rhs, kTight));
}

TEST_CASE("sigma is alternating in the unit factors") {
  Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    TrigPoly f = rng.trigpoly(2, 2, 2, 0.5);
    UnitFunction a(std::array<int, 3>{rng.integer(-2, 2), 0, 0}, rng.trigpoly(2, 2, 2, 0.3));
    UnitFunction b(std::array<int, 3>{0, rng.integer(-2, 2), 0}, rng.trigpoly(2, 2, 2, 0.3));
    CZValue ab = sigma_eval(ProductClass(f, {a, b}));
    CZValue ba = sigma_eval(ProductClass(f, {b, a}));
    CHECK(eq_mod_z(ab, -ba, TolerancePolicy{1e-10, 0.0}));
  }
}

TEST_CASE("extra factor vanishing") {
  Rng rng(23);
  TrigPoly f = rng.trigpoly(1, 3, 3, 0.7);
  std::vector<UnitFunction> units = {circle_unit(rng, 1, 2, 0.4), circle_unit(rng, -1, 2, 0.4)};
  CHECK(sigma_vanishing_extra_factor(f, units).is_zero());
  CHECK_THROWS_WITH_AS(sigma_vanishing_extra_factor(f, {units[0]}),
                       doctest::Contains("DimensionMismatchForEvaluation"), Error);
}

TEST_CASE("flat evaluation composition") {
  CHECK(eq_mod_z(r_dirac_compose(reduce(0.0), 1), reduce(0.0), kTight));
  CZValue z = reduce(cplx(0.3, -0.2));
  CHECK(eq_mod_z(r_dirac_compose(z, 1), -z, kTight));
  CHECK(eq_mod_z(r_dirac_compose(r_dirac_compose(z, -1), -1), z, kTight));
}

TEST_CASE("sigma agrees with the Deligne pairing for exp units") {
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    TrigPoly g1 = rng.trigpoly(1, 4, 3, 0.6);
    UnitFunction u1 = exp_unit(g1, std::max(1, g1.degree()), 1e-9);
    UnitFunction u2 = circle_unit(rng, rng.integer(-2, 2), 4, 0.5);
    CZValue sigma = sigma_eval(ProductClass(g1, {u2}));
    CZValue pairing = pairing_closed_form(u1, u2);
    CHECK(eq_mod_z(sigma, pairing, TolerancePolicy{1e-10, 0.0}));
  }
}
