#include <doctest.h>

#include "reglab/forms.hpp"
#include "reglab/json_io.hpp"
#include "reglab/rng.hpp"

using namespace reglab;

TEST_CASE("wedge basics") {
  TrigPoly one = TrigPoly::constant(2, 1.0);
  Form dt1 = Form::monomial(2, 0b01, one);
  Form dt2 = Form::monomial(2, 0b10, one);

  CHECK(wedge(dt1, dt1).is_zero());
  CHECK(wedge(dt1, dt2) == wedge(dt2, dt1).scaled(-1.0));

  Rng rng(1);
  TrigPoly f = rng.trigpoly_int(2, 3, 3, 3);
  Form omega = Form::monomial(2, 0b10, rng.trigpoly_int(2, 3, 3, 3));
  Form prod = wedge(Form::from_function(f), omega);
  CHECK(prod.component(0b10) == f * omega.component(0b10));

  CHECK_THROWS_WITH_AS(wedge(dt1, Form::monomial(1, 0b1, TrigPoly::constant(1, 1.0))),
                       doctest::Contains("DimMismatch"), Error);
}

TEST_CASE("exterior_d on a function") {
  Rng rng(2);
  TrigPoly f = rng.trigpoly_int(2, 3, 4, 3);
  Form df = exterior_d(Form::from_function(f));
  CHECK(df.component(0b01) == f.derive(0));
  CHECK(df.component(0b10) == f.derive(1));
  CHECK(exterior_d(df).is_zero());
}

TEST_CASE("exterior_d of e_1 dt1 on T^2") {
  // d(e_{(1,0)} dt1) = -(d/dt2 e) dt1^dt2 sign-normalized: only the dt2^dt1
  // route contributes, and e_{(1,0)} has no t2 dependence, so this vanishes;
  // with n = (1,1) the coefficient is -2 pi i e_n.
  TrigPoly e11 = TrigPoly::character(2, Mode{1, 1});
  Form omega = Form::monomial(2, 0b01, e11);
  Form d = exterior_d(omega);
  TrigPoly expect = e11.derive(1).scaled(-1.0);  // dt2 moved past dt1
  CHECK(d.component(0b11) == expect);

  TrigPoly e10 = TrigPoly::character(2, Mode{1, 0});
  CHECK(exterior_d(Form::monomial(2, 0b01, e10)).is_zero());
}

TEST_CASE("d^2 = 0 and Leibniz exactly") {
  Rng rng(3);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int i = 0; i < 10; ++i) {
      Form f = Form::from_function(rng.trigpoly_int(dim, 4, 4, 4));
      CHECK(exterior_d(exterior_d(f)).is_zero());
      Form a = Form::monomial(dim, 0b01, rng.trigpoly_int(dim, 4, 3, 4));
      Form b = Form::from_function(rng.trigpoly_int(dim, 4, 3, 4));
      Form lhs = exterior_d(wedge(a, b));
      Form rhs = wedge(exterior_d(a), b) + wedge(a, exterior_d(b)).scaled(-1.0);
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("integrate_family selects top degree and sums over p") {
  PeriodicFamily fam(1, Truncation::none);
  fam.add_form(1, Form::monomial(1, 0b1, TrigPoly::constant(1, 1.0)));
  CHECK(integrate_family(fam) == cplx(1.0));

  PeriodicFamily zero_forms(1, Truncation::none);
  zero_forms.add_form(0, Form::from_function(TrigPoly::constant(1, 7.0)));
  CHECK(integrate_family(zero_forms) == cplx(0.0));

  PeriodicFamily both(1, Truncation::none);
  both.add_form(0, Form::monomial(1, 0b1, TrigPoly::constant(1, 1.0)));
  both.add_form(1, Form::monomial(1, 0b1, TrigPoly::constant(1, 1.0)));
  CHECK(integrate_family(both) == cplx(2.0));
}

TEST_CASE("stokes: integrate_family of d vanishes") {
  Rng rng(5);
  PeriodicFamily circle(1, Truncation::none);
  for (int p = -1; p <= 1; ++p)
    circle.add_form(p, Form::from_function(rng.trigpoly_int(1, 4, 4, 3)));
  CHECK(integrate_family(family_d(circle)) == cplx(0.0));

  PeriodicFamily torus(2, Truncation::none);
  for (int p = 0; p <= 1; ++p)
    torus.add_form(p, Form::monomial(2, 0b01, rng.trigpoly_int(2, 4, 4, 3)));
  CHECK(integrate_family(family_d(torus)) == cplx(0.0));
}

TEST_CASE("shift") {
  PeriodicFamily fam(1, Truncation::none);
  fam.add_form(1, Form::monomial(1, 0b1, TrigPoly::constant(1, 2.0)));

  CHECK(shift(fam, 0) == fam);
  PeriodicFamily s2 = shift(fam, 2);
  CHECK(s2.entries().count(2) == 1);
  CHECK(s2.entries().count(1) == 0);
  CHECK(shift(shift(fam, 2), -2) == fam);
  CHECK_THROWS_WITH_AS(shift(fam, 1), doctest::Contains("OddShift"), Error);
}

TEST_CASE("psi_project") {
  PeriodicFamily fam(1, Truncation::none);
  fam.add_form(1, Form::monomial(1, 0b1, TrigPoly::constant(1, 1.0)));  // deg 1 <= p=1
  fam.add_form(0, Form::monomial(1, 0b1, TrigPoly::constant(1, 3.0)));  // deg 1 > p=0
  PeriodicFamily proj = psi_project(fam);
  CHECK(proj.truncation() == Truncation::atmost_p);
  CHECK(proj.entries().count(1) == 1);
  CHECK(proj.entries().count(0) == 0);

  PeriodicFamily empty(1, Truncation::none);
  CHECK(psi_project(empty).empty());
  CHECK_THROWS_WITH_AS(psi_project(proj), doctest::Contains("TruncationViolated"), Error);
}

TEST_CASE("truncation invariants are enforced") {
  PeriodicFamily least(1, Truncation::atleast_p);
  CHECK_THROWS_WITH_AS(least.add_form(2, Form::monomial(1, 0b1, TrigPoly::constant(1, 1.0))),
                       doctest::Contains("TruncationViolated"), Error);
  PeriodicFamily most(1, Truncation::atmost_p);
  CHECK_THROWS_WITH_AS(most.add_form(0, Form::monomial(1, 0b1, TrigPoly::constant(1, 1.0))),
                       doctest::Contains("TruncationViolated"), Error);
}

TEST_CASE("hp_representative drops exact oscillation") {
  // (1 + e_1 + e_{-1}) dt at p=1 reduces to dt.
  TrigPoly c = TrigPoly::constant(1, 1.0) + e1(1) + e1(-1);
  PeriodicFamily fam(1, Truncation::none);
  fam.add_form(1, Form::monomial(1, 0b1, c));
  HPClass h = hp_representative(fam);
  PeriodicFamily expect(1, Truncation::none);
  expect.add_form(1, Form::monomial(1, 0b1, TrigPoly::constant(1, 1.0)));
  CHECK((h.rep() + expect.scaled(-1.0)).max_abs_value() <= 1e-15);

  // Idempotence and the zero family.
  CHECK((hp_representative(h.rep()).rep() + expect.scaled(-1.0)).max_abs_value() <= 1e-15);
  PeriodicFamily zero(1, Truncation::none);
  CHECK(hp_representative(zero).rep().empty());
}

TEST_CASE("hp_representative on T^2 verifies exactness modewise") {
  // Closed oscillatory 1-form: d of a function.
  Rng rng(8);
  TrigPoly f = rng.trigpoly_int(2, 3, 4, 3);
  Form df = exterior_d(Form::from_function(f));
  PeriodicFamily fam(2, Truncation::none);
  fam.add_form(1, df);
  HPClass h = hp_representative(fam);
  CHECK(h.rep().empty());  // exact forms have no constant part

  // A non-closed form is rejected.
  PeriodicFamily bad(2, Truncation::none);
  bad.add_form(0, Form::from_function(TrigPoly::character(2, Mode{1, 0})));
  CHECK_THROWS_WITH_AS(hp_representative(bad), doctest::Contains("NotClosed"), Error);
}

TEST_CASE("form json round trip") {
  Rng rng(13);
  Form f = Form::monomial(2, 0b11, rng.trigpoly(2, 3, 4, 1.0));
  Form g = form_from_json(to_json(f));
  CHECK(g.approx_equal(f, 1e-15));

  PeriodicFamily fam(2, Truncation::atmost_p);
  fam.add_form(2, f);
  fam.add_form(1, Form::monomial(2, 0b10, rng.trigpoly(2, 2, 2, 1.0)));
  PeriodicFamily fam2 = family_from_json(to_json(fam));
  CHECK(fam2.truncation() == fam.truncation());
  CHECK((fam2 + fam.scaled(-1.0)).max_abs_value() <= 1e-15);
}
