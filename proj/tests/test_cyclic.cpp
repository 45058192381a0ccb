#include <doctest.h>

#include "reglab/cyclic.hpp"
#include "reglab/json_io.hpp"
#include "reglab/rng.hpp"

using namespace reglab;

namespace {

CyclicChain random_chain(Rng& rng, int n, int dim) {
  CyclicChain c(n, dim);
  int kmax = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<TrigPoly> word;
    for (int i = 0; i < CyclicChain::word_length(n, k); ++i)
      word.push_back(rng.trigpoly_int(dim, 2, 2, 2));
    c.add_term(k, std::move(word), cplx(double(rng.integer(-2, 2)), double(rng.integer(-2, 2))));
  }
  return c;
}

}  // namespace

TEST_CASE("chain layout validation") {
  CyclicChain odd(3, 1);
  odd.add_term(0, {e1(1), e1(-1)}, 1.0);                    // length 2
  odd.add_term(1, {e1(1), e1(-1), e1(0), e1(2)}, 1.0);      // length 4
  CHECK_THROWS_WITH_AS(odd.add_term(0, {e1(1)}, 1.0), doctest::Contains("DegreeRange"), Error);
  CHECK_THROWS_WITH_AS(odd.add_term(2, {e1(1)}, 1.0), doctest::Contains("DegreeRange"), Error);

  CyclicChain even(2, 1);
  even.add_term(0, {e1(1)}, 1.0);                 // length 1
  even.add_term(1, {e1(1), e1(-1), e1(0)}, 1.0);  // length 3
}

TEST_CASE("boundary_b on degree-1 chains vanishes (commutativity)") {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    LambdaChain c = lambda2(rng.trigpoly(1, 3, 3, 1.0), rng.trigpoly(1, 3, 3, 1.0),
                            rng.complex_box(1.0));
    CHECK(boundary_b(c).is_zero());
  }
}

TEST_CASE("boundary_b definition in degree 2") {
  TrigPoly f0 = e1(1), f1 = e1(2), f2 = e1(-1);
  LambdaChain c(2, 1);
  c.add_term({f0, f1, f2}, 1.0);
  LambdaChain b = boundary_b(c);
  LambdaChain expect(1, 1);
  expect.add_term({f0 * f1, f2}, 1.0);
  expect.add_term({f0, f1 * f2}, -1.0);
  expect.add_term({f2 * f0, f1}, 1.0);
  CHECK((b + expect.scaled(-1.0)).is_zero());
}

TEST_CASE("b o b = 0 exactly") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    int n = rng.integer(2, 4);
    LambdaChain c(n, 1);
    for (int t = 0; t < 2; ++t) {
      std::vector<TrigPoly> word;
      for (int j = 0; j <= n; ++j) word.push_back(rng.trigpoly_int(1, 2, 2, 2));
      c.add_term(word, cplx(double(rng.integer(-3, 3)), double(rng.integer(-3, 3))));
    }
    CHECK(boundary_b(boundary_b(c)).is_zero());
  }
}

TEST_CASE("cyclic coinvariant canonicalization") {
  // [f (x) f] in odd degree is 2-torsion and collapses to zero.
  LambdaChain c(1, 1);
  c.add_term({e1(1), e1(1)}, 3.0);
  CHECK(c.is_zero());

  // Rotation with sign: [f0 (x) f1] = -[f1 (x) f0] in degree 1.
  LambdaChain a = lambda2(e1(1), e1(2));
  LambdaChain b = lambda2(e1(2), e1(1));
  CHECK((a + b).is_zero());
}

TEST_CASE("lambda_project keeps the top column") {
  CyclicChain c(3, 1);
  c.add_term(0, {e1(1), e1(-1)}, 2.0);
  c.add_term(1, {e1(1), e1(2), e1(-1), e1(-2)}, 5.0);
  LambdaChain l = lambda_project(c);
  REQUIRE(l.terms().size() == 1);
  CHECK(l.terms()[0].word.size() == 4);

  CyclicChain single(1, 1);
  single.add_term(0, {e1(0), e1(1)}, 1.0);
  CHECK(lambda_project(single).terms().size() == 1);

  CyclicChain zero(1, 1);
  CHECK(lambda_project(zero).is_zero());
}

TEST_CASE("pi_dd placement and coefficients") {
  // n=1: f0 (x) f1 -> (1/1!) f0 df1 at p=1.
  CyclicChain c(1, 1);
  c.add_term(0, {e1(-1), e1(1)}, 1.0);
  PeriodicFamily fam = pi_dd(c);
  CHECK(fam.truncation() == Truncation::atmost_p);
  REQUIRE(fam.entries().count(1) == 1);
  Form expected = wedge(Form::from_function(e1(-1)), exterior_d(Form::from_function(e1(1))));
  CHECK((fam.entries().at(1)[0] + expected.scaled(-1.0)).is_zero());

  // f0 (x) 1 maps to zero.
  CyclicChain c2(1, 1);
  c2.add_term(0, {e1(1), TrigPoly::constant(1, 1.0)}, 1.0);
  CHECK(pi_dd(c2).empty());

  // n=3 with both columns on T^3: entries at p=2 and p=3 with 1/1! and 1/3!.
  CyclicChain c3(3, 3);
  TrigPoly a = TrigPoly::character(3, Mode{1, 0, 0});
  TrigPoly b = TrigPoly::character(3, Mode{0, 1, 0});
  TrigPoly d = TrigPoly::character(3, Mode{0, 0, 1});
  TrigPoly e = TrigPoly::character(3, Mode{1, 1, 0});
  c3.add_term(0, {a, b}, 1.0);
  c3.add_term(1, {a, b, d, e}, 1.0);
  PeriodicFamily fam3 = pi_dd(c3);
  REQUIRE(fam3.entries().count(2) == 1);
  REQUIRE(fam3.entries().count(3) == 1);
  Form top = wedge(wedge(wedge(Form::from_function(a), exterior_d(Form::from_function(b))),
                         exterior_d(Form::from_function(d))),
                   exterior_d(Form::from_function(e)))
                 .scaled(1.0 / 6.0);
  CHECK((fam3.entries().at(3)[0] + top.scaled(-1.0)).max_abs_value() <= 1e-18);
}

TEST_CASE("pi_minus lands above the truncation") {
  CyclicChain c(1, 1);
  c.add_term(0, {e1(-2), e1(2)}, 1.0);
  PeriodicFamily fam = pi_minus(c);
  CHECK(fam.truncation() == Truncation::atleast_p);
  CHECK(fam.entries().count(1) == 1);

  // Constant second factor: df = 0.
  CyclicChain c2(1, 1);
  c2.add_term(0, {e1(1), TrigPoly::constant(1, 2.0)}, 1.0);
  CHECK(pi_minus(c2).empty());
}

TEST_CASE("chain map against the family differential") {
  Rng rng(7);
  for (int dim = 1; dim <= 2; ++dim) {
    for (int n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        CyclicChain c = random_chain(rng, n, dim);
        PeriodicFamily lhs = pi_dd(total_differential(c));
        PeriodicFamily rhs = family_d(pi_dd(c));
        CHECK((lhs + rhs.scaled(-1.0)).max_abs_value() == 0.0);
      }
    }
  }
}

TEST_CASE("pi_d_iso on the circle") {
  // e_{-1} (x) e_1 maps to the constant 2 pi i dt at p=1.
  CyclicChain c(1, 1);
  c.add_term(0, {e1(-1), e1(1)}, 1.0);
  HPClass h = pi_d_iso(c, 1);
  REQUIRE(h.rep().entries().count(1) == 1);
  const Form& f = h.rep().entries().at(1)[0];
  CHECK(f.component(0b1) == TrigPoly::constant(1, 1.0, 1));  // 2 pi i

  // 1 (x) f is exact: the class vanishes.
  CyclicChain c2(1, 1);
  c2.add_term(0, {TrigPoly::constant(1, 1.0), e1(3)}, 1.0);
  CHECK(pi_d_iso(c2, 1).rep().empty());

  // Linearity under scaling.
  CyclicChain c3 = c.scaled(cplx(0.0, 2.0));
  HPClass h3 = pi_d_iso(c3, 1);
  CHECK((h3.rep() + h.rep().scaled(cplx(0.0, -2.0))).max_abs_value() <= 1e-18);
}

TEST_CASE("pi_d_iso rejects non-cycles") {
  // A degree-3 chain whose top word has a nonzero boundary.
  CyclicChain c(3, 3);
  TrigPoly a = TrigPoly::character(3, Mode{1, 0, 0});
  TrigPoly b = TrigPoly::character(3, Mode{0, 2, 0});
  TrigPoly d = TrigPoly::character(3, Mode{0, 0, 1});
  TrigPoly e = TrigPoly::character(3, Mode{1, 1, 1});
  c.add_term(1, {a, b, d, e}, 1.0);
  CHECK_THROWS_WITH_AS(pi_d_iso(c, 3), doctest::Contains("NotACycle"), Error);
}

TEST_CASE("chain json round trip") {
  Rng rng(15);
  CyclicChain c = random_chain(rng, 3, 2);
  CyclicChain c2 = chain_from_json(to_json(c));
  CHECK(c2.n() == c.n());
  double err = (pi_dd(c2) + pi_dd(c).scaled(-1.0)).max_abs_value();
  CHECK(err <= 1e-15);
}
