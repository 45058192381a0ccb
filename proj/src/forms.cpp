#include "reglab/forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace reglab {

namespace {

int popcount8(std::uint8_t m) { return std::popcount(unsigned(m)); }

// Sign of merging two disjoint ordered tuples: (-1)^{#inversions} when the
// concatenation (a-tuple, b-tuple) is sorted.
int merge_sign(std::uint8_t a, std::uint8_t b) {
  int inv = 0;
  for (int j = 0; j < 8; ++j) {
    if (!(b & (1u << j))) continue;
    for (int i = j + 1; i < 8; ++i)
      if (a & (1u << i)) ++inv;
  }
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
  require(dim >= 1 && dim <= 3, "DimRange", "torus dimension must be 1..3");
  require(degree >= 0, "DegreeRange", "form degree must be nonnegative");
}

Form Form::from_function(const TrigPoly& f) {
  Form w(f.dim(), 0);
  w.add_component(0, f);
  return w;
}

Form Form::monomial(int dim, std::uint8_t axes_mask, const TrigPoly& coeff) {
  Form w(dim, popcount8(axes_mask));
  w.add_component(axes_mask, coeff);
  return w;
}

TrigPoly Form::component(std::uint8_t axes_mask) const {
  auto it = comps_.find(axes_mask);
  return it == comps_.end() ? TrigPoly(dim_) : it->second;
}

void Form::add_component(std::uint8_t axes_mask, const TrigPoly& coeff) {
  require(popcount8(axes_mask) == degree_, "DegreeRange",
          "axis tuple size does not match the form degree");
  require((axes_mask >> dim_) == 0, "AxisRange", "axis beyond the torus dimension");
  require(coeff.dim() == dim_, "DimMismatch", "coefficient dimension mismatch");
  auto it = comps_.find(axes_mask);
  if (it == comps_.end()) {
    if (!coeff.is_zero()) comps_[axes_mask] = coeff;
  } else {
    it->second += coeff;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

Form Form::operator+(const Form& o) const {
  require(dim_ == o.dim_ && degree_ == o.degree_, "DegreeRange",
          "adding forms of different degree or dimension");
  Form r = *this;
  for (const auto& [m, c] : o.comps_) r.add_component(m, c);
  return r;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [m, c] : r.comps_) c = -c;
  return r;
}

Form Form::scaled(cplx s) const {
  Form r = *this;
  for (auto& [m, c] : r.comps_) c = c.scaled(s);
  r.trim();
  return r;
}

Form Form::scaled_twopii(int k) const {
  Form r = *this;
  for (auto& [m, c] : r.comps_) c = c.scaled_twopii(k);
  return r;
}

void Form::trim() {
  for (auto it = comps_.begin(); it != comps_.end();) {
    if (it->second.is_zero())
      it = comps_.erase(it);
    else
      ++it;
  }
}

double Form::max_abs_value() const {
  double m = 0.0;
  for (const auto& [mask, c] : comps_) m = std::max(m, c.max_abs_value());
  return m;
}

bool Form::operator==(const Form& o) const {
  if (dim_ != o.dim_) return false;
  if (is_zero() && o.is_zero()) return true;  // zero forms of any degree agree
  if (degree_ != o.degree_) return false;
  return comps_ == o.comps_;
}

bool Form::approx_equal(const Form& o, double tol) const {
  if (dim_ != o.dim_) return false;
  if (degree_ != o.degree_) return is_zero() ? o.max_abs_value() <= tol
                                             : (o.is_zero() && max_abs_value() <= tol);
  Form d = *this - o;
  return d.max_abs_value() <= tol;
}

Form wedge(const Form& a, const Form& b) {
  require(a.dim() == b.dim(), "DimMismatch", "wedge of forms on different tori");
  Form r(a.dim(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.dim()) return r;  // overflow degree: zero form
  for (const auto& [ma, ca] : a.components()) {
    for (const auto& [mb, cb] : b.components()) {
      if (ma & mb) continue;
      int sgn = merge_sign(ma, mb);
      TrigPoly c = ca * cb;
      if (sgn < 0) c = -c;
      r.add_component(std::uint8_t(ma | mb), c);
    }
  }
  return r;
}

Form exterior_d(const Form& a) {
  Form r(a.dim(), a.degree() + 1);
  if (a.degree() + 1 > a.dim()) return r;
  for (const auto& [mask, c] : a.components()) {
    for (int axis = 0; axis < a.dim(); ++axis) {
      std::uint8_t bit = std::uint8_t(1u << axis);
      if (mask & bit) continue;
      // dt_axis moves past the tuple entries below it.
      int below = 0;
      for (int i = 0; i < axis; ++i)
        if (mask & (1u << i)) ++below;
      TrigPoly dc = c.derive(axis);
      if (below % 2 != 0) dc = -dc;
      r.add_component(std::uint8_t(mask | bit), dc);
    }
  }
  return r;
}

std::string to_string(Truncation t) {
  switch (t) {
    case Truncation::none: return "none";
    case Truncation::atleast_p: return "atleast_p";
    case Truncation::atmost_p: return "atmost_p";
  }
  return "none";
}

Truncation truncation_from_string(const std::string& s) {
  if (s == "none") return Truncation::none;
  if (s == "atleast_p") return Truncation::atleast_p;
  if (s == "atmost_p") return Truncation::atmost_p;
  fail("BadParams", "unknown truncation tag: " + s);
}

void PeriodicFamily::add_form(int p, const Form& f) {
  require(f.dim() == dim_, "DimMismatch", "form dimension mismatch in family");
  if (f.is_zero()) return;
  if (trunc_ == Truncation::atleast_p)
    require(f.degree() >= p, "TruncationViolated", "degree below p in an atleast_p family");
  if (trunc_ == Truncation::atmost_p)
    require(f.degree() <= p, "TruncationViolated", "degree above p in an atmost_p family");
  auto& list = entries_[p];
  for (auto& g : list) {
    if (g.degree() == f.degree()) {
      g = g + f;
      list.erase(std::remove_if(list.begin(), list.end(),
                                [](const Form& h) { return h.is_zero(); }),
                 list.end());
      if (list.empty()) entries_.erase(p);
      return;
    }
  }
  list.push_back(f);
  std::sort(list.begin(), list.end(),
            [](const Form& x, const Form& y) { return x.degree() < y.degree(); });
}

PeriodicFamily PeriodicFamily::operator+(const PeriodicFamily& o) const {
  require(dim_ == o.dim_ && trunc_ == o.trunc_, "DimMismatch",
          "adding families of different shape");
  PeriodicFamily r = *this;
  for (const auto& [p, forms] : o.entries_)
    for (const auto& f : forms) r.add_form(p, f);
  return r;
}

PeriodicFamily PeriodicFamily::scaled(cplx c) const {
  PeriodicFamily r(dim_, trunc_);
  for (const auto& [p, forms] : entries_)
    for (const auto& f : forms) r.add_form(p, f.scaled(c));
  return r;
}

double PeriodicFamily::max_abs_value() const {
  double m = 0.0;
  for (const auto& [p, forms] : entries_)
    for (const auto& f : forms) m = std::max(m, f.max_abs_value());
  return m;
}

bool PeriodicFamily::operator==(const PeriodicFamily& o) const {
  return dim_ == o.dim_ && trunc_ == o.trunc_ && entries_ == o.entries_;
}

cplx integrate_family(const PeriodicFamily& fam) {
  cplx acc = 0.0;
  std::uint8_t top = std::uint8_t((1u << fam.dim()) - 1);
  for (const auto& [p, forms] : fam.entries())
    for (const auto& f : forms)
      if (f.degree() == fam.dim()) acc += f.component(top).integrate();
  return acc;
}

PeriodicFamily shift(const PeriodicFamily& fam, int two_k) {
  require(two_k % 2 == 0, "OddShift", "periodicity shift must be even");
  int k = two_k / 2;
  PeriodicFamily r(fam.dim(), Truncation::none);
  for (const auto& [p, forms] : fam.entries())
    for (const auto& f : forms) r.add_form(p + k, f);
  return r;
}

PeriodicFamily psi_project(const PeriodicFamily& fam) {
  require(fam.truncation() == Truncation::none, "TruncationViolated",
          "psi projects the untruncated two-periodic family");
  PeriodicFamily r(fam.dim(), Truncation::atmost_p);
  for (const auto& [p, forms] : fam.entries())
    for (const auto& f : forms)
      if (f.degree() <= p) r.add_form(p, f);
  return r;
}

PeriodicFamily family_d(const PeriodicFamily& fam) {
  PeriodicFamily r(fam.dim(), fam.truncation());
  for (const auto& [p, forms] : fam.entries()) {
    for (const auto& f : forms) {
      Form df = exterior_d(f);
      if (df.is_zero()) continue;
      if (fam.truncation() == Truncation::atmost_p && df.degree() > p) continue;
      r.add_form(p, df);
    }
  }
  return r;
}

PeriodicFamily family_wedge(const PeriodicFamily& a, const PeriodicFamily& b) {
  require(a.dim() == b.dim(), "DimMismatch", "wedge of families on different tori");
  PeriodicFamily r(a.dim(), Truncation::none);
  for (const auto& [pa, fas] : a.entries())
    for (const auto& [pb, fbs] : b.entries())
      for (const auto& fa : fas)
        for (const auto& fb : fbs) r.add_form(pa + pb, wedge(fa, fb));
  return r;
}

double closedness_residual(const PeriodicFamily& fam) {
  double m = 0.0;
  for (const auto& [p, forms] : fam.entries())
    for (const auto& f : forms) m = std::max(m, exterior_d(f).max_abs_value());
  return m;
}

HPClass::HPClass(PeriodicFamily rep) : rep_(std::move(rep)) {
  require(closedness_residual(rep_) <= 1e-12, "NotClosed",
          "periodic cohomology representative must be closed");
}

namespace {

// Primitive of a closed form with no constant modes: mode by mode,
// g_n = iota_n omega_n / (2 pi i |n|^2), so that d g = omega.
Form torus_primitive(const Form& omega) {
  Form g(omega.dim(), omega.degree() - 1);
  for (const auto& [mask, c] : omega.components()) {
    for (const auto& [n, coeff] : c.coeffs()) {
      double n2 = 0.0;
      for (int i = 0; i < omega.dim(); ++i) n2 += double(n[i]) * double(n[i]);
      require(n2 > 0, "NotClosed", "constant mode passed to primitive construction");
      // Interior product with the vector n.
      for (int axis = 0; axis < omega.dim(); ++axis) {
        std::uint8_t bit = std::uint8_t(1u << axis);
        if (!(mask & bit)) continue;
        int before = 0;
        for (int i = 0; i < axis; ++i)
          if (mask & (1u << i)) ++before;
        double sgn = (before % 2 == 0) ? 1.0 : -1.0;
        TrigPoly part = TrigPoly::character(omega.dim(), n, coeff * sgn * double(n[axis]) / n2)
                            .scaled_twopii(c.scale() - 1);
        g.add_component(std::uint8_t(mask & ~bit), part);
      }
    }
  }
  return g;
}

}  // namespace

HPClass hp_representative(const PeriodicFamily& fam) {
  require(closedness_residual(fam) <= 1e-12, "NotClosed", "family is not closed");
  PeriodicFamily rep(fam.dim(), Truncation::none);
  for (const auto& [p, forms] : fam.entries()) {
    for (const auto& f : forms) {
      // Constant part.
      Form cpart(f.dim(), f.degree());
      Form osc(f.dim(), f.degree());
      for (const auto& [mask, c] : f.components()) {
        cplx c0 = c.raw_coeff(Mode{});
        if (c0 != cplx(0.0))
          cpart.add_component(mask, TrigPoly::constant(f.dim(), c0, c.scale()));
        TrigPoly rest = c;
        rest.set_raw_coeff(Mode{}, 0.0);
        if (!rest.is_zero()) osc.add_component(mask, rest);
      }
      if (!osc.is_zero()) {
        Form prim = torus_primitive(osc);
        require(exterior_d(prim).approx_equal(osc, 1e-12 * std::max(1.0, osc.max_abs_value())),
                "NotClosed", "oscillatory part is not exact");
      }
      rep.add_form(p, cpart);
    }
  }
  return HPClass(rep);
}

}  // namespace reglab
