#include "reglab/deligne.hpp"

#include <algorithm>
#include <cmath>

namespace reglab {

ArcCover::ArcCover(std::vector<double> cuts) : cuts_(std::move(cuts)) {
  require(cuts_.size() >= 3, "BadCover", "need at least 3 arcs");
  for (double c : cuts_) require(c >= 0.0 && c < 1.0, "BadCover", "cuts must lie in [0,1)");
  require(std::is_sorted(cuts_.begin(), cuts_.end()), "BadCover", "cuts must be ascending");
  for (std::size_t i = 1; i < cuts_.size(); ++i)
    require(cuts_[i] > cuts_[i - 1] + 1e-9, "BadCover", "cuts must be distinct");
}

ArcCover ArcCover::uniform(int m) {
  std::vector<double> cuts;
  for (int i = 0; i < m; ++i) cuts.push_back(double(i) / m);
  return ArcCover(std::move(cuts));
}

ArcCover ArcCover::refined() const {
  std::vector<double> cuts;
  for (int i = 0; i < size(); ++i) {
    cuts.push_back(lift_lo(i));
    double mid = 0.5 * (lift_lo(i) + lift_hi(i));
    cuts.push_back(mid >= 1.0 ? mid - 1.0 : mid);
  }
  std::sort(cuts.begin(), cuts.end());
  return ArcCover(std::move(cuts));
}

LocalFn LocalFn::derivative() const {
  LocalFn d;
  d.lin = 0.0;
  d.c0 = lin;
  d.osc = osc.derive(0);
  return d;
}

long DeligneH1::winding_from_transitions() const {
  long w = 0;
  for (long n : transition_ints) w += n;
  return w;
}

cplx LocalOneForm::integrate(double a, double b) const {
  // Closed-form primitives: for e_n, int e_n = e_n/(2 pi i n) and
  // int t e_n = t e_n/(2 pi i n) - e_n/(2 pi i n)^2; constants integrate to
  // t and t^2/2.
  cplx acc = 0.0;
  auto ch = [](int n, double t) { return std::polar(1.0, kTwoPi * n * t); };
  cplx sb = twopii_pow(base.scale());
  for (const auto& [n, c] : base.coeffs()) {
    cplx v = c * sb;
    if (n[0] == 0)
      acc += v * (b - a);
    else {
      cplx den = cplx(0.0, kTwoPi * n[0]);
      acc += v * (ch(n[0], b) - ch(n[0], a)) / den;
    }
  }
  cplx st = twopii_pow(tcoef.scale());
  for (const auto& [n, c] : tcoef.coeffs()) {
    cplx v = c * st;
    if (n[0] == 0)
      acc += v * 0.5 * (b * b - a * a);
    else {
      cplx den = cplx(0.0, kTwoPi * n[0]);
      acc += v * ((b * ch(n[0], b) - a * ch(n[0], a)) / den -
                  (ch(n[0], b) - ch(n[0], a)) / (den * den));
    }
  }
  return acc;
}

double DeligneH2::cocycle_residual() const {
  // df_{i,i+1} = omega_i - omega_{i+1} sampled on the overlap; the wrap pair
  // compares the two lifts of the same circle points.
  double res = 0.0;
  int m = cover.size();
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    double cut = (i + 1 < m) ? cover.cuts()[std::size_t(i + 1)] : cover.cuts()[0];
    for (double off : {-1e-3, 0.0, 1e-3}) {
      double tj = cut + off;          // arc j lift
      double ti = (i + 1 < m) ? tj : tj + 1.0;  // arc i lift
      cplx dfij = overlap_fns[std::size_t(i)].derivative().eval(tj);
      cplx wi = omegas[std::size_t(i)].eval(ti);
      cplx wj = omegas[std::size_t(j)].eval(tj);
      res = std::max(res, std::abs(wi - wj - dfij));
    }
  }
  return res;
}

DeligneH1 unit_to_deligne(const UnitFunction& u, const ArcCover& cover) {
  require(u.dim() == 1, "DimRange", "Deligne classes are modelled on the circle");
  DeligneH1 x{cover, {}, {}};
  int m = cover.size();
  TrigPoly g_norm = u.logpart().scaled_twopii(-1);  // g/(2 pi i)
  for (int i = 0; i < m; ++i) {
    LocalFn f;
    f.lin = double(u.winding1());
    f.c0 = 0.0;
    f.osc = g_norm;
    x.logs.push_back(f);
  }
  // Transitions: log_i - log_{i+1} at the shared cut; the lift construction
  // concentrates the winding in the wrap pair.
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    double cut = (i + 1 < m) ? cover.cuts()[std::size_t(i + 1)] : cover.cuts()[0];
    double tj = cut;
    double ti = (i + 1 < m) ? tj : tj + 1.0;
    cplx diff = x.logs[std::size_t(i)].eval(ti) - x.logs[std::size_t(j)].eval(tj);
    double rounded = std::round(diff.real());
    require(std::abs(diff - cplx(rounded, 0.0)) <= 1e-10, "NotACocycle",
            "overlap difference of local logs is not an integer");
    x.transition_ints.push_back(long(rounded));
  }
  return x;
}

DeligneH2 cup(const DeligneH1& x, const DeligneH1& y) {
  require(x.cover == y.cover, "CoverMismatch", "cup product needs a common cover");
  int m = x.cover.size();
  DeligneH2 c{x.cover, {}, {}};
  for (int i = 0; i < m; ++i) {
    // omega_i = lambda_i * d mu_i with lambda = lin t + c0 + osc.
    const LocalFn& lam = x.logs[std::size_t(i)];
    LocalFn dmu = y.logs[std::size_t(i)].derivative();
    LocalOneForm w;
    TrigPoly dmu_poly = dmu.osc + TrigPoly::constant(1, dmu.c0);
    w.base = (lam.osc + TrigPoly::constant(1, lam.c0)) * dmu_poly;
    w.tcoef = dmu_poly.scaled(lam.lin);
    c.omegas.push_back(w);
  }
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    LocalFn f = y.logs[std::size_t(j)];
    double n = double(x.transition_ints[std::size_t(i)]);
    f.lin *= n;
    f.c0 *= n;
    f.osc = f.osc.scaled(n);
    c.overlap_fns.push_back(f);
  }
  require(c.cocycle_residual() <= 1e-9, "NotACocycle", "cup product residual too large");
  return c;
}

CZValue evaluate(const DeligneH2& c) {
  require(c.cocycle_residual() <= 1e-9, "NotACocycle", "evaluation needs a cocycle");
  int m = c.cover.size();
  cplx acc = 0.0;
  for (int i = 0; i < m; ++i)
    acc += c.omegas[std::size_t(i)].integrate(c.cover.lift_lo(i), c.cover.lift_hi(i));
  for (int i = 0; i < m; ++i) {
    double cut = (i + 1 < m) ? c.cover.cuts()[std::size_t(i + 1)] : c.cover.cuts()[0];
    acc -= c.overlap_fns[std::size_t(i)].eval(cut);
  }
  return reduce(acc);
}

CZValue pairing_closed_form(const UnitFunction& u1, const UnitFunction& u2) {
  require(u1.dim() == 1 && u2.dim() == 1, "DimRange", "pairing is modelled on the circle");
  double w1 = double(u1.winding1());
  double w2 = double(u2.winding1());
  const TrigPoly& g1 = u1.logpart();
  const TrigPoly& g2 = u2.logpart();
  cplx acc = 0.5 * w1 * w2;
  cplx g1_0 = g1.integrate();
  cplx g2_0 = g2.integrate();
  acc += (w2 * g1_0 - w1 * g2_0) / twopii_pow(1);
  acc += (g1 * g2.derive(0)).scaled_twopii(-2).integrate();
  return reduce(acc);
}

}  // namespace reglab
