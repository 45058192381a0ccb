#pragma once

#include <vector>

#include "reglab/trigpoly.hpp"

namespace reglab {

/// Good cover of the circle by m >= 3 arcs with consecutive double overlaps
/// only. Built from m ascending cut points in [0,1): arc i is a neighbourhood
/// of [cut_i, cut_{i+1}] (the last arc wraps, working in the lift where its
/// interval is [cut_{m-1}, cut_0 + 1]). The cut points double as the
/// evaluation points inside the overlaps.
class ArcCover {
public:
  explicit ArcCover(std::vector<double> cuts);
  static ArcCover uniform(int m);

  int size() const { return int(cuts_.size()); }
  const std::vector<double>& cuts() const noexcept { return cuts_; }

  /// Left endpoint of arc i's parameter interval in the lift.
  double lift_lo(int i) const { return cuts_[std::size_t(i)]; }
  /// Right endpoint (cut_{i+1}, wrapped up by one for the last arc).
  double lift_hi(int i) const {
    return (i + 1 < size()) ? cuts_[std::size_t(i + 1)] : cuts_[0] + 1.0;
  }

  /// Refinement with a midpoint inserted into every segment.
  ArcCover refined() const;

  bool operator==(const ArcCover& o) const { return cuts_ == o.cuts_; }

private:
  std::vector<double> cuts_;
};

/// Function on one arc in its lift coordinate: lin * t + c0 + osc(t) with a
/// periodic trig-poly oscillatory part.
struct LocalFn {
  double lin = 0.0;
  cplx c0 = 0.0;
  TrigPoly osc{1};

  cplx eval(double t) const { return lin * t + c0 + osc.eval1(t); }
  /// Derivative coefficient as a LocalFn with zero linear part.
  LocalFn derivative() const;
};

/// Degree-1 cocycle for the two-term complex Z -> Omega^0: per-arc smooth
/// branches of log(u)/(2 pi i) and the integer differences on overlaps.
struct DeligneH1 {
  ArcCover cover;
  std::vector<LocalFn> logs;          // one per arc, in the arc's lift
  std::vector<long> transition_ints;  // n_{i,i+1}; the wrap pair carries the winding

  long winding_from_transitions() const;
};

/// Local 1-form coefficient on one arc: (base(t) + t * tcoef(t)) dt.
struct LocalOneForm {
  TrigPoly base{1};
  TrigPoly tcoef{1};

  cplx eval(double t) const { return base.eval1(t) + t * tcoef.eval1(t); }
  cplx integrate(double a, double b) const;
};

/// Degree-2 cocycle: local 1-forms, overlap functions, and (on a circle good
/// cover, vacuously) no triple-overlap integers.
struct DeligneH2 {
  ArcCover cover;
  std::vector<LocalOneForm> omegas;  // one per arc
  std::vector<LocalFn> overlap_fns;  // f_{i,i+1}, in arc (i+1)'s lift

  double cocycle_residual() const;
};

/// The class of a unit: local logs with integer overlap differences; the
/// winding is the sum of the transition integers around the circle.
DeligneH1 unit_to_deligne(const UnitFunction& u, const ArcCover& cover);

/// Beilinson cup product on the chosen cochain model:
///   omega_i = lambda_i d mu_i,   f_{ij} = n^x_{ij} mu_j.
DeligneH2 cup(const DeligneH1& x, const DeligneH1& y);

/// Cech-de Rham evaluation against the fundamental class:
///   sum_i int_{cut_i}^{cut_{i+1}} omega_i - sum_i f_{i,i+1}(cut_{i+1}),
/// reduced modulo Z; independent of the cut choices mod Z.
CZValue evaluate(const DeligneH2& c);

/// Closed-form pairing for units u1 = z^{w1} e^{g1}, u2 = z^{w2} e^{g2}:
///   [ w1 w2 / 2 + (w2 (g1)_0 - w1 (g2)_0)/(2 pi i) + (1/(2 pi i)^2) int g1 dg2 ],
/// derived for the cup convention above and cross-checked against the Cech
/// path. For w1 = 0 this is [(1/(2 pi i)^2) int g1 dlog u2].
CZValue pairing_closed_form(const UnitFunction& u1, const UnitFunction& u2);

}  // namespace reglab
