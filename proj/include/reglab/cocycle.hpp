#pragma once

#include "reglab/cyclic.hpp"
#include "reglab/opcalc.hpp"

namespace reglab {

/// Image of a multiplication operator in the 2x2 block picture induced by
/// the Hardy projections: a11 = P+ A P+, a12 = P+ A P-, and so on, with the
/// identification handled by mode sign on the common window. The off-diagonal
/// blocks are the summable part; their Schatten-(d+1) norms are recorded at
/// construction as a diagnostic.
struct BlockOp {
  WindowSpec window;
  Eigen::MatrixXcd full;
  double offdiag_norm_12 = 0.0;
  double offdiag_norm_21 = 0.0;

  Eigen::MatrixXcd a11() const;
  Eigen::MatrixXcd a12() const;
  Eigen::MatrixXcd a21() const;
  Eigen::MatrixXcd a22() const;

  /// Off-diagonal part as a full-window matrix (diagonal blocks zeroed).
  Eigen::MatrixXcd offdiag() const;
};

struct CocycleConstants {
  int d = 1;
  cplx c_phi;  // (-1)^{(d-1)/2} d! / ((2 pi i)^{(d-1)/2} ((d-1)/2)!)
  cplx c_a;    // -2^{d+1} d!    / ((2 pi i)^{(d-1)/2} ((d-1)/2)!)

  static CocycleConstants for_d(int d);
};

/// f |-> [[P+ f P+, P+ f P-], [P- f P+, P- f P-]] with d+1 = 2 summability
/// norms recorded.
BlockOp b_dirac(const TrigPoly& f, WindowSpec w);

BlockOp block_add(const BlockOp& a, const BlockOp& b);
BlockOp block_scale(const BlockOp& a, cplx c);

/// c_phi Tr[ z offdiag(a^0) ... offdiag(a^d) ] with z = diag(1,-1) and the
/// guarded trace.
cplx phi_d_eval(const std::vector<BlockOp>& ops, const CocycleConstants& consts);

/// Operator-side cochain c_a Tr( F [F, M_{f_0}] ... [F, M_{f_d}] ) extended
/// linearly over the chain. The commutators are supported inside
/// |mode| <= max deg, so the product is evaluated exactly on that core block;
/// the window enters only through the validity constraints deg <= B and
/// core inside the inner window.
cplx cochain_a(const LambdaChain& word, WindowSpec w, const CocycleConstants& consts);

/// Same value assembled from dense window operators; quadratic-size check
/// path for tests.
cplx cochain_a_dense(const LambdaChain& word, WindowSpec w, const CocycleConstants& consts);

/// Form-side cochain: for d = 1 the integral of f0 df1 summed over terms.
cplx cochain_b(const LambdaChain& word, int d);

struct RatioWindowStats {
  int N = 0;
  std::vector<cplx> kappas;
  cplx kappa_mean;
  double kappa_spread = 0.0;  // max |kappa_i - mean|
};

struct RatioReport {
  std::vector<RatioWindowStats> windows;
  double drift = 0.0;  // max |mean_w - mean_{w'}| across window pairs
};

/// Per-cycle, per-window ratio kappa = cochain_a / cochain_b over cycles
/// with |cochain_b| > 1e-10.
RatioReport compare_ab(const std::vector<LambdaChain>& cycles,
                       const std::vector<WindowSpec>& windows, const CocycleConstants& consts);

}  // namespace reglab
