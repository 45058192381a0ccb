#include "reglab/cocycle.hpp"

#include <algorithm>

namespace reglab {

namespace {

// Upper block: modes 1..N; lower block: modes -N..0.
struct BlockIdx {
  int up0, upn, lo0, lon;
  explicit BlockIdx(const WindowSpec& w)
      : up0(w.idx(1)), upn(w.N), lo0(w.idx(-w.N)), lon(w.N + 1) {}
};

}  // namespace

Eigen::MatrixXcd BlockOp::a11() const {
  BlockIdx b(window);
  return full.block(b.up0, b.up0, b.upn, b.upn);
}
Eigen::MatrixXcd BlockOp::a12() const {
  BlockIdx b(window);
  return full.block(b.up0, b.lo0, b.upn, b.lon);
}
Eigen::MatrixXcd BlockOp::a21() const {
  BlockIdx b(window);
  return full.block(b.lo0, b.up0, b.lon, b.upn);
}
Eigen::MatrixXcd BlockOp::a22() const {
  BlockIdx b(window);
  return full.block(b.lo0, b.lo0, b.lon, b.lon);
}

Eigen::MatrixXcd BlockOp::offdiag() const {
  Eigen::MatrixXcd o = Eigen::MatrixXcd::Zero(window.size(), window.size());
  BlockIdx b(window);
  o.block(b.up0, b.lo0, b.upn, b.lon) = full.block(b.up0, b.lo0, b.upn, b.lon);
  o.block(b.lo0, b.up0, b.lon, b.upn) = full.block(b.lo0, b.up0, b.lon, b.upn);
  return o;
}

CocycleConstants CocycleConstants::for_d(int d) {
  require(d >= 1 && d % 2 == 1, "BadParams", "the cocycle dimension d must be odd");
  CocycleConstants c;
  c.d = d;
  int h = (d - 1) / 2;
  double dfac = 1.0, hfac = 1.0;
  for (int i = 2; i <= d; ++i) dfac *= i;
  for (int i = 2; i <= h; ++i) hfac *= i;
  cplx denom = twopii_pow(h) * hfac;
  c.c_phi = ((h % 2 == 0) ? 1.0 : -1.0) * dfac / denom;
  c.c_a = -std::pow(2.0, d + 1) * dfac / denom;
  return c;
}

BlockOp b_dirac(const TrigPoly& f, WindowSpec w) {
  TruncOp m = mult_op(f, w);
  BlockOp b{w, std::move(m.m), 0.0, 0.0};
  // d+1 = 2 summability: Hilbert-Schmidt norms of the off-diagonal blocks.
  b.offdiag_norm_12 = b.a12().norm();
  b.offdiag_norm_21 = b.a21().norm();
  return b;
}

BlockOp block_add(const BlockOp& a, const BlockOp& b) {
  require(a.window == b.window, "WindowMismatch", "block operators on different windows");
  BlockOp r{a.window, a.full + b.full, 0.0, 0.0};
  r.offdiag_norm_12 = r.a12().norm();
  r.offdiag_norm_21 = r.a21().norm();
  return r;
}

BlockOp block_scale(const BlockOp& a, cplx c) {
  BlockOp r{a.window, a.full * c, std::abs(c) * a.offdiag_norm_12,
            std::abs(c) * a.offdiag_norm_21};
  return r;
}

cplx phi_d_eval(const std::vector<BlockOp>& ops, const CocycleConstants& consts) {
  require(int(ops.size()) == consts.d + 1, "BadParams", "need d+1 block operators");
  const WindowSpec& w = ops.front().window;
  for (const auto& o : ops)
    require(o.window == w, "WindowMismatch", "block operators on different windows");
  Eigen::MatrixXcd acc = ops.front().offdiag();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = acc * ops[i].offdiag();
  // z = diag(1,-1) in the block picture is the mode-sign involution.
  cplx tr = 0.0;
  for (int n = w.inner_lo(); n <= w.inner_hi(); ++n) {
    double z = (n >= 1) ? 1.0 : -1.0;
    tr += z * acc(w.idx(n), w.idx(n));
  }
  return consts.c_phi * tr;
}

namespace {

double sgnF(int mode) { return mode >= 1 ? 1.0 : -1.0; }

// Core block [-D..D] of [F, M_f]; commutator entries need the mode sign to
// flip across the entry, so everything lives within |mode| <= deg f.
Eigen::MatrixXcd commutator_core(const TrigPoly& f, int D) {
  int sz = 2 * D + 1;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(sz, sz);
  for (const auto& [n, c] : f.coeffs()) {
    int k = n[0];
    cplx v = c * twopii_pow(f.scale());
    for (int col = -D; col <= D; ++col) {
      int row = col + k;
      if (row < -D || row > D) continue;
      double s = sgnF(row) - sgnF(col);
      if (s != 0.0) C(row + D, col + D) = s * v;
    }
  }
  return C;
}

}  // namespace

cplx cochain_a(const LambdaChain& word, WindowSpec w, const CocycleConstants& consts) {
  require(word.n() == consts.d, "BadParams", "chain degree must equal d");
  cplx acc = 0.0;
  for (const auto& t : word.terms()) {
    int D = 1;
    for (const auto& f : t.word) {
      require(f.dim() == 1, "DimRange", "operator cochains act on circle symbols");
      require(f.degree() <= w.B, "BandwidthExceedsGuard",
              "symbol bandwidth exceeds the guard band");
      D = std::max(D, f.degree());
    }
    require(D <= w.N - w.B, "BadWindow", "commutator core exceeds the inner window");
    int sz = 2 * D + 1;
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(sz, sz);
    for (const auto& f : t.word) P = P * commutator_core(f, D);
    cplx tr = 0.0;
    for (int m = -D; m <= D; ++m) tr += sgnF(m) * P(m + D, m + D);
    acc += t.coeff * tr;
  }
  return consts.c_a * acc;
}

cplx cochain_a_dense(const LambdaChain& word, WindowSpec w, const CocycleConstants& consts) {
  require(word.n() == consts.d, "BadParams", "chain degree must equal d");
  auto [P, F] = hardy_projection(w);
  (void)P;
  cplx acc = 0.0;
  for (const auto& t : word.terms()) {
    TruncOp prod = F;
    for (const auto& f : t.word) prod = prod * commutator(F, mult_op(f, w));
    acc += t.coeff * trace_guarded(prod);
  }
  return consts.c_a * acc;
}

cplx cochain_b(const LambdaChain& word, int d) {
  require(d == 1, "UnsupportedDimension", "the form-side cochain is implemented for d = 1");
  require(word.n() == 1, "BadParams", "chain degree must equal d");
  cplx acc = 0.0;
  for (const auto& t : word.terms()) {
    require(t.word[0].dim() == 1, "DimRange", "d = 1 cochain needs circle coefficients");
    acc += t.coeff * (t.word[0] * t.word[1].derive(0)).integrate();
  }
  return acc;
}

RatioReport compare_ab(const std::vector<LambdaChain>& cycles,
                       const std::vector<WindowSpec>& windows, const CocycleConstants& consts) {
  for (const auto& c : cycles)
    require(boundary_b(c).is_zero(), "BadParams", "compare_ab expects b-cycles");
  RatioReport rep;
  bool any = false;
  for (const auto& w : windows) {
    RatioWindowStats st;
    st.N = w.N;
    for (const auto& c : cycles) {
      cplx b = cochain_b(c, consts.d);
      if (std::abs(b) <= 1e-10) continue;
      st.kappas.push_back(cochain_a(c, w, consts) / b);
    }
    if (!st.kappas.empty()) {
      any = true;
      cplx mean = 0.0;
      for (const auto& k : st.kappas) mean += k;
      mean /= double(st.kappas.size());
      st.kappa_mean = mean;
      for (const auto& k : st.kappas)
        st.kappa_spread = std::max(st.kappa_spread, std::abs(k - mean));
    }
    rep.windows.push_back(std::move(st));
  }
  require(any, "DegenerateComparison", "all form-side values vanish");
  for (const auto& a : rep.windows)
    for (const auto& b : rep.windows)
      rep.drift = std::max(rep.drift, std::abs(a.kappa_mean - b.kappa_mean));
  return rep;
}

}  // namespace reglab
