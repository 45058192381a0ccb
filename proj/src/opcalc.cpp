#include "reglab/opcalc.hpp"

#include <Eigen/SVD>

namespace reglab {

namespace {

void check_same_window(const TruncOp& a, const TruncOp& b) {
  require(a.window == b.window, "WindowMismatch", "operators live on different windows");
}

}  // namespace

TruncOp operator*(const TruncOp& a, const TruncOp& b) {
  check_same_window(a, b);
  return TruncOp(a.window, a.m * b.m);
}

TruncOp operator+(const TruncOp& a, const TruncOp& b) {
  check_same_window(a, b);
  return TruncOp(a.window, a.m + b.m);
}

TruncOp operator-(const TruncOp& a, const TruncOp& b) {
  check_same_window(a, b);
  return TruncOp(a.window, a.m - b.m);
}

TruncOp mult_op(const TrigPoly& f, WindowSpec w) {
  require(f.dim() == 1, "DimRange", "multiplication operators act on the circle");
  require(f.degree() <= w.B, "BandwidthExceedsGuard",
          "symbol bandwidth exceeds the guard band");
  TruncOp op = TruncOp::zero(w);
  for (const auto& [n, c] : f.coeffs()) {
    cplx v = c * twopii_pow(f.scale());
    int k = n[0];
    for (int col = -w.N; col <= w.N; ++col) {
      int row = col + k;
      if (row < -w.N || row > w.N) continue;
      op.m(w.idx(row), w.idx(col)) = v;
    }
  }
  return op;
}

HardyPair hardy_projection(WindowSpec w) {
  TruncOp P = TruncOp::zero(w);
  TruncOp F = TruncOp::zero(w);
  for (int n = -w.N; n <= w.N; ++n) {
    P.m(w.idx(n), w.idx(n)) = (n >= 1) ? 1.0 : 0.0;
    F.m(w.idx(n), w.idx(n)) = (n >= 1) ? 1.0 : -1.0;
  }
  return {P, F};
}

TruncOp commutator(const TruncOp& a, const TruncOp& b) {
  check_same_window(a, b);
  return TruncOp(a.window, a.m * b.m - b.m * a.m);
}

cplx trace_guarded(const TruncOp& a) {
  cplx acc = 0.0;
  for (int n = a.window.inner_lo(); n <= a.window.inner_hi(); ++n)
    acc += a.m(a.window.idx(n), a.window.idx(n));
  return acc;
}

double schatten_norm(const TruncOp& a, double p) {
  require(p >= 1.0, "BadParams", "Schatten exponent must be >= 1");
  int lo = a.window.idx(a.window.inner_lo());
  int hi = a.window.idx(a.window.inner_hi());
  int n = hi - lo + 1;
  Eigen::MatrixXcd blk = a.m.block(lo, lo, n, n);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(blk);
  double acc = 0.0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    acc += std::pow(svd.singularValues()(i), p);
  return std::pow(acc, 1.0 / p);
}

namespace {

// Determinant by partially pivoted LU; Eigen's pivot order is deterministic.
cplx block_det(const Eigen::MatrixXcd& blk) {
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(blk);
  cplx det = lu.determinant();
  require(std::isfinite(det.real()) && std::isfinite(det.imag()) && std::abs(det) > 1e-300,
          "SingularDeterminant", "block is singular to machine precision");
  return det;
}

}  // namespace

cplx fredholm_det(const TruncOp& a) {
  const WindowSpec& w = a.window;
  int lo = w.idx(w.inner_lo());
  int hi = w.idx(w.inner_hi());
  // K = A - I must be concentrated in the inner window.
  double off = 0.0;
  for (int i = 0; i < w.size(); ++i) {
    for (int j = 0; j < w.size(); ++j) {
      bool inner = (i >= lo && i <= hi && j >= lo && j <= hi);
      if (inner) continue;
      cplx k = a.m(i, j) - (i == j ? cplx(1.0) : cplx(0.0));
      off = std::max(off, std::abs(k));
    }
  }
  require(off <= 1e-10, "BadWindow", "off-inner part of A - I is not negligible");
  return block_det(a.m.block(lo, lo, hi - lo + 1, hi - lo + 1));
}

ToeplitzBlock toeplitz(const UnitFunction& u, WindowSpec w) {
  TrigPoly coeffs = expand_unit_coeffs(u, w.B, 1e-12);
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(w.N, w.N);
  for (const auto& [n, c] : coeffs.coeffs()) {
    int k = n[0];
    for (int col = 1; col <= w.N; ++col) {
      int row = col + k;
      if (row < 1 || row > w.N) continue;
      T(row - 1, col - 1) = c * twopii_pow(coeffs.scale());
    }
  }
  return {w, std::move(T)};
}

cplx det_mult_commutator(const UnitFunction& u1, const UnitFunction& u2, WindowSpec w) {
  require(u1.dim() == 1 && u2.dim() == 1, "DimRange", "Toeplitz symbols live on the circle");
  require(u1.winding1() == 0 && u2.winding1() == 0, "WindingNotZero",
          "multiplicative commutator determinant needs winding zero");
  if (u1.logpart().degree() == 0 || u2.logpart().degree() == 0) return 1.0;  // central factor

  ToeplitzBlock T1 = toeplitz(u1, w);
  ToeplitzBlock T2 = toeplitz(u2, w);

  for (const auto* T : {&T1, &T2}) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(T->m);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    require(smin >= 1e-8, "ToeplitzIllConditioned",
            "truncated Toeplitz factor has smallest singular value below 1e-8");
  }

  // D = (T1 T2) (T2 T1)^{-1}; the commutator-with-inverses product in exact
  // arithmetic. Finite-section error is confined to the trailing guard rows.
  Eigen::MatrixXcd A = T1.m * T2.m;
  Eigen::MatrixXcd Bm = T2.m * T1.m;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(Bm.transpose());
  Eigen::MatrixXcd D = lu.solve(A.transpose()).transpose();

  int M = w.N - w.B;
  require(M >= 1, "BadWindow", "guard band leaves no leading block");
  return block_det(D.topLeftCorner(M, M));
}

namespace {

// Numerical kernel dimension of the tall section with rows 1..N and columns
// 1..M of the Toeplitz operator with the given symbol coefficients.
int kernel_dim_tall_section(const TrigPoly& coeffs, int N, int M) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, M);
  for (const auto& [n, c] : coeffs.coeffs()) {
    int k = n[0];
    for (int col = 1; col <= M; ++col) {
      int row = col + k;
      if (row < 1 || row > N) continue;
      A(row - 1, col - 1) = c * twopii_pow(coeffs.scale());
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  require(smax > 0, "RankAmbiguous", "zero symbol");
  double thr = 1e-8 * smax;
  int null = 0;
  for (int i = 0; i < s.size(); ++i) {
    double v = s(i);
    require(v <= thr / 10.0 || v >= thr * 10.0, "RankAmbiguous",
            "singular value within a decade of the rank threshold");
    if (v < thr) ++null;
  }
  return null;
}

}  // namespace

int toeplitz_index(const UnitFunction& u, WindowSpec w) {
  require(u.dim() == 1, "DimRange", "Toeplitz symbols live on the circle");
  TrigPoly coeffs = expand_unit_coeffs(u, w.B, 1e-12);
  // Conjugate symbol: coefficients of conj(u(t)).
  TrigPoly conj_coeffs(1);
  for (const auto& [n, c] : coeffs.coeffs())
    conj_coeffs.add_raw_coeff(Mode{-n[0]}, std::conj(c * twopii_pow(coeffs.scale())));

  int M = w.N - w.B;
  require(M >= 1, "BadWindow", "guard band leaves no columns for the section");
  int dim_ker = kernel_dim_tall_section(coeffs.with_scale(0), w.N, M);
  int dim_coker = kernel_dim_tall_section(conj_coeffs, w.N, M);  // = dim ker of the adjoint
  return dim_ker - dim_coker;
}

}  // namespace reglab
