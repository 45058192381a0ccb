#pragma once

#include <Eigen/Dense>

#include "reglab/trigpoly.hpp"

namespace reglab {

/// Finite Fourier window -N..N with a guard band of width B at each edge.
/// Trace-like evaluations restrict to the inner window [-N+B, N-B], where
/// the algebra of banded operators agrees with its infinite-window limit.
struct WindowSpec {
  int N = 64;
  int B = 8;

  WindowSpec() = default;
  WindowSpec(int n, int b) : N(n), B(b) {
    require(N >= 1 && B >= 0 && B < N, "BadWindow", "need 0 <= B < N");
  }

  int size() const { return 2 * N + 1; }
  int idx(int mode) const { return mode + N; }  // mode in -N..N
  int inner_lo() const { return -N + B; }
  int inner_hi() const { return N - B; }
  bool operator==(const WindowSpec& o) const { return N == o.N && B == o.B; }
};

/// Dense operator over a finite Fourier window.
struct TruncOp {
  WindowSpec window;
  Eigen::MatrixXcd m;

  TruncOp() = default;
  TruncOp(WindowSpec w, Eigen::MatrixXcd mat) : window(w), m(std::move(mat)) {
    require(m.rows() == w.size() && m.cols() == w.size(), "BadWindow",
            "matrix dimensions must match the window");
  }

  static TruncOp zero(WindowSpec w) {
    return TruncOp(w, Eigen::MatrixXcd::Zero(w.size(), w.size()));
  }
  static TruncOp identity(WindowSpec w) {
    return TruncOp(w, Eigen::MatrixXcd::Identity(w.size(), w.size()));
  }

  cplx entry(int mode_row, int mode_col) const {
    return m(window.idx(mode_row), window.idx(mode_col));
  }
};

TruncOp operator*(const TruncOp& a, const TruncOp& b);
TruncOp operator+(const TruncOp& a, const TruncOp& b);
TruncOp operator-(const TruncOp& a, const TruncOp& b);

/// Multiplication operator M[m,n] = coeff_{m-n}(f) on the window.
TruncOp mult_op(const TrigPoly& f, WindowSpec w);

struct HardyPair {
  TruncOp Pplus;  // diagonal indicator of modes n >= 1
  TruncOp F;      // 2 Pplus - 1 = P^+ - P^- with P^- the non-positive projection
};

HardyPair hardy_projection(WindowSpec w);

TruncOp commutator(const TruncOp& a, const TruncOp& b);

/// Sum of diagonal entries over the inner window only.
cplx trace_guarded(const TruncOp& a);

/// (sum sigma_i^p)^{1/p} of the inner-window block.
double schatten_norm(const TruncOp& a, double p);

/// Determinant of the inner-window block of A ~ I + K; the off-inner part of
/// K must be below 1e-10 in magnitude.
cplx fredholm_det(const TruncOp& a);

/// Toeplitz compression P^+ M_u P^+ restricted to modes 1..N, a dense block.
struct ToeplitzBlock {
  WindowSpec window;
  Eigen::MatrixXcd m;  // N x N, modes 1..N
};

ToeplitzBlock toeplitz(const UnitFunction& u, WindowSpec w);

/// det(T_{u1} T_{u2} T_{u1}^{-1} T_{u2}^{-1}) evaluated on the guarded
/// leading block (the finite-section artifacts live in the trailing B rows;
/// the full-block determinant of a multiplicative commutator is exactly 1).
/// Converges to the joint torsion of the pair as N grows.
cplx det_mult_commutator(const UnitFunction& u1, const UnitFunction& u2, WindowSpec w);

/// dim ker - dim coker of the Toeplitz operator via numerical ranks of the
/// tall sections with N - B leading columns; singular values below
/// 1e-8 * sigma_max count as zero, and any singular value within a decade of
/// the threshold raises "RankAmbiguous".
int toeplitz_index(const UnitFunction& u, WindowSpec w);

}  // namespace reglab
