#pragma once

#include <vector>

#include "reglab/forms.hpp"

namespace reglab {

/// Summand of the total cyclic complex in degree n: a tensor word together
/// with its column index k. Word lengths follow the bicomplex layout
///   n even: length 2k+1, 0 <= k <= n/2
///   n odd : length 2k+2, 0 <= k <= (n-1)/2
struct CyclicTerm {
  int k = 0;
  std::vector<TrigPoly> word;
  cplx coeff = 1.0;
};

class CyclicChain {
public:
  CyclicChain(int n, int dim) : n_(n), dim_(dim) {
    require(n >= 0, "DegreeRange", "chain degree must be nonnegative");
  }

  int n() const noexcept { return n_; }
  int dim() const noexcept { return dim_; }
  const std::vector<CyclicTerm>& terms() const noexcept { return terms_; }

  static int word_length(int n, int k);

  void add_term(int k, std::vector<TrigPoly> word, cplx coeff);
  CyclicChain scaled(cplx c) const;

private:
  int n_;
  int dim_;
  std::vector<CyclicTerm> terms_;
};

/// Element of the cyclic-coinvariant complex in degree n: words of length
/// n+1 stored in a canonical rotation, with the cyclic sign (-1)^{n r}
/// folded into the coefficient. A word whose stabilizer acts with sign -1
/// is dropped (the class is zero).
struct LambdaTerm {
  std::vector<TrigPoly> word;
  cplx coeff = 1.0;
};

class LambdaChain {
public:
  LambdaChain(int n, int dim) : n_(n), dim_(dim) {}

  int n() const noexcept { return n_; }
  int dim() const noexcept { return dim_; }
  const std::vector<LambdaTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(std::vector<TrigPoly> word, cplx coeff);
  LambdaChain operator+(const LambdaChain& o) const;
  LambdaChain scaled(cplx c) const;

  double total_abs_coeff() const;

private:
  int n_;
  int dim_;
  std::vector<LambdaTerm> terms_;
};

/// Convenience: the degree-1 coinvariant chain [f0 (x) f1].
LambdaChain lambda2(const TrigPoly& f0, const TrigPoly& f1, cplx coeff = 1.0);

/// Hochschild-type boundary on the coinvariant complex.
LambdaChain boundary_b(const LambdaChain& c);

/// Projection onto the top word (k = n/2 resp. (n-1)/2).
LambdaChain lambda_project(const CyclicChain& c);

/// Total differential b + B of the cyclic bicomplex (B vanishes on the
/// leftmost column).
CyclicChain total_differential(const CyclicChain& c);

/// Word f0 (x) ... (x) fm at column k of a degree-n chain contributes
/// (1/m!) f0 df1 ^ ... ^ dfm to entry p = (n+m)/2. Lands in the
/// degree-truncated quotient family (degrees <= p hold automatically).
PeriodicFamily pi_dd(const CyclicChain& c);

/// Same formula into the connective-side family (degrees >= p); words whose
/// form degree falls below p map to zero there and are dropped.
PeriodicFamily pi_minus(const CyclicChain& c);

/// Composite quasi-isomorphism: pi, then the inverse of the degree
/// truncation (harmonic lift on the torus), then the periodicity shift by
/// d-1. Requires the projected chain to be a cycle.
HPClass pi_d_iso(const CyclicChain& c, int d);

}  // namespace reglab
