#pragma once

#include <cstdint>

#include "reglab/trigpoly.hpp"

namespace reglab {

/// SplitMix64: tiny, portable, bit-reproducible across platforms (the
/// standard-library distributions are not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer in [lo, hi] inclusive.
  int integer(int lo, int hi) {
    return lo + int(next() % std::uint64_t(hi - lo + 1));
  }

  cplx complex_box(double radius) {
    return cplx(uniform(-radius, radius), uniform(-radius, radius));
  }

  /// Random trig polynomial with nterms modes of degree <= deg and complex
  /// coefficients in the given box.
  TrigPoly trigpoly(int dim, int deg, int nterms, double radius) {
    TrigPoly f(dim);
    for (int t = 0; t < nterms; ++t) {
      Mode n;
      for (int i = 0; i < dim; ++i) n[i] = integer(-deg, deg);
      f.add_raw_coeff(n, complex_box(radius));
    }
    return f;
  }

  /// Random trig polynomial with small Gaussian-integer coefficients; exact
  /// under products, sums, and derivatives.
  TrigPoly trigpoly_int(int dim, int deg, int nterms, int coeff_max) {
    TrigPoly f(dim);
    for (int t = 0; t < nterms; ++t) {
      Mode n;
      for (int i = 0; i < dim; ++i) n[i] = integer(-deg, deg);
      f.add_raw_coeff(n, cplx(double(integer(-coeff_max, coeff_max)),
                              double(integer(-coeff_max, coeff_max))));
    }
    return f;
  }

private:
  std::uint64_t s_;
};

}  // namespace reglab
