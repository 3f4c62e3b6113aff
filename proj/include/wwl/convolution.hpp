// Generalized convolution, diagonalized by the transform.
#pragma once

#include "wwl/translation.hpp"

namespace wwl {

// f * g via the spectral route inverse(F(f) F(g)); the product spectrum is
// what the factorization identity asserts, so it is returned too.
struct Convolution {
  Field field;
  Spectrum product_spectrum;
};
Convolution convolve(const Field& f, const Field& g, const Grid& grid);

// Direct double-quadrature oracle (f * g)(x) = int tau_x f(-y) g(y) dmu(y).
// O(nodes^2 * theta order); refuses grids beyond 64 points per axis.
Field convolve_direct(const Field& f, const Field& g, const Grid& grid,
                      const JacobiRule& rule);

// ||f * g||_r <= ||f||_p ||g||_q for 1/p + 1/q - 1/r = 1.
struct YoungReport {
  double lhs;     // ||f*g||_r
  double rhs;     // ||f||_p ||g||_q
  double ratio;   // lhs / rhs
  bool pass;
};
YoungReport young_inequality_check(const Field& f, const Field& g, const Grid& grid,
                                   double p, double q, double r,
                                   double slack = 5e-3);

}  // namespace wwl
