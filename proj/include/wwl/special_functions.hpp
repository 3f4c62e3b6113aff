// Scalar special functions: gamma, normalized Bessel j_alpha, and the lower
// incomplete gamma. Everything here is pure and reentrant.
#pragma once

#include "wwl/common.hpp"

namespace wwl {

// Index of the Bessel-type radial operator; valid for alpha > -1/2.
struct BesselIndex {
  double value;
  explicit BesselIndex(double alpha) : value(alpha) {
    if (!(alpha > -0.5))
      throw std::domain_error("BesselIndex: alpha must be > -1/2");
  }
};

// Gamma function for x > 0, Lanczos approximation (relative error < 1e-13).
double gamma_fn(double x);

// Normalized Bessel function
//   j_alpha(x) = Gamma(alpha+1) * sum_k (-1)^k (x/2)^{2k} / (k! Gamma(alpha+k+1)),
// even in x, j_alpha(0) = 1, |j_alpha(x)| <= 1 on the reals.
// Power series (long double accumulation) for |x| <= 12, Hankel asymptotic
// expansion of J_alpha beyond.
double normalized_bessel_j(double alpha, double x);
double normalized_bessel_j(BesselIndex alpha, double x);

// Lower incomplete gamma  gamma(s, x) = int_0^x t^{s-1} e^{-t} dt,
// s > 0, x >= 0. Series for x < s+1, continued fraction otherwise.
double lower_incomplete_gamma(double s, double x);

namespace detail {
// Series/asymptotic crossover for normalized_bessel_j, exposed for the
// branch-agreement tests. At 14 both branches stay below ~2e-13 for all
// alpha in (-1/2, 4]; at 12 the Hankel expansion's optimal-truncation
// remainder can still reach 1.3e-12 near alpha = -0.27.
inline constexpr double kBesselSeriesCutoff = 14.0;
double bessel_j_series(double alpha, double x);
double bessel_j_asymptotic(double alpha, double x);
}  // namespace detail

}  // namespace wwl
