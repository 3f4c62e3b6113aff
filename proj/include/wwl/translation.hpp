// Generalized translation: ordinary shift in the lateral variables, a
// sin^{2 alpha}-averaged law-of-cosines mixing in the radial one.
#pragma once

#include "wwl/transform.hpp"

namespace wwl {

// Quadrature of the theta-average: after t = cos(theta) the weight is
// (1 - t^2)^{alpha - 1/2}, handled by a Gauss-Jacobi rule. Weights are
// rescaled so that c_alpha * sum(weights) == 1 exactly.
struct JacobiRule {
  std::vector<double> theta;      // nodes in (0, pi)
  std::vector<double> cos_theta;  // Gauss-Jacobi abscissae
  std::vector<double> weights;
  double c_alpha;                 // Gamma(a+1) / (sqrt(pi) Gamma(a+1/2))
  int order;
};

JacobiRule make_jacobi_rule(double alpha, int order = 64);

// tau_x f evaluated at a single point y.
cplx translate_at(const Field& f, const std::vector<double>& x,
                  const std::vector<double>& y, const JacobiRule& rule);

// tau_x f sampled on the grid, by direct theta-quadrature. Sampled inputs
// need the lateral shift to land on grid nodes and use cubic interpolation
// in r^2 for the off-grid radial argument (zero beyond the grid).
Field translate(const Field& f, const std::vector<double>& x, const Grid& grid,
                const JacobiRule& rule);

// tau_x f via the spectral route: inverse(Lambda(x, .) * forward(f)).
Field translate_spectral(const Field& f, const std::vector<double>& x, const Grid& grid);

namespace detail {
// Point evaluation of a field for the translation quadratures: closed form
// for analytic fields; node lookup laterally plus cubic-in-r^2 radial
// interpolation for sampled ones.
class FieldEvaluator {
 public:
  explicit FieldEvaluator(const Field& f);
  cplx operator()(const std::vector<double>& point) const;

 private:
  const Field& f_;
  bool sampled_;
};
}  // namespace detail

}  // namespace wwl
