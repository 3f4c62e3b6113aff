// Gauss-Jacobi rules (Golub-Welsch) and the product-integration rule used
// for radial integrals against the weight t^{2 alpha + 1}.
#pragma once

#include <functional>

#include "wwl/common.hpp"

namespace wwl {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Jacobi rule on [-1,1] for the weight (1-x)^a (1+x)^b, a,b > -1.
QuadRule gauss_jacobi(int n, double a, double b);
inline QuadRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

// Quadrature on the midpoint grid t_k = (k+1/2) X/N, k = 0..N-1, for
// integrals int_0^X t^s A(t) g(t) dt with g known only at the nodes and even
// in t. Each cell [kX/N, (k+1)X/N] integrates the local polynomial
// interpolant of g exactly against the full kernel t^s A(t): centered odd
// stencils (mirrored across the origin, order-tapered at the outer edge),
// Gauss-Legendre points per cell and a Gauss-Jacobi rule on the first cell
// so fractional powers of t cost no accuracy.
class RadialRule {
 public:
  RadialRule(int n, double extent, double s, int half_stencil = 6);

  int size() const { return n_; }
  double step() const { return step_; }

  // W with sum_k W_k g(t_k) ~= int_0^X t^s A(t) g(t) dt.
  void weights(const std::function<double(double)>& A, std::vector<double>& W) const;
  // Kernel-free weights (A == 1).
  const std::vector<double>& plain_weights() const { return plain_; }

 private:
  struct Cell {
    std::vector<double> x;     // evaluation points
    std::vector<double> base;  // gauss weight (x^s folded in)
    std::vector<int> fold;     // stencil slot -> node index
    std::vector<double> card;  // cardinal values [g * stencil_size + i]
  };
  std::vector<Cell> cells_;
  std::vector<double> plain_;
  int n_;
  double step_;
};

}  // namespace wwl
