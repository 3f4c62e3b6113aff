// Scale-window multiplier, truncated reconstructions (spectral fast path and
// scale-by-scale convolution oracle) and nested-window convergence sweeps.
#pragma once

#include "wwl/convolution.hpp"
#include "wwl/wavelet.hpp"

namespace wwl {

struct CalderonWindow {
  double gamma;
  double delta;
  CalderonWindow(double g, double d) : gamma(g), delta(d) {
    if (!(0.0 < g && g < d))
      throw std::domain_error("CalderonWindow: need 0 < gamma < delta");
  }
};

// Scale quadrature for a window: the global log grid supplies the cells,
// each cell (clipped to the window) carries an 8-point Gauss-Legendre
// subrule. Splitting a window at any interior point changes the rule only
// at one cell, so window additivity holds to quadrature precision.
struct WindowRule {
  std::vector<double> nodes;    // scale values a
  std::vector<double> weights;  // weights in the da/a measure
  double eff_gamma;             // window after clipping to the scale grid
  double eff_delta;
};
WindowRule window_scale_rule(const ScaleGrid& scales, const CalderonWindow& window);

struct MultiplierProfile {
  CalderonWindow window;
  std::vector<cplx> values;     // K at every spectral node
  std::size_t active_nodes;     // nodes where the integrand is not identically 0
  double k_min_active;          // min Re K over active nodes
  double k_max;                 // max Re K overall
  double max_abs;               // max |K|
};

// K(xi) = (1/C_{phi,psi}) int_gamma^delta conj(F phi)(a xi) F psi(a xi) da/a,
// restricted to the scale grid's range. Requires C_{phi,psi} != 0.
MultiplierProfile multiplier(const WaveletPair& pair, const CalderonWindow& window,
                             const Grid& grid, const ScaleGrid& scales);

// inverse(forward(f) . K): the fast path for the truncated reconstruction.
Field reconstruct_spectral(const Field& f, const WaveletPair& pair,
                           const CalderonWindow& window, const Grid& grid,
                           const ScaleGrid& scales);

// The double integral evaluated scale by scale through the convolution form
// (1/C) int (check(f) * conj(phi_a))check * psi_a da/a, accumulating the
// same window rule in ascending scale order. Grids beyond 64 points per
// axis are refused.
Field reconstruct_direct(const Field& f, const WaveletPair& pair,
                         const CalderonWindow& window, const Grid& grid,
                         const ScaleGrid& scales);

struct SweepRow {
  double gamma;
  double delta;
  double l2_error;      // ||f_{gamma,delta} - f||_2
  double rel_error;     // l2_error / ||f||_2
  double k_min;         // over active nodes (0 for an empty window)
  double k_max;
};

// Reconstruction errors over nested windows (gamma nonincreasing, delta
// nondecreasing). A degenerate entry with gamma == delta denotes the empty
// window: zero reconstruction, error ||f||_2.
std::vector<SweepRow> convergence_sweep(const Field& f, const WaveletPair& pair,
                                        const std::vector<std::pair<double, double>>& windows,
                                        const Grid& grid, const ScaleGrid& scales);

}  // namespace wwl
