// The integral transform: phase-corrected DFT across the lateral axes
// composed with a dense Bessel-quadrature matrix across the radial axis.
#pragma once

#include "wwl/field.hpp"

namespace wwl {

// Values on the spectral dual of a grid.
struct Spectrum {
  WeinsteinParams params;
  Grid grid;
  std::vector<cplx> values;
};

// Kernel  Lambda(lambda, x) = exp(-i <x', lambda'>) j_alpha(x_{d+1} lambda_{d+1});
// symmetric, bounded by 1 on real arguments.
cplx kernel(const WeinsteinParams& params, const std::vector<double>& lambda,
            const std::vector<double>& x);

// F(f)(lambda) = int f(x) Lambda(x, lambda) d mu_alpha(x) on the spectral dual.
Spectrum forward(const Field& f, const Grid& grid);

// f(x) = int F(lambda) Lambda(-x, lambda) d mu_alpha(lambda): the forward
// quadrature with the lateral sign flipped, using spectral weights.
Field inverse(const Spectrum& F);

// Samples a field's closed spectral form on the spectral dual.
Spectrum analytic_spectrum_on(const Field& f, const Grid& grid);

// Physical samples by whatever route the representation allows (direct
// sampling, or inverse transform of a closed spectral form).
Field materialize(const Field& f, const Grid& grid);

// Spectrum with the lateral frequencies flipped (lambda -> -lambda).
Spectrum spectral_check(const Spectrum& F);

// Seeded random field concentrated on the radial spectral band [lo, hi]:
// a super-Gaussian envelope exp(-t^4) in the normalized band coordinate
// (entire, so the grid resolves it) times a smooth random complex
// modulation. Spectrum magnitude is < 1e-10 outside ~2.2x the band.
Field random_band_limited_field(const Grid& grid, double lo, double hi,
                                std::uint64_t seed);

double spectrum_norm2(const Spectrum& F);
double spectrum_norm_inf(const Spectrum& F);
cplx spectrum_inner(const Spectrum& F, const Spectrum& G);

// Verifies F(conj f) = conj(F(check f)) and F(f)(lambda) = F(check f)(-lambda)
// on the grid; returns the larger max-abs deviation.
struct ConjugationReport {
  double conj_identity_dev;
  double reflect_identity_dev;
  double max_dev;
};
ConjugationReport conjugation_identity_check(const Field& f, const Grid& grid);

namespace detail {
TransformPlans& plans_for(const Grid& grid, std::shared_ptr<TransformPlans>& slot);
}

}  // namespace wwl
