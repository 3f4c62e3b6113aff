// Dilations, wavelet atoms, the continuous wavelet transform, admissibility
// and two-wavelet constants, and the Parseval-type cross check.
#pragma once

#include "wwl/translation.hpp"

namespace wwl {

// Log-uniform scale nodes with trapezoid weights realizing da/a.
struct ScaleGrid {
  double a_min = 1.0 / 64.0;
  double a_max = 64.0;
  int n_scales = 129;
  std::vector<double> nodes;
  std::vector<double> log_weights;  // sums to ln(a_max / a_min)
};
ScaleGrid build_scale_grid(double a_min = 1.0 / 64.0, double a_max = 64.0,
                           int n_scales = 129);

// Evaluates a wavelet's spectrum at arbitrary frequencies: closed form when
// the field has one, multilinear interpolation of the grid spectrum (zero
// outside the spectral box) otherwise.
class SpectrumEval {
 public:
  SpectrumEval() = default;
  SpectrumEval(const Field& f, const Grid& grid);
  cplx operator()(const std::vector<double>& xi) const;
  bool closed_form() const { return closed_; }
  const Spectrum& grid_spectrum() const { return *cached_; }

 private:
  bool closed_ = false;
  std::shared_ptr<const Field> analytic_;
  std::shared_ptr<const Spectrum> cached_;
};

// Probe frequencies for certifying the a.e.-constancy of scale integrals:
// log-spaced magnitudes times a few fixed directions (all with a strictly
// positive last coordinate).
std::vector<std::vector<double>> default_probes(const WeinsteinParams& params,
                                                int n_magnitudes = 8,
                                                double mag_lo = 0.5,
                                                double mag_hi = 2.5);

struct AdmissibilityResult {
  cplx mean;                    // the constant (real positive for C_phi)
  double spread_abs;            // max |per-probe - mean|
  double spread_rel;            // spread_abs / |mean|
  std::vector<cplx> per_probe;
  bool pass;                    // spread_rel within tolerance
};

// C_phi = int_0^infty |F(phi)(a xi)|^2 da/a over the scale grid, per probe.
// Throws AssumptionError if the spectrum vanishes on every probe ray.
AdmissibilityResult admissibility_constant(const Field& phi, const ScaleGrid& scales,
                                           const std::vector<std::vector<double>>& probes,
                                           const Grid& grid, double spread_tol = 1e-4);

// C_{phi,psi} = int F(psi)(a xi) conj(F(phi)(a xi)) da/a.
AdmissibilityResult two_wavelet_constant(const Field& phi, const Field& psi,
                                         const ScaleGrid& scales,
                                         const std::vector<std::vector<double>>& probes,
                                         const Grid& grid, double spread_tol = 1e-4);

// Analysis wavelet phi, synthesis wavelet psi, with cached spectra and the
// admissibility / cross constants.
struct WaveletPair {
  Field phi;
  Field psi;
  SpectrumEval phi_spec;
  SpectrumEval psi_spec;
  double C_phi = 0.0;
  double C_psi = 0.0;
  cplx C_phi_psi{0.0, 0.0};
  double spread_rel = 0.0;  // worst across the three constants
  bool valid = false;
};
WaveletPair make_wavelet_pair(const Field& phi, const Field& psi, const Grid& grid,
                              const ScaleGrid& scales,
                              const std::vector<std::vector<double>>& probes,
                              double spread_tol = 1e-4);

// phi_a(x) = a^{-(2 alpha + d + 2)} phi(x / a); exact on analytic fields.
inline Field dilate(const Field& phi, double a) { return phi.dilated(a); }

// Atom a^{alpha + 1 + d/2} tau_x phi_a, via the spectral route.
Field wavelet_atom(const Field& phi, double a, const std::vector<double>& x,
                   const Grid& grid);
// Same by direct theta-quadrature (analytic phi).
Field wavelet_atom_direct(const Field& phi, double a, const std::vector<double>& x,
                          const Grid& grid, const JacobiRule& rule);

// Coefficients indexed by (scale, flat grid node).
struct CwtMatrix {
  ScaleGrid scales;
  Grid grid;
  std::vector<cplx> values;  // [s * node_count + i]
  double max_abs = 0.0;
};

// Phi(a, x) = <f, phi_{a,x}>, one spectral convolution per scale.
CwtMatrix cwt(const Field& f, const Field& phi, const ScaleGrid& scales, const Grid& grid);

// Direct inner-product oracle for a single (scale, point).
cplx cwt_point_oracle(const Field& f, const Field& phi, double a,
                      const std::vector<double>& x, const Grid& grid,
                      const JacobiRule& rule);

struct ParsevalReport {
  cplx lhs;             // double integral of Phi_phi(f) conj(Phi_psi(g))
  cplx rhs;             // C_{phi,psi} <f, g>
  double rel_dev;       // |lhs - rhs| / |rhs| (absolute dev if rhs ~ 0)
  double abs_dev;
  double max_coeff_phi; // max |Phi_phi f| seen
  double max_coeff_psi;
};
ParsevalReport parseval_cross_check(const Field& f, const Field& g,
                                    const WaveletPair& pair, const ScaleGrid& scales,
                                    const Grid& grid);

}  // namespace wwl
