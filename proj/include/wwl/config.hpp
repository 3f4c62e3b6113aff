// Key-value experiment configuration: one flat schema with defaults, strict
// parsing (unknown keys rejected) and a round-trippable text form. Every
// numerical threshold the checks use lives here, so reports can echo them.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wwl/common.hpp"

namespace wwl {

struct ExperimentConfig {
  // operator / grid
  int d = 1;
  double alpha = 0.5;
  int n_lat = 256;
  double lateral_extent = 12.0;
  int n_rad = 256;
  double radial_extent = 12.0;
  // scales
  double a_min = 1.0 / 64.0;
  double a_max = 64.0;
  int n_scales = 129;
  // theta quadrature
  int theta_order = 64;
  // wavelets (family: hermite | gaussian | bandlimited | smoothband)
  std::string phi_family = "hermite";
  int phi_m = 1;
  double phi_sigma = 1.0;
  double phi_band_lo = 0.25;
  double phi_band_hi = 0.7;
  std::string psi_family = "hermite";
  int psi_m = 2;
  double psi_sigma = 1.0;
  double psi_band_lo = 8.0;
  double psi_band_hi = 16.0;
  // input fields (field: gaussian | hermite | modulated_gaussian | random_band)
  std::string input_field = "gaussian";
  double input_sigma = 1.0;
  int input_m = 1;
  double input_k = 1.0;
  double input_band_lo = 0.5;
  double input_band_hi = 4.0;
  std::string input2_field = "gaussian";
  double input2_sigma = 1.25;
  int input2_m = 1;
  double input2_k = 1.0;
  double input2_band_lo = 0.5;
  double input2_band_hi = 4.0;
  // scale-window experiments
  std::string windows = "0.5:2.0";
  int sweep_k_max = 6;
  // constancy probes
  int probes_n_magnitudes = 8;
  double probes_mag_lo = 0.5;
  double probes_mag_hi = 2.5;
  double spread_tol = 1e-4;
  // misc
  std::uint64_t seed = 12345;
  std::string output_dir = "out";
  // check tolerances (acceptance thresholds)
  double tol_kernel_bound = 1e-12;
  double tol_kernel_symmetry = 1e-12;
  double tol_plancherel = 1e-5;
  double tol_round_trip = 1e-6;
  double tol_self_duality = 1e-5;
  double tol_translation_identity = 1e-13;
  double tol_translation_mass = 1e-5;
  double tol_translation_routes = 1e-4;
  double tol_translation_norm_slack = 1e-6;
  double tol_factorization = 1e-8;
  double tol_convolution_oracle = 1e-3;
  double tol_young_slack = 5e-3;
  double tol_admissibility = 1e-6;
  double tol_parseval = 1e-2;
  double tol_orthogonality = 1e-6;
  double tol_multiplier_oracle = 1e-6;
  double tol_multiplier_bound_slack = 1e-8;
  double tol_window_additivity = 1e-10;
  double tol_equivalence = 1e-3;
  double tol_sweep_final = 1e-3;
  double tol_sweep_slack = 1e-9;
  double tol_cwt_bound_slack = 1e-6;
  double tol_cwt_oracle = 1e-4;

  bool operator==(const ExperimentConfig&) const = default;

  // "key = value" lines; '#' starts a comment. Unknown keys are rejected.
  static ExperimentConfig from_kv(const std::string& text);
  std::string to_kv() const;

  void validate() const;  // numeric constraints of the referenced types
};

// "g1:d1,g2:d2,..." -> window list
std::vector<std::pair<double, double>> parse_windows(const std::string& spec);

}  // namespace wwl
