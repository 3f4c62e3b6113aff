// Tensor grids on the half-space R^d x (0, inf) with the weighted measure
// mu_alpha, plus the DFT-conjugate spectral dual.
#pragma once

#include <memory>

#include "wwl/common.hpp"
#include "wwl/quadrature.hpp"
#include "wwl/special_functions.hpp"

namespace wwl {

// Dimension pair: d lateral axes and the Bessel index of the radial axis.
struct WeinsteinParams {
  int d;
  double alpha;
  WeinsteinParams(int d_, double alpha_) : d(d_), alpha(BesselIndex(alpha_).value) {
    if (d < 1) throw std::domain_error("WeinsteinParams: d must be >= 1");
  }
  bool operator==(const WeinsteinParams&) const = default;
};

// Normalization constant of the measure
//   d mu_alpha(x) = x_{d+1}^{2 alpha + 1} / ((2 pi)^{d/2} 2^alpha Gamma(alpha+1)) dx.
// This choice makes exp(-|x|^2/2) a fixed point of the transform with unit
// integral, and the transform an L2 isometry.
double measure_constant(const WeinsteinParams& p);
// Radial-only factor 1 / (2^alpha Gamma(alpha+1)).
double radial_measure_constant(double alpha);

namespace detail {
struct TransformPlans;  // owned lazily by the grid, built in transform.cpp
}

// Immutable tensor grid: d uniform lateral axes on [-L, L) (n_lat points
// each, midordinate DFT convention) and a radial midpoint axis on (0, R]
// with n_rad nodes. The spectral dual uses the DFT-conjugate lateral
// frequencies pi*m/L (stored ascending) and radial midpoints on
// (0, Lambda_max], Lambda_max = pi*n_rad/R. Cheap to copy (shared innards).
class Grid {
 public:
  const WeinsteinParams& params() const { return impl_->params; }
  int n_lat() const { return impl_->n_lat; }
  int n_rad() const { return impl_->n_rad; }
  double lateral_extent() const { return impl_->L; }
  double radial_extent() const { return impl_->R; }
  double lateral_step() const { return impl_->h; }
  double radial_step() const { return impl_->dr; }
  double spectral_lateral_step() const { return impl_->dlam; }
  double spectral_radial_step() const { return impl_->drho; }
  double spectral_radial_extent() const { return impl_->Lambda; }

  const std::vector<double>& lateral_nodes() const { return impl_->lat_nodes; }
  const std::vector<double>& radial_nodes() const { return impl_->rad_nodes; }
  const std::vector<double>& spectral_lateral_nodes() const { return impl_->slat_nodes; }
  const std::vector<double>& spectral_radial_nodes() const { return impl_->srad_nodes; }

  // Flat storage: lateral axes first (row-major), radial index last.
  std::size_t node_count() const { return impl_->total; }
  std::size_t lateral_count() const { return impl_->lat_total; }

  // Full quadrature weight of a flat node (physical / spectral side).
  const std::vector<double>& mu_weights() const { return impl_->mu_w; }
  const std::vector<double>& spectral_mu_weights() const { return impl_->smu_w; }

  // Product-integration rules along the radial axes (weight r^{2 alpha + 1}).
  const RadialRule& radial_rule() const { return *impl_->rad_rule; }
  const RadialRule& spectral_radial_rule() const { return *impl_->srad_rule; }

  // Coordinates of a flat node, length d+1 (lateral..., radial).
  std::vector<double> point_at(std::size_t flat) const;
  std::vector<double> spectral_point_at(std::size_t flat) const;

  // Decompose / rebuild a flat index.
  std::size_t radial_index(std::size_t flat) const { return flat % impl_->n_rad; }
  std::size_t lateral_flat(std::size_t flat) const { return flat / impl_->n_rad; }

  bool same_grid(const Grid& other) const { return impl_ == other.impl_; }
  bool compatible(const Grid& other) const;

  detail::TransformPlans& plans() const;  // lazily built transform tables

 private:
  friend Grid build_grid(const WeinsteinParams&, int, double, int, double);
  struct Impl {
    WeinsteinParams params;
    int n_lat, n_rad;
    double L, R, h, dr, Lambda, dlam, drho;
    std::size_t lat_total, total;
    std::vector<double> lat_nodes, rad_nodes, slat_nodes, srad_nodes;
    std::vector<double> mu_w, smu_w;
    std::unique_ptr<RadialRule> rad_rule, srad_rule;
    mutable std::shared_ptr<detail::TransformPlans> plans;
    Impl(const WeinsteinParams& p) : params(p), n_lat(0), n_rad(0) {}
    ~Impl();
  };
  std::shared_ptr<const Impl> impl_;
};

// n_lat even >= 8, n_rad >= 8, L > 0, R > 0.
Grid build_grid(const WeinsteinParams& params, int n_lat, double L, int n_rad, double R);

}  // namespace wwl
