#include "wwl/grid.hpp"

#include <cmath>

#include "wwl/transform.hpp"

namespace wwl {

double radial_measure_constant(double alpha) {
  return 1.0 / (std::pow(2.0, alpha) * gamma_fn(alpha + 1.0));
}

double measure_constant(const WeinsteinParams& p) {
  return std::pow(2.0 * kPi, -0.5 * p.d) * radial_measure_constant(p.alpha);
}

Grid::Impl::~Impl() = default;

Grid build_grid(const WeinsteinParams& params, int n_lat, double L, int n_rad, double R) {
  if (n_lat < 8 || n_lat % 2 != 0)
    throw ConfigError("build_grid: n_lat must be even and >= 8");
  if (n_rad < 8) throw ConfigError("build_grid: n_rad must be >= 8");
  if (!(L > 0.0) || !(R > 0.0))
    throw ConfigError("build_grid: extents must be positive");

  auto impl = std::make_shared<Grid::Impl>(params);
  impl->n_lat = n_lat;
  impl->n_rad = n_rad;
  impl->L = L;
  impl->R = R;
  impl->h = 2.0 * L / n_lat;
  impl->dr = R / n_rad;
  impl->Lambda = kPi * n_rad / R;
  impl->dlam = kPi / L;
  impl->drho = impl->Lambda / n_rad;  // == pi / R

  impl->lat_nodes.resize(n_lat);
  impl->slat_nodes.resize(n_lat);
  for (int j = 0; j < n_lat; ++j) {
    impl->lat_nodes[j] = -L + j * impl->h;
    impl->slat_nodes[j] = (j - n_lat / 2) * impl->dlam;  // ascending
  }
  impl->rad_nodes.resize(n_rad);
  impl->srad_nodes.resize(n_rad);
  for (int k = 0; k < n_rad; ++k) {
    impl->rad_nodes[k] = (k + 0.5) * impl->dr;
    impl->srad_nodes[k] = (k + 0.5) * impl->drho;
  }

  impl->lat_total = 1;
  for (int i = 0; i < params.d; ++i) impl->lat_total *= (std::size_t)n_lat;
  impl->total = impl->lat_total * (std::size_t)n_rad;

  const double s = 2.0 * params.alpha + 1.0;
  impl->rad_rule = std::make_unique<RadialRule>(n_rad, R, s);
  impl->srad_rule = std::make_unique<RadialRule>(n_rad, impl->Lambda, s);

  const double c_rad = radial_measure_constant(params.alpha);
  const double lat_cell = std::pow(impl->h / std::sqrt(2.0 * kPi), params.d);
  const double slat_cell = std::pow(impl->dlam / std::sqrt(2.0 * kPi), params.d);
  const auto& wr = impl->rad_rule->plain_weights();
  const auto& ws = impl->srad_rule->plain_weights();
  impl->mu_w.resize(impl->total);
  impl->smu_w.resize(impl->total);
  for (std::size_t f = 0; f < impl->total; ++f) {
    const int k = (int)(f % n_rad);
    impl->mu_w[f] = lat_cell * c_rad * wr[k];
    impl->smu_w[f] = slat_cell * c_rad * ws[k];
  }

  Grid g;
  g.impl_ = std::move(impl);
  return g;
}

std::vector<double> Grid::point_at(std::size_t flat) const {
  const int d = impl_->params.d;
  std::vector<double> p(d + 1);
  p[d] = impl_->rad_nodes[flat % impl_->n_rad];
  std::size_t lat = flat / impl_->n_rad;
  for (int i = d - 1; i >= 0; --i) {
    p[i] = impl_->lat_nodes[lat % impl_->n_lat];
    lat /= impl_->n_lat;
  }
  return p;
}

std::vector<double> Grid::spectral_point_at(std::size_t flat) const {
  const int d = impl_->params.d;
  std::vector<double> p(d + 1);
  p[d] = impl_->srad_nodes[flat % impl_->n_rad];
  std::size_t lat = flat / impl_->n_rad;
  for (int i = d - 1; i >= 0; --i) {
    p[i] = impl_->slat_nodes[lat % impl_->n_lat];
    lat /= impl_->n_lat;
  }
  return p;
}

bool Grid::compatible(const Grid& other) const {
  return impl_ == other.impl_ ||
         (params() == other.params() && n_lat() == other.n_lat() &&
          n_rad() == other.n_rad() && lateral_extent() == other.lateral_extent() &&
          radial_extent() == other.radial_extent());
}

detail::TransformPlans& Grid::plans() const {
  return detail::plans_for(*this, impl_->plans);
}

}  // namespace wwl
