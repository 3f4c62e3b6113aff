#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wwl/calderon.hpp"

using namespace wwl;

namespace {
Grid desk_grid(double alpha, int n = 256, double ext = 12.0) {
  return build_grid(WeinsteinParams(1, alpha), n, ext, n, ext);
}

WaveletPair hermite_pair(const Grid& g, const ScaleGrid& scales) {
  Field h1 = Field::analytic(g.params(), spectral_hermite_family(1));
  Field h2 = Field::analytic(g.params(), spectral_hermite_family(2));
  return make_wavelet_pair(h1, h2, g, scales, default_probes(g.params()));
}

// Closed form for the (hermite-1, hermite-2) pair:
//   K(xi) = [gamma(3, (delta rho)^2) - gamma(3, (gamma rho)^2)] / Gamma(3),
// with rho = |xi| and the window clipped to the scale grid.
double hermite_multiplier_oracle(double rho, double gamma, double delta) {
  const double u_lo = gamma * gamma * rho * rho;
  const double u_hi = delta * delta * rho * rho;
  return (lower_incomplete_gamma(3.0, u_hi) - lower_incomplete_gamma(3.0, u_lo)) / 2.0;
}
}  // namespace

TEST_CASE("calderon window: degenerate and inverted windows are rejected") {
  CHECK_THROWS_AS(CalderonWindow(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(CalderonWindow(2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(CalderonWindow(0.0, 1.0), std::domain_error);
  CHECK_NOTHROW(CalderonWindow(0.5, 2.0));
}

TEST_CASE("window rule: cell-split additivity of the quadrature itself") {
  ScaleGrid scales = build_scale_grid();
  auto integrate_rule = [&](double g, double d) {
    WindowRule r = window_scale_rule(scales, CalderonWindow(g, d));
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      acc += r.weights[i] * std::exp(-r.nodes[i]);  // arbitrary smooth integrand
    return acc;
  };
  // splitting at a point interior to a cell
  const double m = 1.2345;
  CHECK(std::fabs(integrate_rule(0.5, 8.0) -
                  (integrate_rule(0.5, m) + integrate_rule(m, 8.0))) <= 1e-14);
}

TEST_CASE("multiplier: incomplete-gamma closed form, positivity and bound") {
  for (double alpha : {0.5, 1.0}) {
    Grid g = desk_grid(alpha);
    ScaleGrid scales = build_scale_grid();
    WaveletPair pair = hermite_pair(g, scales);
    REQUIRE(pair.valid);
    CHECK(pair.C_phi == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(pair.C_psi == doctest::Approx(3.0).epsilon(1e-6));

    const CalderonWindow win(0.5, 2.0);
    MultiplierProfile prof = multiplier(pair, win, g, scales);
    double dev = 0.0;
    for (std::size_t i = 0; i < prof.values.size(); i += 17) {
      const auto xi = g.spectral_point_at(i);
      const double rho = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1]);
      dev = std::max(dev, std::abs(prof.values[i] -
                                   hermite_multiplier_oracle(rho, 0.5, 2.0)));
    }
    CHECK(dev <= 1e-6);

    // 0 < K <= sqrt(C_phi C_psi) / C_{phi,psi} on active nodes
    const double bound = std::sqrt(pair.C_phi * pair.C_psi) / std::abs(pair.C_phi_psi);
    CHECK(prof.active_nodes > 0);
    CHECK(prof.k_min_active > 0.0);
    CHECK(prof.k_max <= bound + 1e-8);
  }
}

TEST_CASE("multiplier: wide window saturates to one on the mid band") {
  Grid g = desk_grid(0.5);
  ScaleGrid scales = build_scale_grid();
  WaveletPair pair = hermite_pair(g, scales);
  MultiplierProfile prof = multiplier(pair, CalderonWindow(1e-3, 1e3), g, scales);
  for (std::size_t i = 0; i < prof.values.size(); i += 11) {
    const auto xi = g.spectral_point_at(i);
    const double rho = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1]);
    if (rho < 0.5 || rho > 2.5) continue;
    CHECK(prof.values[i].real() >= 1.0 - 1e-4);
    CHECK(prof.values[i].real() <= 1.0 + 1e-8);
  }
}

TEST_CASE("multiplier: window additivity") {
  Grid g = desk_grid(0.5, 64);
  ScaleGrid scales = build_scale_grid();
  WaveletPair pair = hermite_pair(g, scales);
  MultiplierProfile whole = multiplier(pair, CalderonWindow(0.25, 4.0), g, scales);
  MultiplierProfile left = multiplier(pair, CalderonWindow(0.25, 1.1), g, scales);
  MultiplierProfile right = multiplier(pair, CalderonWindow(1.1, 4.0), g, scales);
  double dev = 0.0;
  for (std::size_t i = 0; i < whole.values.size(); ++i)
    dev = std::max(dev, std::abs(whole.values[i] - left.values[i] - right.values[i]));
  CHECK(dev <= 1e-10);
}

TEST_CASE("multiplier: vanishing cross constant violates A2") {
  Grid g = desk_grid(0.5, 64);
  ScaleGrid scales = build_scale_grid();
  auto probes = default_probes(g.params());
  Field lo = Field::analytic(g.params(), smooth_band_family(0.25, 0.7));
  Field hi = Field::analytic(g.params(), smooth_band_family(8.0, 16.0));
  WaveletPair pair = make_wavelet_pair(lo, hi, g, scales, probes, 1e-3);
  CHECK_THROWS_AS(multiplier(pair, CalderonWindow(0.5, 2.0), g, scales), AssumptionError);
  Field f = Field::analytic(g.params(), gaussian_family(1.0));
  CHECK_THROWS_AS(
      convergence_sweep(f, pair, {{0.5, 2.0}}, g, scales), AssumptionError);
}

TEST_CASE("reconstruct: wide window recovers the field, zero stays zero") {
  for (double alpha : {0.5, 1.0}) {
    Grid g = desk_grid(alpha);
    ScaleGrid scales = build_scale_grid();
    WaveletPair pair = hermite_pair(g, scales);
    Field f = Field::analytic(g.params(), gaussian_family(1.0));
    Field rec = reconstruct_spectral(f, pair, CalderonWindow(1e-3, 1e3), g, scales);
    Field diff = add_sampled(rec, 1.0, f.sample(g), -1.0);
    CHECK(norm_p(diff, g, 2.0) / norm_p(f, g, 2.0) <= 1e-3);

    Field zrec = reconstruct_spectral(f.scaled(0.0), pair, CalderonWindow(0.5, 2.0), g, scales);
    for (const auto& v : zrec.values()) CHECK(std::abs(v) == 0.0);
  }
}

TEST_CASE("reconstruct: narrow window truncates severely") {
  Grid g = desk_grid(0.5);
  ScaleGrid scales = build_scale_grid();
  WaveletPair pair = hermite_pair(g, scales);
  Field f = Field::analytic(g.params(), gaussian_family(1.0));
  Field rec = reconstruct_spectral(f, pair, CalderonWindow(1.0, 1.1), g, scales);
  CHECK(norm_p(rec, g, 2.0) <= 0.25 * norm_p(f, g, 2.0));
}

TEST_CASE("theorem equivalence: direct double integral vs spectral multiplier") {
  for (double alpha : {0.5, 1.0}) {
    Grid g = build_grid(WeinsteinParams(1, alpha), 64, 12.0, 64, 12.0);
    ScaleGrid scales = build_scale_grid(1.0 / 64.0, 64.0, 33);
    WaveletPair pair = hermite_pair(g, scales);
    Field f = Field::analytic(g.params(), gaussian_family(1.0));
    // the N=64 box resolves dilations in [1/2, 2]: smaller scales fall under
    // the radial step, larger ones no longer decay inside the box
    const CalderonWindow win(0.5, 2.0);
    Field direct = reconstruct_direct(f, pair, win, g, scales);
    Field spectral = reconstruct_spectral(f, pair, win, g, scales);
    double dev = 0.0;
    for (std::size_t i = 0; i < direct.values().size(); ++i)
      dev = std::max(dev, std::abs(direct.values()[i] - spectral.values()[i]));
    CHECK(dev <= 1e-3);
  }
  Grid big = desk_grid(0.5);
  ScaleGrid scales = build_scale_grid();
  WaveletPair pair = hermite_pair(big, scales);
  Field f = Field::analytic(big.params(), gaussian_family(1.0));
  CHECK_THROWS_AS(reconstruct_direct(f, pair, CalderonWindow(0.5, 2.0), big, scales),
                  CapabilityError);
}

TEST_CASE("per-scale convolution bound") {
  // ||F((check f * conj(phi_a))check * psi_a)||_2
  //   <= ||f||_2 ||F phi||_inf ||F psi||_inf
  Grid g = build_grid(WeinsteinParams(1, 0.5), 64, 12.0, 64, 12.0);
  Field f = Field::analytic(g.params(), gaussian_family(1.0));
  Field h1 = Field::analytic(g.params(), spectral_hermite_family(1));
  Field h2 = Field::analytic(g.params(), spectral_hermite_family(2));
  const Field fs = materialize(f, g);
  double sup_phi = 0.0, sup_psi = 0.0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const auto xi = g.spectral_point_at(i);
    sup_phi = std::max(sup_phi, std::abs(h1.spectrum_value(xi)));
    sup_psi = std::max(sup_psi, std::abs(h2.spectrum_value(xi)));
  }
  const double n2 = norm_p(fs, g, 2.0);
  for (double a : {0.25, 1.0, 4.0}) {
    Field conv1 = convolve(check_function(fs), dilate(h1, a).conjugated(), g).field;
    Field term = convolve(check_function(conv1), dilate(h2, a), g).field;
    CHECK(spectrum_norm2(forward(term, g)) <= n2 * sup_phi * sup_psi * (1.0 + 1e-6));
  }
}

TEST_CASE("convergence sweep: nested dyadic windows") {
  for (double alpha : {0.5, 1.0}) {
    Grid g = desk_grid(alpha);
    ScaleGrid scales = build_scale_grid();
    WaveletPair pair = hermite_pair(g, scales);
    Field f = Field::analytic(g.params(), gaussian_family(1.0));
    std::vector<std::pair<double, double>> windows;
    for (int k = 0; k <= 6; ++k)
      windows.push_back({std::pow(2.0, -k), std::pow(2.0, k)});
    auto rows = convergence_sweep(f, pair, windows, g, scales);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].rel_error == doctest::Approx(1.0));  // empty window
    for (std::size_t i = 1; i < rows.size(); ++i)
      CHECK(rows[i].l2_error < rows[i - 1].l2_error + 1e-9);
    CHECK(rows.back().rel_error <= 1e-3);

    // single window: one row, no monotonicity claim
    auto one = convergence_sweep(f, pair, {{0.5, 2.0}}, g, scales);
    CHECK(one.size() == 1);
  }
  // non-nested windows are rejected
  Grid g = desk_grid(0.5, 64);
  ScaleGrid scales = build_scale_grid();
  WaveletPair pair = hermite_pair(g, scales);
  Field f = Field::analytic(g.params(), gaussian_family(1.0));
  CHECK_THROWS_AS(convergence_sweep(f, pair, {{0.5, 2.0}, {0.7, 4.0}}, g, scales),
                  std::domain_error);
}
