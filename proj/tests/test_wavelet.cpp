#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wwl/wavelet.hpp"

using namespace wwl;

namespace {
Grid desk_grid(double alpha, int n = 256, double ext = 12.0) {
  return build_grid(WeinsteinParams(1, alpha), n, ext, n, ext);
}

// Truncated closed form of int_{a_min}^{a_max} (a rho)^{2m+2n} e^{-(a rho)^2} da/a
// via the substitution u = (a rho)^2: (1/2) [gamma(m+n, u)]_{u_lo}^{u_hi}.
double hermite_scale_integral(int mn, double rho, double a_min, double a_max) {
  const double u_lo = a_min * a_min * rho * rho;
  const double u_hi = a_max * a_max * rho * rho;
  return 0.5 * (lower_incomplete_gamma(mn, u_hi) - lower_incomplete_gamma(mn, u_lo));
}
}  // namespace

TEST_CASE("scale grid: log weights realize da/a") {
  ScaleGrid s = build_scale_grid(1.0 / 64.0, 64.0, 129);
  double total = 0.0;
  for (double w : s.log_weights) total += w;
  CHECK(std::fabs(total - std::log(64.0 * 64.0)) <= 1e-12);
  for (int i = 1; i < s.n_scales; ++i) CHECK(s.nodes[i] > s.nodes[i - 1]);
  CHECK(s.nodes.front() == doctest::Approx(1.0 / 64.0));
  CHECK(s.nodes.back() == doctest::Approx(64.0));
  CHECK_THROWS_AS(build_scale_grid(2.0, 1.0, 9), std::domain_error);
}

TEST_CASE("dilate: norm scaling and spectral law") {
  // bigger box so that a = 4 still fits and a = 1/4 is still resolved
  Grid g = build_grid(WeinsteinParams(1, 0.5), 512, 24.0, 512, 24.0);
  Field phi = Field::analytic(g.params(), gaussian_family(1.0));
  const double p1 = norm_p(phi, g, 1.0);
  for (double a : {0.5, 2.0}) {
    CHECK(norm_p(dilate(phi, a), g, 1.0) == doctest::Approx(p1).epsilon(1e-6));
  }
  // ||phi_a||_p = a^{(2a+d+2)(1/p - 1)} ||phi||_p
  const double power = 2.0 * g.params().alpha + g.params().d + 2.0;
  for (double a : {0.5, 2.0}) {
    const double p2 = norm_p(dilate(phi, a), g, 2.0);
    CHECK(p2 == doctest::Approx(std::pow(a, -power / 2.0) * norm_p(phi, g, 2.0))
                    .epsilon(1e-6));
  }
  // F(phi_a)(xi) = F(phi)(a xi) at 20 probe nodes for five dilation factors
  for (double a : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    Field phia = dilate(phi, a);
    Spectrum F = forward(phia.sample(g), g);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> pick(0, g.node_count() - 1);
    for (int t = 0; t < 20; ++t) {
      const std::size_t i = pick(rng);
      const auto xi = g.spectral_point_at(i);
      std::vector<double> axi{a * xi[0], a * xi[1]};
      CHECK(std::abs(F.values[i] - phi.spectrum_value(axi)) <= 1e-5);
    }
  }
  CHECK_THROWS_AS(dilate(phi, -2.0), std::domain_error);
}

TEST_CASE("wavelet atom: unit scale at origin is the wavelet itself") {
  Grid g = desk_grid(0.5, 128);
  Field phi = Field::analytic(g.params(), spectral_hermite_family(1));
  Field atom = wavelet_atom(phi, 1.0, {0.0, 0.0}, g);
  Field ref = phi.sample(g);
  double dev = 0.0;
  for (std::size_t i = 0; i < atom.values().size(); ++i)
    dev = std::max(dev, std::abs(atom.values()[i] - ref.values()[i]));
  CHECK(dev <= 1e-6);
}

TEST_CASE("wavelet atom: L2 and L1 norm bounds over random (a, x)") {
  Grid g = desk_grid(0.5);
  Field phi = Field::analytic(g.params(), spectral_hermite_family(1));
  const double n2 = norm_p(phi, g, 2.0);
  const double n1 = norm_p(phi, g, 1.0);
  const double power = 2.0 * g.params().alpha + g.params().d + 2.0;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ua(-1.0, 1.0), ul(-2.0, 2.0), ur(0.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const double a = std::pow(4.0, ua(rng));
    std::vector<double> x{ul(rng), ur(rng)};
    Field atom = wavelet_atom(phi, a, x, g);
    CHECK(norm_p(atom, g, 2.0) <= n2 * (1.0 + 1e-6));
    CHECK(norm_p(atom, g, 1.0) <= std::pow(a, power * (1.0 - 0.5)) * n1 * (1.0 + 1e-6));
  }
}

TEST_CASE("admissibility: hermite closed forms via the incomplete gamma oracle") {
  for (double alpha : {0.5, 1.0}) {
    Grid g = desk_grid(alpha);
    ScaleGrid scales = build_scale_grid();
    auto probes = default_probes(g.params());
    Field h1 = Field::analytic(g.params(), spectral_hermite_family(1));
    AdmissibilityResult c1 = admissibility_constant(h1, scales, probes, g);
    CHECK(std::fabs(c1.mean.real() - 0.5) <= 1e-6);
    CHECK(std::fabs(c1.mean.imag()) <= 1e-14);
    CHECK(c1.pass);
    CHECK(c1.spread_rel <= 1e-4);
    // per-probe truncated oracle: C(rho) = (gamma(2,u_hi) - gamma(2,u_lo))/2
    for (std::size_t p = 0; p < probes.size(); ++p) {
      double rho = 0.0;
      for (double v : probes[p]) rho += v * v;
      rho = std::sqrt(rho);
      const double oracle = hermite_scale_integral(2, rho, scales.a_min, scales.a_max);
      CHECK(std::abs(c1.per_probe[p].real() - oracle) <= 1e-6);
    }

    Field h2 = Field::analytic(g.params(), spectral_hermite_family(2));
    AdmissibilityResult c12 = two_wavelet_constant(h1, h2, scales, probes, g);
    CHECK(std::abs(c12.mean - cplx(1.0, 0.0)) <= 1e-6);
    CHECK(c12.pass);
    for (std::size_t p = 0; p < probes.size(); ++p) {
      double rho = 0.0;
      for (double v : probes[p]) rho += v * v;
      rho = std::sqrt(rho);
      const double oracle = hermite_scale_integral(3, rho, scales.a_min, scales.a_max);
      CHECK(std::abs(c12.per_probe[p] - oracle) <= 1e-6);
    }
    // psi = phi reduces the cross constant to C_phi
    AdmissibilityResult c11 = two_wavelet_constant(h1, h1, scales, probes, g);
    CHECK(std::abs(c11.mean - c1.mean) <= 1e-12);
  }
}

TEST_CASE("admissibility: gaussian is flagged, zero errors out") {
  Grid g = desk_grid(0.5);
  ScaleGrid scales = build_scale_grid();
  auto probes = default_probes(g.params());
  Field gauss = Field::analytic(g.params(), gaussian_family(1.0));
  AdmissibilityResult res = admissibility_constant(gauss, scales, probes, g);
  CHECK_FALSE(res.pass);  // log-divergent at a -> 0: per-probe values disagree
  CHECK(res.spread_rel > 1e-2);

  Field zero = gauss.scaled(0.0);
  CHECK_THROWS_AS(admissibility_constant(zero, scales, probes, g), AssumptionError);
}

TEST_CASE("two-wavelet: disjoint spectral supports give a zero constant") {
  Grid g = desk_grid(0.5);
  ScaleGrid scales = build_scale_grid();
  auto probes = default_probes(g.params());
  Field lo = Field::analytic(g.params(), smooth_band_family(0.25, 0.7));
  Field hi = Field::analytic(g.params(), smooth_band_family(8.0, 16.0));
  AdmissibilityResult cross = two_wavelet_constant(lo, hi, scales, probes, g);
  CHECK(std::abs(cross.mean) <= 1e-10);
  CHECK(cross.spread_abs <= 1e-10);
}

TEST_CASE("two-wavelet: Cauchy-Schwarz bound on the cross constant") {
  Grid g = desk_grid(0.5);
  ScaleGrid scales = build_scale_grid();
  auto probes = default_probes(g.params());
  std::vector<Field> wavelets;
  wavelets.push_back(Field::analytic(g.params(), spectral_hermite_family(1)));
  wavelets.push_back(Field::analytic(g.params(), spectral_hermite_family(2)));
  wavelets.push_back(Field::analytic(g.params(), smooth_band_family(0.5, 2.0)));
  for (const auto& a : wavelets) {
    for (const auto& b : wavelets) {
      // compactly supported bump spectra certify constancy at ~3e-4
      WaveletPair pair = make_wavelet_pair(a, b, g, scales, probes, 1e-3);
      CHECK(std::abs(pair.C_phi_psi) <=
            std::sqrt(pair.C_phi * pair.C_psi) * (1.0 + 1e-8));
    }
  }
}

TEST_CASE("cwt: zero input, linearity, bound") {
  Grid g = desk_grid(0.5, 128);
  ScaleGrid scales = build_scale_grid(0.25, 4.0, 17);
  Field phi = Field::analytic(g.params(), spectral_hermite_family(1));

  Field zero = Field::analytic(g.params(), gaussian_family(1.0), 0.0).sample(g);
  CwtMatrix mz = cwt(zero, phi, scales, g);
  CHECK(mz.max_abs == 0.0);

  Field f1 = Field::analytic(g.params(), gaussian_family(1.0)).sample(g);
  Field f2 = Field::analytic(g.params(), modulated_gaussian_family({1.0}, 1.2)).sample(g);
  const cplx c1(0.7, -0.3), c2(-1.1, 0.4);
  CwtMatrix m1 = cwt(f1, phi, scales, g);
  CwtMatrix m2 = cwt(f2, phi, scales, g);
  CwtMatrix mc = cwt(add_sampled(f1, c1, f2, c2), phi, scales, g);
  double dev = 0.0;
  for (std::size_t i = 0; i < mc.values.size(); ++i)
    dev = std::max(dev, std::abs(mc.values[i] - c1 * m1.values[i] - c2 * m2.values[i]));
  CHECK(dev <= 1e-10);

  // |Phi| <= ||f||_2 ||phi||_2
  const double bound = norm_p(f1, g, 2.0) * norm_p(phi, g, 2.0);
  CHECK(m1.max_abs <= bound * (1.0 + 1e-6));
}

TEST_CASE("cwt: fast path agrees with the inner-product oracle") {
  Grid g = build_grid(WeinsteinParams(1, 0.5), 64, 12.0, 64, 12.0);
  ScaleGrid scales = build_scale_grid(0.5, 2.0, 8);
  JacobiRule rule = make_jacobi_rule(0.5);
  Field phi = Field::analytic(g.params(), spectral_hermite_family(1));
  Field f = Field::analytic(g.params(), gaussian_family(1.0)).sample(g);
  CwtMatrix m = cwt(f, phi, scales, g);
  double dev = 0.0;
  for (int s = 0; s < scales.n_scales; ++s) {
    for (std::size_t i = 0; i < g.node_count(); i += 257) {  // probe subset
      const auto x = g.point_at(i);
      const cplx oracle = cwt_point_oracle(f, phi, scales.nodes[s], x, g, rule);
      dev = std::max(dev, std::abs(m.values[s * g.node_count() + i] - oracle));
    }
  }
  CHECK(dev <= 1e-4);
}

TEST_CASE("parseval cross check: hermite pair and plancherel special case") {
  for (double alpha : {0.5, 1.0}) {
    Grid g = desk_grid(alpha);
    ScaleGrid scales = build_scale_grid();
    auto probes = default_probes(g.params());
    Field h1 = Field::analytic(g.params(), spectral_hermite_family(1));
    Field h2 = Field::analytic(g.params(), spectral_hermite_family(2));
    WaveletPair pair = make_wavelet_pair(h1, h2, g, scales, probes);
    REQUIRE(pair.valid);

    Field f = Field::analytic(g.params(), gaussian_family(1.0));
    Field gg = Field::analytic(g.params(), gaussian_family(1.5));
    ParsevalReport rep = parseval_cross_check(f, gg, pair, scales, g);
    CHECK(rep.rel_dev <= 1e-2);

    // phi = psi, f = g: LHS / (C_phi ||f||^2) = 1
    WaveletPair auto_pair = make_wavelet_pair(h1, h1, g, scales, probes);
    ParsevalReport prep = parseval_cross_check(f, f, auto_pair, scales, g);
    const double n2 = norm_p(f, g, 2.0);
    CHECK(std::abs(prep.lhs) / (auto_pair.C_phi * n2 * n2) ==
          doctest::Approx(1.0).epsilon(1e-2));
  }
}

TEST_CASE("parseval cross check: complex-valued cross constant") {
  // psi = h1 + i h2 gives C_{phi,psi} = 1/2 + i; a conjugation slip in the
  // machinery would show up here even though the hermite pair is real.
  Grid g = desk_grid(0.5);
  ScaleGrid scales = build_scale_grid();
  auto probes = default_probes(g.params());
  Field h1 = Field::analytic(g.params(), spectral_hermite_family(1));
  auto combo_spec = [](const WeinsteinParams&, const std::vector<double>& xi) {
    double u = 0.0;
    for (double v : xi) u += v * v;
    return (u + cplx(0.0, 1.0) * u * u) * std::exp(-u / 2.0);
  };
  Field psi = Field::analytic(g.params(), tabulated_family("h1_plus_ih2", nullptr, combo_spec));
  WaveletPair pair = make_wavelet_pair(h1, psi, g, scales, probes);
  REQUIRE(pair.valid);
  CHECK(std::abs(pair.C_phi_psi - cplx(0.5, 1.0)) <= 1e-6);
  Field f = Field::analytic(g.params(), gaussian_family(1.0));
  Field gg = Field::analytic(g.params(), gaussian_family(1.25));
  ParsevalReport rep = parseval_cross_check(f, gg, pair, scales, g);
  CHECK(rep.rel_dev <= 1e-2);
}

TEST_CASE("parseval cross check: orthogonality for a disjoint-support pair") {
  Grid g = desk_grid(0.5);
  ScaleGrid scales = build_scale_grid();
  auto probes = default_probes(g.params());
  // a wide gap between the bands keeps the truncated-domain cross talk of
  // the slices well under the orthogonality tolerance
  Field lo = Field::analytic(g.params(), smooth_band_family(0.25, 0.7));
  Field hi = Field::analytic(g.params(), smooth_band_family(8.0, 16.0));
  // bump spectra are smooth but not analytic; declare the spread tolerance
  // the log-trapezoid rule actually certifies for them
  WaveletPair pair = make_wavelet_pair(lo, hi, g, scales, probes, 1e-3);
  REQUIRE(pair.valid);
  CHECK(std::abs(pair.C_phi_psi) <= 1e-10);

  Field f = Field::analytic(g.params(), gaussian_family(1.0));
  Field gg = Field::analytic(g.params(), gaussian_family(1.25));
  ParsevalReport rep = parseval_cross_check(f, gg, pair, scales, g);
  const double scale = norm_p(f, g, 2.0) * norm_p(gg, g, 2.0) *
                       norm_p(materialize(lo, g), g, 2.0) *
                       norm_p(materialize(hi, g), g, 2.0);
  CHECK(std::abs(rep.lhs) <= 1e-6 * scale);

  // zero field: both sides vanish
  ParsevalReport zrep = parseval_cross_check(f.scaled(0.0), gg, pair, scales, g);
  CHECK(std::abs(zrep.lhs) == 0.0);
  CHECK(std::abs(zrep.rhs) == 0.0);
}
