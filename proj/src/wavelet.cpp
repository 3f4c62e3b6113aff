#include "wwl/wavelet.hpp"

#include <cmath>

#include "wwl/parallel.hpp"

namespace wwl {

ScaleGrid build_scale_grid(double a_min, double a_max, int n_scales) {
  if (!(0.0 < a_min && a_min < a_max))
    throw std::domain_error("build_scale_grid: need 0 < a_min < a_max");
  if (n_scales < 2) throw std::domain_error("build_scale_grid: n_scales >= 2");
  ScaleGrid s;
  s.a_min = a_min;
  s.a_max = a_max;
  s.n_scales = n_scales;
  const double l0 = std::log(a_min);
  const double dl = (std::log(a_max) - l0) / (n_scales - 1);
  s.nodes.resize(n_scales);
  s.log_weights.resize(n_scales);
  for (int i = 0; i < n_scales; ++i) {
    s.nodes[i] = std::exp(l0 + i * dl);
    s.log_weights[i] = (i == 0 || i == n_scales - 1) ? dl / 2.0 : dl;
  }
  return s;
}

SpectrumEval::SpectrumEval(const Field& f, const Grid& grid) {
  if (f.has_closed_spectrum()) {
    closed_ = true;
    analytic_ = std::make_shared<Field>(f);
    cached_ = std::make_shared<Spectrum>(analytic_spectrum_on(f, grid));
  } else {
    cached_ = std::make_shared<Spectrum>(forward(f, grid));
  }
}

cplx SpectrumEval::operator()(const std::vector<double>& xi) const {
  if (closed_) return analytic_->spectrum_value(xi);
  if (!cached_) throw CapabilityError("SpectrumEval: empty evaluator");
  // multilinear interpolation on the spectral grid, zero outside
  const Grid& g = cached_->grid;
  const int d = g.params().d;
  const int nl = g.n_lat(), nr = g.n_rad();
  const auto& slat = g.spectral_lateral_nodes();
  const auto& srad = g.spectral_radial_nodes();
  std::vector<int> i0(d + 1);
  std::vector<double> fr(d + 1);
  for (int i = 0; i < d; ++i) {
    const double pos = (xi[i] - slat[0]) / g.spectral_lateral_step();
    if (pos < 0.0 || pos > nl - 1) return 0.0;
    i0[i] = std::min((int)pos, nl - 2);
    fr[i] = pos - i0[i];
  }
  {
    const double rho = xi[d];
    if (rho < 0.0) throw std::domain_error("SpectrumEval: radial frequency must be >= 0");
    const double pos = (rho - srad[0]) / g.spectral_radial_step();
    if (pos > nr - 1) return 0.0;
    if (pos < 0.0) {
      i0[d] = 0;
      fr[d] = 0.0;  // clamp below the first midpoint node
    } else {
      i0[d] = std::min((int)pos, nr - 2);
      fr[d] = pos - i0[d];
    }
  }
  cplx acc = 0.0;
  const int corners = 1 << (d + 1);
  for (int c = 0; c < corners; ++c) {
    double wgt = 1.0;
    std::size_t flat = 0;
    for (int i = 0; i < d; ++i) {
      const int b = (c >> i) & 1;
      wgt *= b ? fr[i] : 1.0 - fr[i];
      flat = flat * nl + (std::size_t)(i0[i] + b);
    }
    const int b = (c >> d) & 1;
    wgt *= b ? fr[d] : 1.0 - fr[d];
    flat = flat * nr + (std::size_t)(i0[d] + b);
    if (wgt != 0.0) acc += wgt * cached_->values[flat];
  }
  return acc;
}

std::vector<std::vector<double>> default_probes(const WeinsteinParams& params,
                                                int n_magnitudes, double mag_lo,
                                                double mag_hi) {
  if (n_magnitudes < 1 || !(0.0 < mag_lo && mag_lo <= mag_hi))
    throw std::domain_error("default_probes: bad magnitude range");
  const int d = params.d;
  // unit directions with xi_{d+1} > 0: radial, balanced, lateral-heavy
  std::vector<std::vector<double>> dirs;
  {
    std::vector<double> radial(d + 1, 0.0);
    radial[d] = 1.0;
    dirs.push_back(radial);
    std::vector<double> balanced(d + 1, 0.0);
    balanced[0] = 1.0 / std::sqrt(2.0);
    balanced[d] = 1.0 / std::sqrt(2.0);
    dirs.push_back(balanced);
    std::vector<double> heavy(d + 1, 0.0);
    heavy[0] = 0.9;
    heavy[d] = std::sqrt(1.0 - 0.81);
    dirs.push_back(heavy);
  }
  std::vector<std::vector<double>> probes;
  for (int m = 0; m < n_magnitudes; ++m) {
    const double t = n_magnitudes == 1 ? 0.0 : (double)m / (n_magnitudes - 1);
    const double mag = mag_lo * std::pow(mag_hi / mag_lo, t);
    for (const auto& dir : dirs) {
      std::vector<double> p(d + 1);
      for (int i = 0; i <= d; ++i) p[i] = mag * dir[i];
      probes.push_back(std::move(p));
    }
  }
  return probes;
}

namespace {

// Per-probe log-trapezoid quadrature of integrand(a * xi) over the scale grid.
std::vector<cplx> scale_integrals(
    const ScaleGrid& scales, const std::vector<std::vector<double>>& probes,
    const std::function<cplx(const std::vector<double>&)>& integrand) {
  std::vector<cplx> out(probes.size(), 0.0);
  for (std::size_t p = 0; p < probes.size(); ++p) {
    std::vector<double> scaled(probes[p].size());
    cplx acc = 0.0;
    for (int s = 0; s < scales.n_scales; ++s) {
      const double a = scales.nodes[s];
      for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = a * probes[p][i];
      acc += scales.log_weights[s] * integrand(scaled);
    }
    out[p] = acc;
  }
  return out;
}

AdmissibilityResult summarize(std::vector<cplx> per_probe, double spread_tol) {
  AdmissibilityResult res;
  cplx mean = 0.0;
  for (const auto& v : per_probe) mean += v;
  mean /= (double)per_probe.size();
  double spread = 0.0;
  for (const auto& v : per_probe) spread = std::max(spread, std::abs(v - mean));
  res.mean = mean;
  res.spread_abs = spread;
  if (spread == 0.0)
    res.spread_rel = 0.0;  // identically-constant probes (e.g. an exactly zero constant)
  else
    res.spread_rel = std::abs(mean) > 0.0 ? spread / std::abs(mean) : HUGE_VAL;
  res.per_probe = std::move(per_probe);
  res.pass = res.spread_rel <= spread_tol;
  return res;
}

}  // namespace

AdmissibilityResult admissibility_constant(const Field& phi, const ScaleGrid& scales,
                                           const std::vector<std::vector<double>>& probes,
                                           const Grid& grid, double spread_tol) {
  if (probes.empty()) throw std::domain_error("admissibility_constant: no probes");
  SpectrumEval spec(phi, grid);
  auto per_probe = scale_integrals(scales, probes, [&](const std::vector<double>& xi) {
    return cplx(std::norm(spec(xi)), 0.0);
  });
  double top = 0.0;
  for (const auto& v : per_probe) top = std::max(top, std::abs(v));
  if (top == 0.0)
    throw AssumptionError("admissibility_constant: spectrum vanishes on all probes");
  return summarize(std::move(per_probe), spread_tol);
}

AdmissibilityResult two_wavelet_constant(const Field& phi, const Field& psi,
                                         const ScaleGrid& scales,
                                         const std::vector<std::vector<double>>& probes,
                                         const Grid& grid, double spread_tol) {
  if (probes.empty()) throw std::domain_error("two_wavelet_constant: no probes");
  SpectrumEval sphi(phi, grid), spsi(psi, grid);
  auto per_probe = scale_integrals(scales, probes, [&](const std::vector<double>& xi) {
    return spsi(xi) * std::conj(sphi(xi));
  });
  return summarize(std::move(per_probe), spread_tol);
}

WaveletPair make_wavelet_pair(const Field& phi, const Field& psi, const Grid& grid,
                              const ScaleGrid& scales,
                              const std::vector<std::vector<double>>& probes,
                              double spread_tol) {
  WaveletPair pair{phi, psi, SpectrumEval(phi, grid), SpectrumEval(psi, grid)};
  AdmissibilityResult aphi = admissibility_constant(phi, scales, probes, grid, spread_tol);
  AdmissibilityResult apsi = admissibility_constant(psi, scales, probes, grid, spread_tol);
  AdmissibilityResult cross = two_wavelet_constant(phi, psi, scales, probes, grid, spread_tol);
  pair.C_phi = aphi.mean.real();
  pair.C_psi = apsi.mean.real();
  pair.C_phi_psi = cross.mean;
  // A vanishing cross constant is legitimate (orthogonal pair); its spread is
  // judged against the Cauchy-Schwarz scale sqrt(C_phi C_psi) instead.
  const double cross_scale =
      std::max(std::abs(cross.mean), std::sqrt(std::max(0.0, pair.C_phi * pair.C_psi)));
  const double cross_rel = cross_scale > 0.0 ? cross.spread_abs / cross_scale : 0.0;
  pair.spread_rel = std::max({aphi.spread_rel, apsi.spread_rel, cross_rel});
  pair.valid = aphi.pass && apsi.pass && cross_rel <= spread_tol && pair.C_phi > 0.0 &&
               pair.C_psi > 0.0;
  return pair;
}

namespace {

double atom_prefactor(const WeinsteinParams& p, double a) {
  return std::pow(a, p.alpha + 1.0 + 0.5 * p.d);
}

// slice(x) = a^{alpha+1+d/2} inverse(Ff . conj(Fphi(a .)))(x)
std::vector<cplx> cwt_slice(const Spectrum& Ff, const SpectrumEval& phi_spec, double a,
                            const Grid& grid) {
  Spectrum prod{grid.params(), grid, std::vector<cplx>(Ff.values.size())};
  std::vector<double> scaled(grid.params().d + 1);
  for (std::size_t i = 0; i < prod.values.size(); ++i) {
    const auto xi = grid.spectral_point_at(i);
    for (std::size_t q = 0; q < scaled.size(); ++q) scaled[q] = a * xi[q];
    prod.values[i] = Ff.values[i] * std::conj(phi_spec(scaled));
  }
  Field slice = inverse(prod);
  const double pref = atom_prefactor(grid.params(), a);
  std::vector<cplx> out = slice.values();
  for (auto& v : out) v *= pref;
  return out;
}

}  // namespace

Field wavelet_atom(const Field& phi, double a, const std::vector<double>& x,
                   const Grid& grid) {
  if (!(a > 0.0)) throw std::domain_error("wavelet_atom: scale must be positive");
  if (!phi.is_analytic())
    throw CapabilityError("wavelet_atom: dilation needs an analytic wavelet");
  Field atom = translate_spectral(dilate(phi, a), x, grid);
  return atom.scaled(atom_prefactor(grid.params(), a));
}

Field wavelet_atom_direct(const Field& phi, double a, const std::vector<double>& x,
                          const Grid& grid, const JacobiRule& rule) {
  if (!(a > 0.0)) throw std::domain_error("wavelet_atom_direct: scale must be positive");
  Field atom = translate(dilate(phi, a), x, grid, rule);
  return atom.scaled(atom_prefactor(grid.params(), a));
}

CwtMatrix cwt(const Field& f, const Field& phi, const ScaleGrid& scales, const Grid& grid) {
  const Spectrum Ff = forward(f, grid);
  SpectrumEval phi_spec(phi, grid);
  CwtMatrix m{scales, grid, std::vector<cplx>(scales.nodes.size() * grid.node_count())};
  std::vector<double> max_per_scale(scales.nodes.size(), 0.0);
  parallel_for(scales.nodes.size(), [&](std::size_t s) {
    const auto slice = cwt_slice(Ff, phi_spec, scales.nodes[s], grid);
    double mx = 0.0;
    for (std::size_t i = 0; i < slice.size(); ++i) {
      m.values[s * grid.node_count() + i] = slice[i];
      mx = std::max(mx, std::abs(slice[i]));
    }
    max_per_scale[s] = mx;
  });
  for (double v : max_per_scale) m.max_abs = std::max(m.max_abs, v);
  return m;
}

cplx cwt_point_oracle(const Field& f, const Field& phi, double a,
                      const std::vector<double>& x, const Grid& grid,
                      const JacobiRule& rule) {
  const Field fs = materialize(f, grid);
  const Field phi_a = dilate(phi, a);
  detail::FieldEvaluator eval(phi_a);
  const int d = grid.params().d;
  const auto& w = grid.mu_weights();
  const double pref = atom_prefactor(grid.params(), a);
  std::vector<double> scratch(d + 1);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    const auto y = grid.point_at(i);
    cplx atom = 0.0;
    for (int q = 0; q < d; ++q) scratch[q] = x[q] + y[q];
    const double xr = x[d], yr = y[d];
    const double base = xr * xr + yr * yr, cross = 2.0 * xr * yr;
    for (int t = 0; t < rule.order; ++t) {
      scratch[d] = std::sqrt(std::max(0.0, base + cross * rule.cos_theta[t]));
      atom += rule.weights[t] * eval(scratch);
    }
    atom *= rule.c_alpha * pref;
    acc += fs.values()[i] * std::conj(atom) * w[i];
  }
  return acc;
}

ParsevalReport parseval_cross_check(const Field& f, const Field& g,
                                    const WaveletPair& pair, const ScaleGrid& scales,
                                    const Grid& grid) {
  if (!pair.valid)
    throw AssumptionError("parseval_cross_check: wavelet pair failed the constancy check");
  const Spectrum Ff = forward(f, grid);
  const Spectrum Fg = forward(g, grid);
  const auto& w = grid.mu_weights();
  const WeinsteinParams& p = grid.params();
  const int S = scales.n_scales;
  std::vector<cplx> contrib(S, 0.0);
  std::vector<double> maxphi(S, 0.0), maxpsi(S, 0.0);
  parallel_for((std::size_t)S, [&](std::size_t s) {
    const double a = scales.nodes[s];
    const auto slice_phi = cwt_slice(Ff, pair.phi_spec, a, grid);
    const auto slice_psi = cwt_slice(Fg, pair.psi_spec, a, grid);
    cplx inner = 0.0;
    double mphi = 0.0, mpsi = 0.0;
    for (std::size_t i = 0; i < slice_phi.size(); ++i) {
      inner += slice_phi[i] * std::conj(slice_psi[i]) * w[i];
      mphi = std::max(mphi, std::abs(slice_phi[i]));
      mpsi = std::max(mpsi, std::abs(slice_psi[i]));
    }
    // d mu(a, x) = mu(x) a^{-(2 alpha + d + 2)} da/a
    contrib[s] = inner * scales.log_weights[s] *
                 std::pow(a, -(2.0 * p.alpha + p.d + 2.0));
    maxphi[s] = mphi;
    maxpsi[s] = mpsi;
  });
  ParsevalReport rep{};
  for (int s = 0; s < S; ++s) {
    rep.lhs += contrib[s];
    rep.max_coeff_phi = std::max(rep.max_coeff_phi, maxphi[s]);
    rep.max_coeff_psi = std::max(rep.max_coeff_psi, maxpsi[s]);
  }
  rep.rhs = pair.C_phi_psi * inner_product(f, g, grid);
  rep.abs_dev = std::abs(rep.lhs - rep.rhs);
  rep.rel_dev = std::abs(rep.rhs) > 1e-30 ? rep.abs_dev / std::abs(rep.rhs) : rep.abs_dev;
  return rep;
}

}  // namespace wwl
