#include "wwl/calderon.hpp"

#include <cmath>

#include "wwl/parallel.hpp"

namespace wwl {

WindowRule window_scale_rule(const ScaleGrid& scales, const CalderonWindow& window) {
  WindowRule rule;
  rule.eff_gamma = std::max(window.gamma, scales.a_min);
  rule.eff_delta = std::min(window.delta, scales.a_max);
  if (!(rule.eff_gamma < rule.eff_delta)) {
    rule.eff_gamma = rule.eff_delta = 0.0;
    return rule;  // window misses the scale grid entirely
  }
  static const QuadRule gauss = gauss_legendre(8);
  const double lo = std::log(rule.eff_gamma), hi = std::log(rule.eff_delta);
  for (int c = 0; c + 1 < scales.n_scales; ++c) {
    const double cl = std::max(std::log(scales.nodes[c]), lo);
    const double cr = std::min(std::log(scales.nodes[c + 1]), hi);
    if (!(cl < cr)) continue;
    const double mid = 0.5 * (cl + cr), half = 0.5 * (cr - cl);
    for (std::size_t g = 0; g < gauss.nodes.size(); ++g) {
      rule.nodes.push_back(std::exp(mid + half * gauss.nodes[g]));
      rule.weights.push_back(half * gauss.weights[g]);
    }
  }
  return rule;
}

MultiplierProfile multiplier(const WaveletPair& pair, const CalderonWindow& window,
                             const Grid& grid, const ScaleGrid& scales) {
  if (std::abs(pair.C_phi_psi) == 0.0)
    throw AssumptionError("multiplier: C_{phi,psi} vanishes (assumption A2)");
  const WindowRule rule = window_scale_rule(scales, window);
  MultiplierProfile prof{window, std::vector<cplx>(grid.node_count(), 0.0), 0, 0.0, 0.0, 0.0};
  const cplx inv_c = 1.0 / pair.C_phi_psi;
  const int d = grid.params().d;
  std::vector<unsigned char> active(grid.node_count(), 0);
  parallel_for(grid.node_count(), [&](std::size_t i) {
    thread_local std::vector<double> scaled;
    scaled.resize(d + 1);
    const auto xi = grid.spectral_point_at(i);
    cplx acc = 0.0;
    bool any = false;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      for (int q = 0; q <= d; ++q) scaled[q] = rule.nodes[g] * xi[q];
      const cplx prod = std::conj(pair.phi_spec(scaled)) * pair.psi_spec(scaled);
      if (std::abs(prod) > 1e-280) any = true;
      acc += rule.weights[g] * prod;
    }
    prof.values[i] = inv_c * acc;
    active[i] = any ? 1 : 0;
  });
  prof.k_min_active = HUGE_VAL;
  for (std::size_t i = 0; i < prof.values.size(); ++i) {
    const double re = prof.values[i].real();
    prof.k_max = std::max(prof.k_max, re);
    prof.max_abs = std::max(prof.max_abs, std::abs(prof.values[i]));
    if (active[i]) {
      ++prof.active_nodes;
      prof.k_min_active = std::min(prof.k_min_active, re);
    }
  }
  if (prof.active_nodes == 0) prof.k_min_active = 0.0;
  return prof;
}

Field reconstruct_spectral(const Field& f, const WaveletPair& pair,
                           const CalderonWindow& window, const Grid& grid,
                           const ScaleGrid& scales) {
  MultiplierProfile prof = multiplier(pair, window, grid, scales);
  Spectrum F = forward(f, grid);
  for (std::size_t i = 0; i < F.values.size(); ++i) F.values[i] *= prof.values[i];
  return inverse(F);
}

Field reconstruct_direct(const Field& f, const WaveletPair& pair,
                         const CalderonWindow& window, const Grid& grid,
                         const ScaleGrid& scales) {
  if (grid.n_lat() > 64 || grid.n_rad() > 64)
    throw CapabilityError("reconstruct_direct: oracle path is capped at 64 points per axis");
  if (std::abs(pair.C_phi_psi) == 0.0)
    throw AssumptionError("reconstruct_direct: C_{phi,psi} vanishes (assumption A2)");
  if (!pair.phi.is_analytic() || !pair.psi.is_analytic())
    throw CapabilityError("reconstruct_direct: analytic wavelets required");
  const WindowRule rule = window_scale_rule(scales, window);
  const Field fs = materialize(f, grid);
  const Field fcheck = check_function(fs);
  std::vector<cplx> acc(grid.node_count(), 0.0);
  const cplx inv_c = 1.0 / pair.C_phi_psi;
  // ascending scale order keeps the reduction reproducible
  for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
    const double a = rule.nodes[g];
    const Field phi_bar_a = dilate(pair.phi, a).conjugated();
    const Field psi_a = dilate(pair.psi, a);
    const Field conv1 = convolve(fcheck, phi_bar_a, grid).field;
    const Field term = convolve(check_function(conv1), psi_a, grid).field;
    const cplx wgt = inv_c * rule.weights[g];
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += wgt * term.values()[i];
  }
  return Field::sampled(grid, std::move(acc));
}

std::vector<SweepRow> convergence_sweep(const Field& f, const WaveletPair& pair,
                                        const std::vector<std::pair<double, double>>& windows,
                                        const Grid& grid, const ScaleGrid& scales) {
  if (windows.empty()) throw std::domain_error("convergence_sweep: no windows");
  for (const auto& [g, d] : windows)
    if (!(0.0 < g && g <= d)) throw std::domain_error("convergence_sweep: bad window");
  for (std::size_t i = 1; i < windows.size(); ++i) {
    if (windows[i].first > windows[i - 1].first ||
        windows[i].second < windows[i - 1].second)
      throw std::domain_error("convergence_sweep: windows must be nested");
  }
  if (std::abs(pair.C_phi_psi) == 0.0)
    throw AssumptionError("convergence_sweep: C_{phi,psi} vanishes (assumption A2)");
  const Field fs = materialize(f, grid);
  const double fnorm = norm_p(fs, grid, 2.0);
  std::vector<SweepRow> rows;
  for (const auto& [g, d] : windows) {
    SweepRow row{g, d, 0.0, 0.0, 0.0, 0.0};
    if (g == d) {
      // empty window: zero reconstruction
      row.l2_error = fnorm;
      row.rel_error = 1.0;
    } else {
      const CalderonWindow win(g, d);
      MultiplierProfile prof = multiplier(pair, win, grid, scales);
      Spectrum F = forward(fs, grid);
      for (std::size_t i = 0; i < F.values.size(); ++i) F.values[i] *= prof.values[i];
      Field rec = inverse(F);
      Field diff = add_sampled(rec, 1.0, fs, -1.0);
      row.l2_error = norm_p(diff, grid, 2.0);
      row.rel_error = fnorm > 0.0 ? row.l2_error / fnorm : row.l2_error;
      row.k_min = prof.k_min_active;
      row.k_max = prof.k_max;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wwl
