#include "wwl/convolution.hpp"

#include <cmath>

#include "wwl/parallel.hpp"

namespace wwl {

Convolution convolve(const Field& f, const Field& g, const Grid& grid) {
  Spectrum F = forward(f, grid);
  const Spectrum G = forward(g, grid);
  for (std::size_t i = 0; i < F.values.size(); ++i) F.values[i] *= G.values[i];
  Field out = inverse(F);
  return Convolution{std::move(out), std::move(F)};
}

Field convolve_direct(const Field& f, const Field& g, const Grid& grid,
                      const JacobiRule& rule) {
  if (grid.n_lat() > 64 || grid.n_rad() > 64)
    throw CapabilityError("convolve_direct: oracle path is capped at 64 points per axis");
  const Field gs = materialize(g, grid);
  const Field fs =
      (f.is_sampled() || f.analytic_rep().family->has_physical()) ? f : materialize(f, grid);
  detail::FieldEvaluator eval(fs);
  const int d = grid.params().d;
  const auto& w = grid.mu_weights();
  const auto& gv = gs.values();
  std::vector<cplx> out(grid.node_count());
  parallel_for(grid.node_count(), [&](std::size_t ix) {
    thread_local std::vector<double> scratch, minus_y;
    scratch.resize(d + 1);
    minus_y.resize(d + 1);
    const auto x = grid.point_at(ix);
    cplx acc = 0.0;
    for (std::size_t iy = 0; iy < grid.node_count(); ++iy) {
      if (gv[iy] == cplx(0.0)) continue;
      const auto y = grid.point_at(iy);
      // tau_x f(-y), -y flipping the lateral part only
      for (int i = 0; i < d; ++i) scratch[i] = x[i] - y[i];
      const double xr = x[d], yr = y[d];
      const double base = xr * xr + yr * yr, cross = 2.0 * xr * yr;
      cplx t = 0.0;
      for (int i = 0; i < rule.order; ++i) {
        scratch[d] = std::sqrt(std::max(0.0, base + cross * rule.cos_theta[i]));
        t += rule.weights[i] * eval(scratch);
      }
      acc += rule.c_alpha * t * gv[iy] * w[iy];
    }
    out[ix] = acc;
  });
  return Field::sampled(grid, std::move(out));
}

YoungReport young_inequality_check(const Field& f, const Field& g, const Grid& grid,
                                   double p, double q, double r, double slack) {
  auto recip = [](double e) { return std::isinf(e) ? 0.0 : 1.0 / e; };
  if (!(p >= 1.0) || !(q >= 1.0) || !(r >= 1.0))
    throw std::domain_error("young_inequality_check: exponents must be >= 1");
  if (std::fabs(recip(p) + recip(q) - recip(r) - 1.0) > 1e-12)
    throw std::domain_error("young_inequality_check: need 1/p + 1/q - 1/r = 1");
  const Field conv = convolve(f, g, grid).field;
  YoungReport rep;
  rep.lhs = norm_p(conv, grid, r);
  rep.rhs = norm_p(f, grid, p) * norm_p(g, grid, q);
  rep.ratio = rep.rhs == 0.0 ? (rep.lhs == 0.0 ? 0.0 : HUGE_VAL) : rep.lhs / rep.rhs;
  rep.pass = rep.ratio <= 1.0 + slack;
  return rep;
}

}  // namespace wwl
