#include "wwl/translation.hpp"

#include <cmath>

#include "wwl/parallel.hpp"

namespace wwl {

JacobiRule make_jacobi_rule(double alpha, int order) {
  if (!(alpha > -0.5)) throw std::domain_error("make_jacobi_rule: alpha > -1/2");
  if (order < 2) throw std::domain_error("make_jacobi_rule: order >= 2");
  QuadRule gj = gauss_jacobi(order, alpha - 0.5, alpha - 0.5);
  JacobiRule rule;
  rule.order = order;
  rule.c_alpha = gamma_fn(alpha + 1.0) / (std::sqrt(kPi) * gamma_fn(alpha + 0.5));
  rule.cos_theta = gj.nodes;
  rule.weights = std::move(gj.weights);
  rule.theta.resize(order);
  for (int i = 0; i < order; ++i) rule.theta[i] = std::acos(gj.nodes[i]);
  // pin c_alpha * sum(w) to 1 exactly
  double total = 0.0;
  for (double w : rule.weights) total += w;
  const double fix = 1.0 / (rule.c_alpha * total);
  for (double& w : rule.weights) w *= fix;
  return rule;
}

namespace detail {

FieldEvaluator::FieldEvaluator(const Field& f)
    : f_(f), sampled_(f.is_sampled()) {
  if (!sampled_ && !f.analytic_rep().family->has_physical())
    throw CapabilityError("FieldEvaluator: field has no physical evaluation; materialize it first");
}

cplx FieldEvaluator::operator()(const std::vector<double>& p) const {
  if (!sampled_) return f_.evaluate(p);
  const Grid& g = f_.grid();
  const int d = g.params().d;
  const int nl = g.n_lat(), nr = g.n_rad();
  const double h = g.lateral_step();
  // lateral part must land on nodes; outside the box the field is ~0
  std::size_t lat = 0;
  for (int i = 0; i < d; ++i) {
    const double pos = (p[i] + g.lateral_extent()) / h;
    const double nearest = std::round(pos);
    if (std::fabs(pos - nearest) > 1e-9)
      throw CapabilityError("sampled translation: lateral offset is off-grid");
    if (nearest < 0 || nearest >= nl) return 0.0;
    lat = lat * nl + (std::size_t)nearest;
  }
  // radial: cubic interpolation in u = r^2 on the 4 nearest midpoint nodes
  // (the even-polynomial model stays valid below the first node), zero
  // beyond the outer edge
  const double r = p[d];
  if (r >= g.radial_extent()) return 0.0;
  const double dr = g.radial_step();
  int k0 = (int)std::floor(r / dr - 0.5) - 1;
  k0 = std::max(0, std::min(k0, nr - 4));
  const double u = r * r;
  const cplx* vals = &f_.values()[lat * nr];
  cplx acc = 0.0;
  double un[4];
  for (int i = 0; i < 4; ++i) {
    const double rn = g.radial_nodes()[k0 + i];
    un[i] = rn * rn;
  }
  for (int i = 0; i < 4; ++i) {
    double L = 1.0;
    for (int q = 0; q < 4; ++q)
      if (q != i) L *= (u - un[q]) / (un[i] - un[q]);
    acc += L * vals[k0 + i];
  }
  return acc;
}

}  // namespace detail

namespace {

cplx translate_point(const detail::FieldEvaluator& eval, const JacobiRule& rule,
                     const std::vector<double>& x, const std::vector<double>& y,
                     int d, std::vector<double>& scratch) {
  for (int i = 0; i < d; ++i) scratch[i] = x[i] + y[i];
  const double xr = x[d], yr = y[d];
  const double base = xr * xr + yr * yr;
  const double cross = 2.0 * xr * yr;
  cplx acc = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    scratch[d] = std::sqrt(std::max(0.0, base + cross * rule.cos_theta[i]));
    acc += rule.weights[i] * eval(scratch);
  }
  return rule.c_alpha * acc;
}

void check_point(const WeinsteinParams& p, const std::vector<double>& x, const char* who) {
  if ((int)x.size() != p.d + 1) throw DimensionError(std::string(who) + ": point size != d+1");
  if (x[p.d] < 0.0) throw std::domain_error(std::string(who) + ": radial coordinate must be >= 0");
}

}  // namespace

cplx translate_at(const Field& f, const std::vector<double>& x,
                  const std::vector<double>& y, const JacobiRule& rule) {
  check_point(f.params(), x, "translate_at");
  check_point(f.params(), y, "translate_at");
  detail::FieldEvaluator eval(f);
  std::vector<double> scratch(f.params().d + 1);
  return translate_point(eval, rule, x, y, f.params().d, scratch);
}

Field translate(const Field& f, const std::vector<double>& x, const Grid& grid,
                const JacobiRule& rule) {
  check_point(grid.params(), x, "translate");
  detail::FieldEvaluator eval(f);
  const int d = grid.params().d;
  std::vector<cplx> out(grid.node_count());
  parallel_for(grid.node_count(), [&](std::size_t i) {
    thread_local std::vector<double> scratch;
    scratch.resize(d + 1);
    const auto y = grid.point_at(i);
    out[i] = translate_point(eval, rule, x, y, d, scratch);
  });
  return Field::sampled(grid, std::move(out));
}

Field translate_spectral(const Field& f, const std::vector<double>& x, const Grid& grid) {
  check_point(grid.params(), x, "translate_spectral");
  // F(tau_x f) = Lambda(-x, .) F(f): the lateral adjoint of the +shift in
  // the translation definition flips the sign of x'.
  std::vector<double> mx = x;
  for (int i = 0; i < grid.params().d; ++i) mx[i] = -mx[i];
  Spectrum F = forward(f, grid);
  for (std::size_t i = 0; i < F.values.size(); ++i)
    F.values[i] *= kernel(grid.params(), mx, grid.spectral_point_at(i));
  return inverse(F);
}

}  // namespace wwl
