#include "wwl/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <random>

#include "wwl/parallel.hpp"

namespace wwl {

namespace detail {

// Per-grid tables: FFTW plans for the lateral axes (batched over the radial
// index) and the dense radial quadrature matrices for both sides. Plans are
// created once under a global lock; execution uses the thread-safe new-array
// interface.
struct TransformPlans {
  fftw_plan lat_fwd = nullptr;
  fftw_plan lat_bwd = nullptr;
  std::vector<double> radial_fwd;  // [m * n_rad + k] = j(rho_m r_k) w_k
  std::vector<double> radial_inv;  // [k * n_rad + m] = j(r_k rho_m) w~_m
  double lat_fwd_scale = 1.0;
  double lat_inv_scale = 1.0;
  ~TransformPlans() {
    if (lat_fwd) fftw_destroy_plan(lat_fwd);
    if (lat_bwd) fftw_destroy_plan(lat_bwd);
  }
};

namespace {
std::mutex g_plan_mutex;

TransformPlans* build_plans(const Grid& g) {
  auto* p = new TransformPlans;
  const int d = g.params().d;
  const double alpha = g.params().alpha;
  const int nl = g.n_lat(), nr = g.n_rad();

  p->radial_fwd.resize((std::size_t)nr * nr);
  p->radial_inv.resize((std::size_t)nr * nr);
  const double c_rad = radial_measure_constant(alpha);
  std::vector<double> w;
  for (int m = 0; m < nr; ++m) {
    const double rho = g.spectral_radial_nodes()[m];
    g.radial_rule().weights(
        [&](double r) { return normalized_bessel_j(alpha, rho * r); }, w);
    for (int k = 0; k < nr; ++k)
      p->radial_fwd[(std::size_t)m * nr + k] = c_rad * w[k];
  }
  for (int k = 0; k < nr; ++k) {
    const double r = g.radial_nodes()[k];
    g.spectral_radial_rule().weights(
        [&](double rho) { return normalized_bessel_j(alpha, r * rho); }, w);
    for (int m = 0; m < nr; ++m)
      p->radial_inv[(std::size_t)k * nr + m] = c_rad * w[m];
  }

  p->lat_fwd_scale = std::pow(g.lateral_step() / std::sqrt(2.0 * kPi), d);
  p->lat_inv_scale = std::pow(g.spectral_lateral_step() / std::sqrt(2.0 * kPi), d);

  std::vector<cplx> a(g.node_count()), b(g.node_count());
  std::vector<int> dims(d, nl);
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  p->lat_fwd = fftw_plan_many_dft(
      d, dims.data(), nr, reinterpret_cast<fftw_complex*>(a.data()), nullptr, nr, 1,
      reinterpret_cast<fftw_complex*>(b.data()), nullptr, nr, 1, FFTW_FORWARD,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  p->lat_bwd = fftw_plan_many_dft(
      d, dims.data(), nr, reinterpret_cast<fftw_complex*>(a.data()), nullptr, nr, 1,
      reinterpret_cast<fftw_complex*>(b.data()), nullptr, nr, 1, FFTW_BACKWARD,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  return p;
}
}  // namespace

TransformPlans& plans_for(const Grid& grid, std::shared_ptr<TransformPlans>& slot) {
  static std::mutex slot_mutex;
  std::lock_guard<std::mutex> lock(slot_mutex);
  if (!slot) slot.reset(build_plans(grid));
  return *slot;
}

}  // namespace detail

namespace {

// Permutes between DFT-bin order and the ascending frequency storage,
// applying the (-1)^{m_hat} boundary phases (m_hat the storage-side
// frequency index). The index map is its own inverse for even n_lat;
// `to_storage` selects which side of the pair the output is.
void lateral_shuffle_phase(const Grid& g, const std::vector<cplx>& in,
                           std::vector<cplx>& out, double scale, bool to_storage) {
  const int d = g.params().d;
  const int nl = g.n_lat(), nr = g.n_rad();
  const std::size_t lat_total = g.lateral_count();
  std::vector<int> idx(d);
  for (std::size_t lf = 0; lf < lat_total; ++lf) {
    std::size_t rest = lf;
    for (int i = d - 1; i >= 0; --i) {
      idx[i] = (int)(rest % nl);
      rest /= nl;
    }
    std::size_t src = 0;
    double sign = 1.0;
    for (int i = 0; i < d; ++i) {
      const int j = (idx[i] + nl / 2) % nl;
      src = src * nl + (std::size_t)j;
      const int m_par = to_storage ? (idx[i] - nl / 2) : idx[i];
      if (m_par & 1) sign = -sign;
    }
    const double f = sign * scale;
    const cplx* s = &in[src * nr];
    cplx* o = &out[lf * nr];
    for (int k = 0; k < nr; ++k) o[k] = f * s[k];
  }
}

void radial_apply(const Grid& g, const std::vector<double>& mat,
                  const std::vector<cplx>& in, std::vector<cplx>& out) {
  const int nr = g.n_rad();
  const std::size_t lat_total = g.lateral_count();
  parallel_for(lat_total, [&](std::size_t lf) {
    const cplx* row_in = &in[lf * nr];
    cplx* row_out = &out[lf * nr];
    for (int m = 0; m < nr; ++m) {
      const double* b = &mat[(std::size_t)m * nr];
      cplx acc = 0.0;
      for (int k = 0; k < nr; ++k) acc += b[k] * row_in[k];
      row_out[m] = acc;
    }
  });
}

void execute_lateral(fftw_plan plan, std::vector<cplx>& in, std::vector<cplx>& out) {
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

cplx kernel(const WeinsteinParams& params, const std::vector<double>& lambda,
            const std::vector<double>& x) {
  if ((int)lambda.size() != params.d + 1 || (int)x.size() != params.d + 1)
    throw DimensionError("kernel: points must have d+1 coordinates");
  double phase = 0.0;
  for (int i = 0; i < params.d; ++i) phase -= x[i] * lambda[i];
  const double j = normalized_bessel_j(params.alpha, x[params.d] * lambda[params.d]);
  return std::polar(1.0, phase) * j;
}

Spectrum forward(const Field& f, const Grid& grid) {
  Field s = materialize(f, grid);
  auto& plans = grid.plans();
  std::vector<cplx> work = s.values();
  std::vector<cplx> fft_out(work.size());
  execute_lateral(plans.lat_fwd, work, fft_out);
  std::vector<cplx> shuffled(work.size());
  lateral_shuffle_phase(grid, fft_out, shuffled, plans.lat_fwd_scale, true);
  std::vector<cplx> out(work.size());
  radial_apply(grid, plans.radial_fwd, shuffled, out);
  return Spectrum{grid.params(), grid, std::move(out)};
}

Field inverse(const Spectrum& F) {
  const Grid& grid = F.grid;
  if (F.values.size() != grid.node_count())
    throw DimensionError("inverse: spectrum size != grid node count");
  auto& plans = grid.plans();
  std::vector<cplx> shuffled(F.values.size());
  lateral_shuffle_phase(grid, F.values, shuffled, plans.lat_inv_scale, false);
  std::vector<cplx> fft_out(F.values.size());
  execute_lateral(plans.lat_bwd, shuffled, fft_out);
  std::vector<cplx> out(F.values.size());
  radial_apply(grid, plans.radial_inv, fft_out, out);
  return Field::sampled(grid, std::move(out));
}

Spectrum analytic_spectrum_on(const Field& f, const Grid& grid) {
  if (!f.has_closed_spectrum())
    throw CapabilityError("analytic_spectrum_on: field has no closed spectral form");
  std::vector<cplx> v(grid.node_count());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = f.spectrum_value(grid.spectral_point_at(i));
  return Spectrum{grid.params(), grid, std::move(v)};
}

Field materialize(const Field& f, const Grid& grid) {
  if (f.is_sampled()) {
    if (!f.grid().compatible(grid)) throw DimensionError("materialize: grid mismatch");
    return f;
  }
  if (f.analytic_rep().family->has_physical()) return f.sample(grid);
  return inverse(analytic_spectrum_on(f, grid));
}

Spectrum spectral_check(const Spectrum& F) {
  const Grid& g = F.grid;
  const int d = g.params().d;
  const int nl = g.n_lat(), nr = g.n_rad();
  std::vector<cplx> out(F.values.size());
  std::vector<int> idx(d);
  const std::size_t lat_total = g.lateral_count();
  for (std::size_t lf = 0; lf < lat_total; ++lf) {
    std::size_t rest = lf;
    for (int i = d - 1; i >= 0; --i) {
      idx[i] = (int)(rest % nl);
      rest /= nl;
    }
    std::size_t src = 0;
    for (int i = 0; i < d; ++i) src = src * nl + (std::size_t)((nl - idx[i]) % nl);
    for (int k = 0; k < nr; ++k) out[lf * nr + k] = F.values[src * nr + k];
  }
  return Spectrum{F.params, g, std::move(out)};
}

Field random_band_limited_field(const Grid& grid, double lo, double hi,
                                std::uint64_t seed) {
  if (!(0.0 <= lo && lo < hi))
    throw std::domain_error("random_band_limited_field: need 0 <= lo < hi");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int nw = 6;
  std::vector<cplx> amp(nw);
  std::vector<double> freq(nw), lat(nw);
  for (int j = 0; j < nw; ++j) {
    amp[j] = cplx(u(rng), u(rng));
    freq[j] = 2.0 * u(rng);
    lat[j] = u(rng);
  }
  // Everything is a smooth function of |xi|^2 (plus lateral phases), so the
  // spectrum is even and kink-free across the radial origin.
  std::vector<cplx> s(grid.node_count());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto xi = grid.spectral_point_at(i);
    double r2 = 0.0;
    for (double v : xi) r2 += v * v;
    const double t = (2.0 * r2 - hi * hi - lo * lo) / (hi * hi - lo * lo);
    const double env = (r2 / (hi * hi)) * std::exp(-0.5 * t * t);
    if (env < 1e-300) {
      s[i] = 0.0;
      continue;
    }
    cplx mod = 0.0;
    for (int j = 0; j < nw; ++j)
      mod += amp[j] * std::polar(1.0, lat[j] * xi[0]) *
             (1.0 + 0.1 * freq[j] * r2 / (hi * hi));
    s[i] = env * mod;
  }
  return inverse(Spectrum{grid.params(), grid, std::move(s)});
}

double spectrum_norm2(const Spectrum& F) {
  const auto& w = F.grid.spectral_mu_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < F.values.size(); ++i) acc += std::norm(F.values[i]) * w[i];
  return std::sqrt(acc);
}

double spectrum_norm_inf(const Spectrum& F) {
  double m = 0.0;
  for (const auto& z : F.values) m = std::max(m, std::abs(z));
  return m;
}

cplx spectrum_inner(const Spectrum& F, const Spectrum& G) {
  if (!F.grid.compatible(G.grid)) throw DimensionError("spectrum_inner: grid mismatch");
  const auto& w = F.grid.spectral_mu_weights();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < F.values.size(); ++i)
    acc += F.values[i] * std::conj(G.values[i]) * w[i];
  return acc;
}

ConjugationReport conjugation_identity_check(const Field& f, const Grid& grid) {
  const Field fs = materialize(f, grid);
  const Spectrum Ff = forward(fs, grid);
  const Spectrum Fconj = forward(fs.conjugated(), grid);
  const Spectrum Fchk = forward(fs.checked(), grid);
  const Spectrum Fchk_flip = spectral_check(Fchk);
  double dev_conj = 0.0, dev_reflect = 0.0;
  for (std::size_t i = 0; i < Ff.values.size(); ++i) {
    dev_conj = std::max(dev_conj, std::abs(Fconj.values[i] - std::conj(Fchk.values[i])));
    dev_reflect = std::max(dev_reflect, std::abs(Ff.values[i] - Fchk_flip.values[i]));
  }
  return ConjugationReport{dev_conj, dev_reflect, std::max(dev_conj, dev_reflect)};
}

}  // namespace wwl
