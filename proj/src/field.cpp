#include "wwl/field.hpp"

#include <cmath>

namespace wwl {

namespace {

double sq_norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

class GaussianFamily : public Family,
                       public std::enable_shared_from_this<GaussianFamily> {
 public:
  explicit GaussianFamily(double sigma) : sigma_(sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("gaussian_family: sigma > 0");
  }
  std::string name() const override { return "gaussian"; }
  bool has_physical() const override { return true; }
  cplx physical(const WeinsteinParams&, const std::vector<double>& x) const override {
    return std::exp(-sq_norm(x) / (2.0 * sigma_ * sigma_));
  }
  bool has_spectrum() const override { return true; }
  cplx spectrum(const WeinsteinParams& p, const std::vector<double>& xi) const override {
    const double power = 2.0 * p.alpha + p.d + 2.0;
    return std::pow(sigma_, power) * std::exp(-sigma_ * sigma_ * sq_norm(xi) / 2.0);
  }
  std::shared_ptr<const Family> conjugated() const override { return shared_from_this(); }
  std::shared_ptr<const Family> reflected() const override { return shared_from_this(); }

 private:
  double sigma_;
};

class SpectralHermiteFamily : public Family,
                              public std::enable_shared_from_this<SpectralHermiteFamily> {
 public:
  explicit SpectralHermiteFamily(int m) : m_(m) {
    if (m < 1) throw std::domain_error("spectral_hermite_family: m >= 1");
  }
  std::string name() const override { return "hermite"; }
  bool has_physical() const override { return true; }
  cplx physical(const WeinsteinParams& p, const std::vector<double>& x) const override {
    const auto coeff = detail::hermite_radial_poly(m_, 2.0 * p.alpha + p.d + 2.0);
    const double u = sq_norm(x);
    double poly = 0.0;
    for (std::size_t i = coeff.size(); i-- > 0;) poly = poly * u + coeff[i];
    return poly * std::exp(-u / 2.0);
  }
  bool has_spectrum() const override { return true; }
  cplx spectrum(const WeinsteinParams&, const std::vector<double>& xi) const override {
    const double u = sq_norm(xi);
    return std::pow(u, m_) * std::exp(-u / 2.0);
  }
  std::shared_ptr<const Family> conjugated() const override { return shared_from_this(); }
  std::shared_ptr<const Family> reflected() const override { return shared_from_this(); }

 private:
  int m_;
};

class BandLimitedFamily : public Family,
                          public std::enable_shared_from_this<BandLimitedFamily> {
 public:
  BandLimitedFamily(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(0.0 <= lo && lo < hi))
      throw std::domain_error("band_limited_family: need 0 <= rho_lo < rho_hi");
  }
  std::string name() const override { return "bandlimited"; }
  bool has_spectrum() const override { return true; }
  cplx spectrum(const WeinsteinParams&, const std::vector<double>& xi) const override {
    const double r = std::sqrt(sq_norm(xi));
    return (lo_ <= r && r <= hi_) ? 1.0 : 0.0;
  }
  std::shared_ptr<const Family> conjugated() const override { return shared_from_this(); }
  std::shared_ptr<const Family> reflected() const override { return shared_from_this(); }

 private:
  double lo_, hi_;
};

class SmoothBandFamily : public Family,
                         public std::enable_shared_from_this<SmoothBandFamily> {
 public:
  SmoothBandFamily(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(0.0 <= lo && lo < hi))
      throw std::domain_error("smooth_band_family: need 0 <= rho_lo < rho_hi");
  }
  std::string name() const override { return "smoothband"; }
  bool has_spectrum() const override { return true; }
  cplx spectrum(const WeinsteinParams&, const std::vector<double>& xi) const override {
    const double r = std::sqrt(sq_norm(xi));
    const double t = (2.0 * r - hi_ - lo_) / (hi_ - lo_);
    if (std::fabs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
  }
  std::shared_ptr<const Family> conjugated() const override { return shared_from_this(); }
  std::shared_ptr<const Family> reflected() const override { return shared_from_this(); }

 private:
  double lo_, hi_;
};

class ModulatedGaussianFamily : public Family {
 public:
  ModulatedGaussianFamily(std::vector<double> k, double sigma)
      : k_(std::move(k)), sigma_(sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("modulated_gaussian: sigma > 0");
  }
  std::string name() const override { return "modulated_gaussian"; }
  bool has_physical() const override { return true; }
  cplx physical(const WeinsteinParams& p, const std::vector<double>& x) const override {
    if ((int)k_.size() != p.d)
      throw DimensionError("modulated_gaussian: wave vector size != d");
    double phase = 0.0;
    for (int i = 0; i < p.d; ++i) phase += k_[i] * x[i];
    return std::polar(std::exp(-sq_norm(x) / (2.0 * sigma_ * sigma_)), phase);
  }
  bool has_spectrum() const override { return true; }
  cplx spectrum(const WeinsteinParams& p, const std::vector<double>& xi) const override {
    if ((int)k_.size() != p.d)
      throw DimensionError("modulated_gaussian: wave vector size != d");
    double q = 0.0;
    for (int i = 0; i < p.d; ++i) q += (xi[i] - k_[i]) * (xi[i] - k_[i]);
    q += xi[p.d] * xi[p.d];
    const double power = 2.0 * p.alpha + p.d + 2.0;
    return std::pow(sigma_, power) * std::exp(-sigma_ * sigma_ * q / 2.0);
  }
  std::shared_ptr<const Family> conjugated() const override { return flipped(); }
  std::shared_ptr<const Family> reflected() const override { return flipped(); }

 private:
  std::shared_ptr<const Family> flipped() const {
    std::vector<double> mk(k_.size());
    for (std::size_t i = 0; i < k_.size(); ++i) mk[i] = -k_[i];
    return std::make_shared<ModulatedGaussianFamily>(std::move(mk), sigma_);
  }
  std::vector<double> k_;
  double sigma_;
};

class TabulatedFamily : public Family {
 public:
  TabulatedFamily(std::string name, PointFn phys, PointFn spec)
      : name_(std::move(name)), phys_(std::move(phys)), spec_(std::move(spec)) {
    if (!phys_ && !spec_)
      throw std::domain_error("tabulated_family: need at least one callable");
  }
  std::string name() const override { return name_; }
  bool has_physical() const override { return (bool)phys_; }
  cplx physical(const WeinsteinParams& p, const std::vector<double>& x) const override {
    if (!phys_) return Family::physical(p, x);
    return phys_(p, x);
  }
  bool has_spectrum() const override { return (bool)spec_; }
  cplx spectrum(const WeinsteinParams& p, const std::vector<double>& xi) const override {
    if (!spec_) return Family::spectrum(p, xi);
    return spec_(p, xi);
  }
  std::shared_ptr<const Family> conjugated() const override {
    auto wrap = [](const PointFn& fn) -> PointFn {
      if (!fn) return nullptr;
      return [fn](const WeinsteinParams& p, const std::vector<double>& x) {
        return std::conj(fn(p, x));
      };
    };
    // conj commutes with sampling; spectra of conjugates are handled at the
    // call sites that need them, so only wrap the physical side here.
    return std::make_shared<TabulatedFamily>(name_ + "_conj", wrap(phys_), nullptr);
  }
  std::shared_ptr<const Family> reflected() const override {
    auto wrap = [](const PointFn& fn) -> PointFn {
      if (!fn) return nullptr;
      return [fn](const WeinsteinParams& p, const std::vector<double>& x) {
        std::vector<double> y = x;
        for (int i = 0; i < p.d; ++i) y[i] = -y[i];
        return fn(p, y);
      };
    };
    return std::make_shared<TabulatedFamily>(name_ + "_chk", wrap(phys_), wrap(spec_));
  }

 private:
  std::string name_;
  PointFn phys_, spec_;
};

}  // namespace

std::shared_ptr<const Family> gaussian_family(double sigma) {
  return std::make_shared<GaussianFamily>(sigma);
}
std::shared_ptr<const Family> spectral_hermite_family(int m) {
  return std::make_shared<SpectralHermiteFamily>(m);
}
std::shared_ptr<const Family> band_limited_family(double lo, double hi) {
  return std::make_shared<BandLimitedFamily>(lo, hi);
}
std::shared_ptr<const Family> smooth_band_family(double lo, double hi) {
  return std::make_shared<SmoothBandFamily>(lo, hi);
}
std::shared_ptr<const Family> modulated_gaussian_family(std::vector<double> k, double sigma) {
  return std::make_shared<ModulatedGaussianFamily>(std::move(k), sigma);
}
std::shared_ptr<const Family> tabulated_family(std::string name, PointFn physical,
                                               PointFn spectrum) {
  return std::make_shared<TabulatedFamily>(std::move(name), std::move(physical),
                                           std::move(spectrum));
}

namespace detail {

std::vector<double> hermite_radial_poly(int m, double c) {
  // p_{k+1} = -[ c (2p' - p) + u (4p'' - 4p' + p) ] applied to p_0 = 1,
  // in the variable u = |x|^2 (c = 2 alpha + d + 2). m = 1 gives c - u,
  // m = 2 gives u^2 - (2c+4) u + c(c+2).
  std::vector<double> p{1.0};
  for (int k = 0; k < m; ++k) {
    const int n = (int)p.size();
    std::vector<double> q(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
      const double pi = p[i];
      if (i >= 1) q[i - 1] += -2.0 * c * i * pi;          // -2c p'
      q[i] += c * pi;                                     // +c p
      if (i >= 2) q[i - 1] += -4.0 * i * (i - 1) * pi;    // -4u p''
      if (i >= 1) q[i] += 4.0 * i * pi;                   // +4u p'
      q[i + 1] += -pi;                                    // -u p
    }
    p = std::move(q);
  }
  return p;
}

std::vector<cplx> sample_values(const Field& f, const Grid& grid) {
  const std::size_t n = grid.node_count();
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.evaluate(grid.point_at(i));
  return out;
}

}  // namespace detail

Field Field::analytic(const WeinsteinParams& params, std::shared_ptr<const Family> family,
                      cplx amplitude, double dilation) {
  if (!family) throw std::domain_error("Field::analytic: null family");
  if (!(dilation > 0.0)) throw std::domain_error("Field::analytic: dilation > 0");
  return Field(params, Analytic{std::move(family), amplitude, dilation});
}

Field Field::sampled(const Grid& grid, std::vector<cplx> values) {
  if (values.size() != grid.node_count())
    throw DimensionError("Field::sampled: value count != grid node count");
  return Field(grid.params(), Sampled{grid, std::move(values)});
}

bool Field::has_physical() const {
  return is_sampled() || analytic_rep().family->has_physical();
}

bool Field::has_closed_spectrum() const {
  return is_analytic() && analytic_rep().family->has_spectrum();
}

cplx Field::evaluate(const std::vector<double>& x) const {
  if (!is_analytic())
    throw CapabilityError("Field::evaluate: sampled fields have no closed form");
  const auto& a = analytic_rep();
  const double power = 2.0 * params_.alpha + params_.d + 2.0;
  if (a.dilation == 1.0) return a.amplitude * a.family->physical(params_, x);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / a.dilation;
  return a.amplitude * std::pow(a.dilation, -power) * a.family->physical(params_, y);
}

cplx Field::spectrum_value(const std::vector<double>& xi) const {
  if (!has_closed_spectrum())
    throw CapabilityError("Field::spectrum_value: no closed spectral form");
  const auto& a = analytic_rep();
  if (a.dilation == 1.0) return a.amplitude * a.family->spectrum(params_, xi);
  std::vector<double> y(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) y[i] = xi[i] * a.dilation;
  return a.amplitude * a.family->spectrum(params_, y);
}

Field Field::sample(const Grid& grid) const {
  if (is_sampled()) {
    if (!grid.compatible(this->grid()))
      throw DimensionError("Field::sample: grid mismatch");
    return *this;
  }
  if (!analytic_rep().family->has_physical())
    throw CapabilityError("Field::sample: family lacks a physical form; use materialize()");
  return Field::sampled(grid, detail::sample_values(*this, grid));
}

Field Field::dilated(double a) const {
  if (!(a > 0.0)) throw std::domain_error("dilate: scale must be positive");
  if (!is_analytic())
    throw CapabilityError("dilate: only analytic fields dilate exactly");
  auto rep = analytic_rep();
  rep.dilation *= a;
  return Field(params_, rep);
}

Field Field::conjugated() const {
  if (is_analytic()) {
    auto rep = analytic_rep();
    rep.amplitude = std::conj(rep.amplitude);
    rep.family = rep.family->conjugated();
    return Field(params_, rep);
  }
  auto s = std::get<Sampled>(rep_);
  for (auto& v : s.values) v = std::conj(v);
  return Field(params_, std::move(s));
}

Field Field::checked() const {
  if (is_analytic()) {
    auto rep = analytic_rep();
    rep.family = rep.family->reflected();
    return Field(params_, rep);
  }
  const auto& s = std::get<Sampled>(rep_);
  const Grid& g = s.grid;
  const int d = params_.d;
  const int nl = g.n_lat(), nr = g.n_rad();
  std::vector<cplx> out(s.values.size());
  // lateral index j -> (nl - j) mod nl per axis, radial untouched
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
    for (int k = 0; k < nr; ++k)
      out[lf * nr + k] = s.values[src * nr + k];
  }
  return Field::sampled(g, std::move(out));
}

Field Field::scaled(cplx c) const {
  if (is_analytic()) {
    auto rep = analytic_rep();
    rep.amplitude *= c;
    return Field(params_, rep);
  }
  auto s = std::get<Sampled>(rep_);
  for (auto& v : s.values) v *= c;
  return Field(params_, std::move(s));
}

Field add_sampled(const Field& f, cplx cf, const Field& g, cplx cg) {
  if (!f.is_sampled() || !g.is_sampled() || !f.grid().compatible(g.grid()))
    throw DimensionError("add_sampled: both fields must be sampled on one grid");
  std::vector<cplx> out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = cf * f.values()[i] + cg * g.values()[i];
  return Field::sampled(f.grid(), std::move(out));
}

namespace {
const std::vector<cplx>& values_on(const Field& f, const Grid& grid,
                                   std::vector<cplx>& scratch) {
  if (f.is_sampled()) {
    if (!f.grid().compatible(grid)) throw DimensionError("field/grid mismatch");
    return f.values();
  }
  scratch = detail::sample_values(f, grid);
  return scratch;
}
}  // namespace

cplx integrate(const Field& f, const Grid& grid) {
  std::vector<cplx> scratch;
  const auto& v = values_on(f, grid, scratch);
  const auto& w = grid.mu_weights();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i];
  return acc;
}

double norm_p(const Field& f, const Grid& grid, double p) {
  if (!(p >= 1.0)) throw std::domain_error("norm_p: p must be >= 1");
  std::vector<cplx> scratch;
  const auto& v = values_on(f, grid, scratch);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
  }
  const auto& w = grid.mu_weights();
  double acc = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::norm(v[i]) * w[i];
  } else {
    for (std::size_t i = 0; i < v.size(); ++i)
      acc += std::pow(std::abs(v[i]), p) * w[i];
  }
  return std::pow(acc, 1.0 / p);
}

cplx inner_product(const Field& f, const Field& g, const Grid& grid) {
  std::vector<cplx> sf, sg;
  const auto& vf = values_on(f, grid, sf);
  const auto& vg = values_on(g, grid, sg);
  const auto& w = grid.mu_weights();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < vf.size(); ++i) acc += vf[i] * std::conj(vg[i]) * w[i];
  return acc;
}

}  // namespace wwl
