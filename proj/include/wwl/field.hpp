// Functions on the half-space in two representations: closed-form families
// (exact under dilation / reflection / conjugation) and complex samples on a
// grid. Weighted integration, norms and inner products live here too.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <variant>

#include "wwl/grid.hpp"

namespace wwl {

// A closed-form family. Physical evaluation and spectral evaluation are each
// optional; at least one must exist. Implementations must be even in the
// last coordinate.
class Family {
 public:
  virtual ~Family() = default;
  virtual std::string name() const = 0;

  virtual bool has_physical() const { return false; }
  virtual cplx physical(const WeinsteinParams&, const std::vector<double>&) const {
    throw CapabilityError("family has no closed physical form");
  }
  virtual bool has_spectrum() const { return false; }
  virtual cplx spectrum(const WeinsteinParams&, const std::vector<double>&) const {
    throw CapabilityError("family has no closed spectral form");
  }

  // Pointwise complex conjugate / lateral reflection of the family shape.
  virtual std::shared_ptr<const Family> conjugated() const = 0;
  virtual std::shared_ptr<const Family> reflected() const = 0;
};

// exp(-|x|^2 / (2 sigma^2)); spectrum sigma^{2a+d+2} exp(-sigma^2 |xi|^2 / 2).
std::shared_ptr<const Family> gaussian_family(double sigma = 1.0);

// Defined by its spectrum |xi|^{2m} exp(-|xi|^2/2); the physical form is a
// polynomial in |x|^2 times the unit Gaussian.
std::shared_ptr<const Family> spectral_hermite_family(int m);

// Indicator spectrum 1{rho_lo <= |xi| <= rho_hi}; no closed physical form.
std::shared_ptr<const Family> band_limited_family(double rho_lo, double rho_hi);

// Band-limited with a C-infinity edge rolloff: spectrum
// exp(1 - 1/(1 - t^2)), t = (2|xi| - hi - lo)/(hi - lo), zero off the band.
// Decays rapidly in physical space, unlike the hard indicator.
std::shared_ptr<const Family> smooth_band_family(double rho_lo, double rho_hi);

// exp(i <k, x'>) exp(-|x|^2/(2 sigma^2)), k a lateral wave vector.
std::shared_ptr<const Family> modulated_gaussian_family(std::vector<double> k,
                                                        double sigma = 1.0);

// Arbitrary callables (even in the last variable). Either may be null.
using PointFn = std::function<cplx(const WeinsteinParams&, const std::vector<double>&)>;
std::shared_ptr<const Family> tabulated_family(std::string name, PointFn physical,
                                               PointFn spectrum = nullptr);

class Field {
 public:
  struct Analytic {
    std::shared_ptr<const Family> family;
    cplx amplitude{1.0, 0.0};
    double dilation = 1.0;
  };
  struct Sampled {
    Grid grid;
    std::vector<cplx> values;
  };

  static Field analytic(const WeinsteinParams& params,
                        std::shared_ptr<const Family> family,
                        cplx amplitude = {1.0, 0.0}, double dilation = 1.0);
  static Field sampled(const Grid& grid, std::vector<cplx> values);

  const WeinsteinParams& params() const { return params_; }
  bool is_analytic() const { return std::holds_alternative<Analytic>(rep_); }
  bool is_sampled() const { return std::holds_alternative<Sampled>(rep_); }
  const Analytic& analytic_rep() const { return std::get<Analytic>(rep_); }
  const Grid& grid() const { return std::get<Sampled>(rep_).grid; }
  const std::vector<cplx>& values() const { return std::get<Sampled>(rep_).values; }

  bool has_physical() const;
  bool has_closed_spectrum() const;

  // Pointwise closed-form evaluation (analytic fields with a physical form).
  cplx evaluate(const std::vector<double>& x) const;
  // Closed-form spectral value A * S(a * xi), folding amplitude and dilation.
  cplx spectrum_value(const std::vector<double>& xi) const;

  // Physical samples on a grid; requires a physical form (see materialize()
  // in transform.hpp for spectrum-only families).
  Field sample(const Grid& grid) const;

  Field dilated(double a) const;     // phi_a(x) = a^{-(2a+d+2)} phi(x/a)
  Field conjugated() const;
  Field checked() const;             // lateral reflection y -> (-y', y_{d+1})
  Field scaled(cplx c) const;

 private:
  Field(WeinsteinParams p, std::variant<Analytic, Sampled> rep)
      : params_(p), rep_(std::move(rep)) {}
  WeinsteinParams params_;
  std::variant<Analytic, Sampled> rep_;
};

// check_function(f)(y) = f(-y', y_{d+1}); involution.
inline Field check_function(const Field& f) { return f.checked(); }

// Pointwise linear combination of two sampled fields on the same grid.
Field add_sampled(const Field& f, cplx cf, const Field& g, cplx cg);

// Quadrature of f against d mu_alpha. f must be sampled on (or analytically
// samplable onto) the grid.
cplx integrate(const Field& f, const Grid& grid);

// Weighted L^p norm, 1 <= p <= inf (inf = max over nodes).
double norm_p(const Field& f, const Grid& grid, double p);

// <f, g> = int f conj(g) d mu_alpha.
cplx inner_product(const Field& f, const Field& g, const Grid& grid);

namespace detail {
// Coefficients (ascending in u = |x|^2) of the polynomial p_m with
// H(|xi|^{2m} e^{-|xi|^2/2}) = p_m(|x|^2) e^{-|x|^2/2}, where c = 2a + d + 2.
std::vector<double> hermite_radial_poly(int m, double c);
// Samples an analytic field's physical form on a grid (shared loop).
std::vector<cplx> sample_values(const Field& f, const Grid& grid);
}  // namespace detail

}  // namespace wwl
