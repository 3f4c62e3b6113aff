#include "wwl/quadrature.hpp"

#include <cmath>

#include "wwl/special_functions.hpp"

namespace wwl {

namespace {

// Eigenvalues + first eigenvector components of a symmetric tridiagonal
// matrix by implicit-shift QL (classic imtql2, trimmed to the first row of
// the eigenvector matrix).
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = (int)d.size();
  z.assign(n, 0.0);
  z[0] = 1.0;
  if (n == 1) return;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-300 + 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tridiag_ql: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  // sort ascending, carrying z
  for (int i = 0; i < n - 1; ++i) {
    int k = i;
    for (int j = i + 1; j < n; ++j)
      if (d[j] < d[k]) k = j;
    if (k != i) {
      std::swap(d[i], d[k]);
      std::swap(z[i], z[k]);
    }
  }
}

}  // namespace

QuadRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::domain_error("gauss_jacobi: n >= 1");
  if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("gauss_jacobi: a, b > -1");
  std::vector<double> diag(n), off;
  const double ab = a + b;
  diag[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    diag[k] = (b * b - a * a) / (t * (t + 2.0));
  }
  off.resize(n > 1 ? n - 1 : 0);
  if (n > 1) {
    off[0] = std::sqrt(4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
    for (int k = 2; k < n; ++k) {
      const double t = 2.0 * k + ab;
      off[k - 1] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + ab) /
                             (t * t * (t + 1.0) * (t - 1.0)));
    }
  }
  const double mu0 = std::pow(2.0, ab + 1.0) * gamma_fn(a + 1.0) * gamma_fn(b + 1.0) /
                     gamma_fn(ab + 2.0);
  std::vector<double> z;
  tridiag_ql(diag, off, z);
  QuadRule rule;
  rule.nodes = diag;
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = mu0 * z[i] * z[i];
  return rule;
}

RadialRule::RadialRule(int n, double extent, double s, int half_stencil)
    : n_(n), step_(extent / n) {
  if (n < 2) throw std::domain_error("RadialRule: n >= 2");
  if (!(extent > 0.0)) throw std::domain_error("RadialRule: extent > 0");
  const QuadRule gl = gauss_legendre(10);
  const QuadRule gj = gauss_jacobi(12, 0.0, s);  // first cell, weight t^s
  const double D = step_;
  cells_.resize(n);
  for (int c = 0; c < n; ++c) {
    const int h = std::min(half_stencil, n - 1 - c);
    Cell& cell = cells_[c];
    std::vector<double> pos;
    for (int j = c - h; j <= c + h; ++j) {
      pos.push_back((j + 0.5) * D);
      cell.fold.push_back(j >= 0 ? j : -1 - j);
    }
    const int S = (int)pos.size();
    if (c == 0) {
      // x = D (1+u)/2, dx with the t^s factor absorbed into the rule
      const double scale = std::pow(D / 2.0, s + 1.0);
      for (std::size_t g = 0; g < gj.nodes.size(); ++g) {
        cell.x.push_back(D * (1.0 + gj.nodes[g]) / 2.0);
        cell.base.push_back(scale * gj.weights[g]);
      }
    } else {
      const double lo = c * D, hi = (c + 1) * D;
      const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
      for (std::size_t g = 0; g < gl.nodes.size(); ++g) {
        const double x = mid + half * gl.nodes[g];
        cell.x.push_back(x);
        cell.base.push_back(half * gl.weights[g] * std::pow(x, s));
      }
    }
    cell.card.resize(cell.x.size() * S);
    for (std::size_t g = 0; g < cell.x.size(); ++g) {
      const double x = cell.x[g];
      for (int i = 0; i < S; ++i) {
        double L = 1.0;
        for (int q = 0; q < S; ++q)
          if (q != i) L *= (x - pos[q]) / (pos[i] - pos[q]);
        cell.card[g * S + i] = L;
      }
    }
  }
  weights([](double) { return 1.0; }, plain_);
}

void RadialRule::weights(const std::function<double(double)>& A,
                         std::vector<double>& W) const {
  W.assign(n_, 0.0);
  for (const Cell& cell : cells_) {
    const int S = (int)cell.fold.size();
    for (std::size_t g = 0; g < cell.x.size(); ++g) {
      const double f = cell.base[g] * A(cell.x[g]);
      const double* card = &cell.card[g * S];
      for (int i = 0; i < S; ++i) W[cell.fold[i]] += f * card[i];
    }
  }
}

}  // namespace wwl
