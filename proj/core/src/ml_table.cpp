// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
//
// Tabulated evaluator of u |-> E_{alpha,beta}(-u) for u >= 0.
//
// The direct evaluator switches between the power series, the inverse-power
// expansion and a branch-cut contour quadrature; the middle band is far too
// slow for the millions of symbol evaluations performed by kernel inversion
// and lattice evolution.  Here the whole range [0, 1e9] is replaced by three
// clamped cubic splines (linear in u below the series crossover, linear in
// log u above it) whose accuracy is validated against the direct evaluator at
// off-node points; past 1e9 the three-term inverse-power expansion has a
// remainder below 1e-30 for every alpha in (0,2], beta > 0 of interest.

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracwave/gamma_utils.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/specfun.hpp"

namespace fracwave {
namespace {

// Cubic spline on uniformly spaced nodes x0 + i*h with clamped (first
// derivative) boundary conditions; y2 holds the node second derivatives.
struct UniformSpline {
  double x0 = 0.0;
  double h = 1.0;
  std::vector<double> y;
  std::vector<double> y2;

  double eval(double x) const {
    int n = static_cast<int>(y.size());
    int j = static_cast<int>((x - x0) / h);
    j = std::clamp(j, 0, n - 2);
    double xa = x0 + j * h;
    double A = (xa + h - x) / h;
    double B = 1.0 - A;
    return A * y[j] + B * y[j + 1] +
           ((A * A * A - A) * y2[j] + (B * B * B - B) * y2[j + 1]) * h * h /
               6.0;
  }
};

// Solves the clamped-spline tridiagonal system for the second derivatives.
UniformSpline build_clamped_spline(double x0, double h, std::vector<double> y,
                                   double fp0, double fp1) {
  int n = static_cast<int>(y.size());
  std::vector<double> diag(n), rhs(n), upper(n, h / 6.0);
  diag[0] = h / 3.0;
  rhs[0] = (y[1] - y[0]) / h - fp0;
  for (int i = 1; i + 1 < n; ++i) {
    diag[i] = 2.0 * h / 3.0;
    rhs[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / h;
  }
  diag[n - 1] = h / 3.0;
  rhs[n - 1] = fp1 - (y[n - 1] - y[n - 2]) / h;

  // Thomas algorithm (lower diagonal equals h/6 as well).
  for (int i = 1; i < n; ++i) {
    double m = (h / 6.0) / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  std::vector<double> y2(n);
  y2[n - 1] = rhs[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    y2[i] = (rhs[i] - upper[i] * y2[i + 1]) / diag[i];
  }
  UniformSpline s;
  s.x0 = x0;
  s.h = h;
  s.y = std::move(y);
  s.y2 = std::move(y2);
  return s;
}

}  // namespace

struct MlNegRealTable::Impl {
  double alpha = 1.5;
  double beta = 1.0;
  double u_lo = 0.0;   // series band ends, log bands start
  double u_mid = 0.0;  // contour band ends
  double u_top = 1e9;  // spline coverage ends
  UniformSpline low;   // variable u on [0, u_lo]
  UniformSpline mid;   // variable log u on [log u_lo, log u_mid]
  UniformSpline high;  // variable log u on [log u_mid, log u_top]
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;  // far-field 1/Gamma(beta - k*alpha)
  double err = 0.0;

  double eval(double u) const {
    if (u <= u_lo) return low.eval(u);
    double v = std::log(u);
    if (u <= u_mid) return mid.eval(v);
    if (u <= u_top) return high.eval(v);
    double iu = 1.0 / u;
    return iu * (c1 - iu * (c2 - iu * c3));
  }
};

namespace {

double ml_direct(double alpha, double beta, double u) {
  // u may be slightly negative when probing derivatives at the u = 0 end;
  // the series handles positive arguments equally well.
  return mittag_leffler(alpha, beta, cplx(-u, 0.0), 1e-12).value.real();
}

// Five-point central first derivative of f at x.
double fd_derivative(const std::function<double(double)>& f, double x,
                     double step) {
  return (f(x - 2.0 * step) - 8.0 * f(x - step) + 8.0 * f(x + step) -
          f(x + 2.0 * step)) /
         (12.0 * step);
}

UniformSpline build_band(const std::function<double(double)>& f, double x0,
                         double x1, int nodes) {
  double h = (x1 - x0) / (nodes - 1);
  std::vector<double> y(nodes);
  parallel_for(nodes, [&](int i) { y[i] = f(x0 + i * h); });
  double fp0 = fd_derivative(f, x0, h * 0.5);
  double fp1 = fd_derivative(f, x1, h * 0.5);
  return build_clamped_spline(x0, h, std::move(y), fp0, fp1);
}

// Largest |spline - f| over `samples` off-node points.
double validate_band(const UniformSpline& s, const std::function<double(double)>& f,
                     int samples) {
  int n = static_cast<int>(s.y.size());
  std::vector<double> dev(samples);
  parallel_for(samples, [&](int i) {
    // off-node abscissa: golden-ratio stagger over the interior intervals
    double frac = (i + 0.382) / samples;
    double x = s.x0 + s.h * (0.5 + frac * (n - 2));
    dev[i] = std::fabs(s.eval(x) - f(x));
  });
  return *std::max_element(dev.begin(), dev.end());
}

std::shared_ptr<const MlNegRealTable::Impl> build_table(double alpha,
                                                        double beta) {
  auto impl = std::make_shared<MlNegRealTable::Impl>();
  impl->alpha = alpha;
  impl->beta = beta;
  impl->u_lo = 0.98 * ml_crossover_radius(alpha);
  impl->u_mid = std::max(std::pow(36.0, alpha), 4.0 * impl->u_lo);
  impl->u_top = 1e9;
  impl->c1 = rgamma(beta - alpha);
  impl->c2 = rgamma(beta - 2.0 * alpha);
  impl->c3 = rgamma(beta - 3.0 * alpha);

  auto f_u = [&](double u) { return ml_direct(alpha, beta, u); };
  auto f_v = [&](double v) { return ml_direct(alpha, beta, std::exp(v)); };

  const double target = 2.0e-11;
  double err = 0.0;
  struct BandSpec {
    UniformSpline MlNegRealTable::Impl::* member;
    const std::function<double(double)>* fn;
    double x0, x1;
    int nodes;
  };
  std::function<double(double)> fu = f_u, fv = f_v;
  BandSpec bands[3] = {
      {&MlNegRealTable::Impl::low, &fu, 0.0, impl->u_lo, 2560},
      {&MlNegRealTable::Impl::mid, &fv, std::log(impl->u_lo),
       std::log(impl->u_mid), 1536},
      {&MlNegRealTable::Impl::high, &fv, std::log(impl->u_mid),
       std::log(impl->u_top), 768},
  };
  for (BandSpec& b : bands) {
    for (int attempt = 0;; ++attempt) {
      (*impl).*(b.member) = build_band(*b.fn, b.x0, b.x1, b.nodes);
      double dev = validate_band((*impl).*(b.member), *b.fn, 64);
      if (dev <= target || attempt >= 2) {
        err = std::max(err, dev);
        break;
      }
      b.nodes *= 2;
    }
  }
  // direct-evaluator error at the nodes plus the interpolation deviation
  impl->err = err + 2.0e-12;
  return impl;
}

}  // namespace

double MlNegRealTable::operator()(double u) const {
  if (!(u >= 0.0)) {
    throw std::domain_error("MlNegRealTable: argument u must be >= 0");
  }
  return impl_->eval(u);
}

double MlNegRealTable::abs_err() const { return impl_->err; }
double MlNegRealTable::alpha() const { return impl_->alpha; }
double MlNegRealTable::beta() const { return impl_->beta; }

MlNegRealTable ml_neg_real_table(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= 2.0) || !(beta > 0.0)) {
    throw std::domain_error(
        "ml_neg_real_table: alpha in (0,2] and beta > 0 required");
  }
  static std::mutex mu;
  static std::map<std::pair<double, double>,
                  std::shared_ptr<const MlNegRealTable::Impl>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(alpha, beta);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_table(alpha, beta)).first;
  }
  MlNegRealTable t;
  t.impl_ = it->second;
  return t;
}

}  // namespace fracwave
