// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fracwave/gamma_utils.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/specfun.hpp"

namespace fracwave {

namespace {

constexpr double kPi = std::numbers::pi;

void check_wright_args(double rho, cplx z) {
  if (!(rho > -1.0 && rho < 0.0)) {
    throw std::domain_error("wright_phi: rho must be in (-1,0)");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("wright_phi: non-finite input");
  }
}

// Index of the largest series term: m* = (|z| nu^nu)^{1/(1-nu)}, nu = -rho.
double peak_index(double nu, double az) {
  if (az == 0.0) return 0.0;
  return std::pow(az * std::pow(nu, nu), 1.0 / (1.0 - nu));
}

ScaledSample wright_series(double rho, double delta, cplx z, double tol) {
  ScaledSample out;
  out.regime = Regime::series;
  double az = std::abs(z);
  if (az == 0.0) {
    out.mantissa = rgamma(delta);
    out.abs_err = 4e-16 * std::abs(out.mantissa);
    return out;
  }
  double nu = -rho;
  double laz = std::log(az);
  double ph = std::arg(z);
  double m_star = peak_index(nu, az);
  int m_min = static_cast<int>(std::ceil(m_star)) + 2;
  int m_cap = 4 * m_min + 400;

  KahanSum<cplx> acc;
  const double log_tol = std::log(tol / 8.0);
  double env_stop = 0.0;
  double noise = 0.0;
  int m = 0;
  for (;; ++m) {
    double y = delta + rho * m;
    SignedLog rg = log_rgamma(y);
    double base = m * laz - std::lgamma(m + 1.0);
    // Smooth upper bound on |term_m|: |1/Gamma(y)| <= Gamma(1-y)/pi for
    // y < 1/2 (reflection, |sin| <= 1) and equals 1/Gamma(y) for y >= 1/2.
    // The raw term magnitude dips spuriously wherever y approaches a pole
    // of Gamma, so the stopping rule must use this envelope instead.
    double env = base + ((y < 0.5) ? (std::lgamma(1.0 - y) - std::log(kPi))
                                   : (-std::lgamma(y)));
    if (rg.sign != 0) {
      double log_mag = base + rg.log_abs;
      if (log_mag > 700.0) {
        throw std::overflow_error("wright_phi: series term overflows");
      }
      double mag = std::exp(log_mag);
      acc.add(static_cast<double>(rg.sign) * std::polar(mag, m * ph));
      // rounding in the log pieces is amplified by exp: charge each term
      // eps * (sum of log-piece magnitudes) relative error
      noise += mag * 2.2e-16 *
               (4.0 + std::fabs(m * laz) + std::lgamma(m + 1.0) +
                std::fabs(rg.log_abs));
    }
    if ((m >= m_min && env < log_tol) || m >= m_cap) {
      env_stop = env;
      break;
    }
  }
  out.mantissa = acc.value();
  // Omitted tail: sum the envelope explicitly (it can decay slowly just past
  // the peak for nu close to 1), then close with a geometric estimate.
  double tail = std::exp(std::min(env_stop, 700.0));
  double prev = tail;
  for (int k = m + 1; k <= m + 2000; ++k) {
    double y = delta + rho * k;
    double env = k * laz - std::lgamma(k + 1.0) +
                 ((y < 0.5) ? (std::lgamma(1.0 - y) - std::log(kPi))
                            : (-std::lgamma(y)));
    double t = std::exp(std::min(env, 700.0));
    tail += t;
    if (t < 1e-3 * tail) {
      double r = std::min(0.9, prev > 0.0 ? t / prev : 0.0);
      tail += t * r / (1.0 - r);
      break;
    }
    prev = t;
  }
  out.abs_err = tail + noise;
  return out;
}

// Saddle-point contour for Phi(-nu, delta; -x), x > 0: the Bromwich-type
// representation (1/2 pi i) int e^{s - x s^nu} s^{-delta} ds evaluated on
// the vertical line through the real saddle s* = (nu x)^{1/(1-nu)}.  The
// integrand is written relative to its saddle value e^{h(0)}, so results far
// below the double-precision underflow threshold stay representable as
// (mantissa, log_scale).
ScaledSample wright_contour_neg(double nu, double delta, double x, double tol) {
  ScaledSample out;
  out.regime = Regime::quadrature;
  double log_sstar = std::log(nu * x) / (1.0 - nu);
  if (!(log_sstar < 690.0)) {
    // The saddle point itself exceeds double range; |Phi| is far below any
    // value a caller could rebuild from a scaled mantissa.
    out.mantissa = 0.0;
    out.log_scale = -std::numeric_limits<double>::infinity();
    out.abs_err = 1.0;
    return out;
  }
  double sstar = std::pow(nu * x, 1.0 / (1.0 - nu));
  double h0 = -sstar * (1.0 - nu) / nu;  // = -B(nu) x^{1/(1-nu)}
  if (h0 < -1500.0) {
    // Deep tail: even against prefactors at the top of double range the
    // rebuilt value underflows, so report an exact zero on the saddle scale.
    out.mantissa = 0.0;
    out.log_scale = h0;
    out.abs_err = 1.0;
    return out;
  }
  out.log_scale = h0;

  // exp(z) - 1 without cancellation for small |z|
  auto cexpm1 = [](cplx z) -> cplx {
    double ex = std::expm1(z.real());
    double sy = std::sin(z.imag());
    double cym1 = -2.0 * std::sin(0.5 * z.imag()) * std::sin(0.5 * z.imag());
    return cplx(ex * (cym1 + 1.0) + cym1, (ex + 1.0) * sy);
  };
  // h(s) - h(s*) along s = sigma* (1 + i u):
  //   sigma* [(w - 1) - (w^nu - 1)/nu],  w = 1 + i u.
  // Written with expm1 so the saddle-value cancellation cannot amplify
  // rounding noise by the (possibly enormous) factor sigma*.
  auto h_rel = [&](double u) -> cplx {
    cplx lw(0.5 * std::log1p(u * u), std::atan(u));
    return sstar * (cplx(0.0, u) - cexpm1(nu * lw) / nu);
  };
  auto integrand = [&](double u) -> cplx {
    cplx w(1.0, u);
    return std::exp(h_rel(u) - delta * std::log(w));
  };
  auto log_mag = [&](double u) {
    cplx w(1.0, u);
    return h_rel(u).real() - delta * 0.5 * std::log1p(u * u);
  };

  double u_w = 1.0 / std::sqrt(sstar * (1.0 - nu));
  double U = 8.0 * u_w;
  for (int i = 0; i < 300 && log_mag(U) > -45.0; ++i) U *= 1.4;

  QuadResult q = integrate(integrand, 0.0, U, 1e-14, 1e-13, 4000);
  // prefactor sigma*^{1-delta}/pi from ds = sigma* i du and s^{-delta},
  // folded into the log scale so it can never overflow; the conjugate-
  // symmetric lower half line doubles the real part, so only Re of the
  // half-line integral enters (its imaginary part is not an error).
  double log_pref = (1.0 - delta) * log_sstar - std::log(kPi);
  out.log_scale = h0 + log_pref;
  out.mantissa = q.value.real();
  double tail = std::exp(log_mag(U)) * std::max(U, 1.0);
  // residual rounding noise: phase jitter in h_rel of order sigma* u eps
  double exp_noise = 4.4e-16 * (sstar / nu + std::fabs(h0) + 8.0);
  out.abs_err = q.abs_err + tail + std::abs(q.value) * exp_noise +
                std::abs(out.mantissa) * tol * 1e-3;
  return out;
}

}  // namespace

ScaledSample wright_phi_scaled(double rho, double delta, cplx z, double tol) {
  check_wright_args(rho, z);
  double nu = -rho;
  double az = std::abs(z);
  double cancel_ln = (1.0 - nu) * peak_index(nu, az);
  if (z.imag() == 0.0 && z.real() < 0.0 && cancel_ln > 8.0) {
    return wright_contour_neg(nu, delta, -z.real(), tol);
  }
  return wright_series(rho, delta, z, tol);
}

ComplexSample wright_phi(double rho, double delta, cplx z, double tol) {
  ScaledSample s = wright_phi_scaled(rho, delta, z, tol);
  ComplexSample out;
  out.regime = s.regime;
  double scale = std::exp(s.log_scale);  // may underflow to 0 for deep tails
  out.value = s.mantissa * scale;
  out.abs_err = s.abs_err * (scale > 0.0 ? scale : 1e-300);
  return out;
}

ScaledSample wright_density_scaled(double alpha, double z, double tol) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw std::domain_error("wright_density: alpha must be in (1,2)");
  }
  if (!(z >= 0.0)) {
    throw std::domain_error("wright_density: z must be >= 0");
  }
  double gamma = 1.0 / alpha;
  ScaledSample s = wright_phi_scaled(-gamma, 1.0 - gamma, cplx(-z, 0.0), tol);
  s.abs_err += std::abs(s.mantissa.imag());
  s.mantissa = cplx(s.mantissa.real(), 0.0);
  return s;
}

ComplexSample wright_density(double alpha, double z, double tol) {
  ScaledSample s = wright_density_scaled(alpha, z, tol);
  ComplexSample out;
  out.regime = s.regime;
  double scale = std::exp(s.log_scale);
  out.value = s.mantissa.real() * scale;
  out.abs_err = s.abs_err * (scale > 0.0 ? scale : 1e-300);
  return out;
}

}  // namespace fracwave
