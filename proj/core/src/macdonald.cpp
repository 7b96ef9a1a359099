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

void check_k_args(double nu, cplx z) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw std::domain_error("macdonald_k: nu must be finite and >= 0");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("macdonald_k: non-finite argument");
  }
  if (!(z.real() > 0.0)) {
    throw std::domain_error("macdonald_k: require Re z > 0");
  }
}

bool is_half_integer(double nu) {
  double m = std::round(nu - 0.5);
  return m >= 0.0 && std::fabs(nu - 0.5 - m) < 1e-12;
}

// Exact terminating sum
//   K_{m+1/2}(z) = sqrt(pi/(2z)) e^{-z} sum_{k=0}^m (m+k)!/(k!(m-k)!) (2z)^{-k}
ComplexSample k_half_integer(double nu, cplx z) {
  int m = static_cast<int>(std::lround(nu - 0.5));
  cplx inv2z = 1.0 / (2.0 * z);
  KahanSum<cplx> acc;
  cplx coeff = 1.0;
  double absum = 0.0;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) {
      coeff *= static_cast<double>((m + k) * (m - k + 1)) / static_cast<double>(k);
      coeff *= inv2z;
    }
    acc.add(coeff);
    absum += std::abs(coeff);
  }
  cplx pref = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
  ComplexSample out;
  out.value = pref * acc.value();
  out.regime = Regime::series;
  out.abs_err = std::abs(pref) * absum * (m + 2) * 2.3e-16;
  return out;
}

// Optimally truncated large-z expansion
//   K_nu(z) ~ sqrt(pi/(2z)) e^{-z} [1 + sum_k a_k], a_k = a_{k-1}(4nu^2-(2k-1)^2)/(8k z)
ComplexSample k_asymptotic(double nu, cplx z, double tol, bool& ok) {
  cplx pref = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
  double apref = std::abs(pref);
  KahanSum<cplx> acc;
  cplx a = 1.0;
  acc.add(a);
  double best = std::numeric_limits<double>::infinity();
  cplx sum_at_best = a;
  double nu2 = 4.0 * nu * nu;
  for (int k = 1; k <= 60; ++k) {
    double num = nu2 - (2.0 * k - 1.0) * (2.0 * k - 1.0);
    a *= num / (8.0 * k) / z;
    double mag = std::abs(a);
    if (mag >= best) break;  // divergence point reached
    acc.add(a);
    best = mag;
    sum_at_best = acc.value();
    if (apref * mag < tol / 8.0) break;
  }
  ComplexSample out;
  out.value = pref * sum_at_best;
  out.regime = Regime::asymptotic;
  out.abs_err = apref * (2.0 * best + 4.6e-16);
  ok = out.abs_err <= tol;
  return out;
}

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt, Re z > 0.
ComplexSample k_integral(double nu, cplx z, double tol) {
  double x = z.real();
  auto log_mag = [&](double t) {
    return -x * std::cosh(t) + std::fabs(nu) * t;
  };
  double T = 1.0;
  while (log_mag(T) > std::log(tol) - 7.0 && T < 60.0) T *= 1.25;
  auto f = [&](double t) -> cplx {
    return std::exp(-z * std::cosh(t)) * std::cosh(nu * t);
  };
  QuadResult q = integrate(f, 0.0, T, tol / 4.0, 1e-13, 6000);
  ComplexSample out;
  out.value = q.value;
  out.regime = Regime::quadrature;
  out.abs_err = q.abs_err + std::exp(log_mag(T)) + (q.converged ? 0.0 : tol);
  return out;
}

}  // namespace

ComplexSample macdonald_k_general(double nu, cplx z, double tol) {
  check_k_args(nu, z);
  if (std::abs(z) > std::max(8.0, 1.5 * nu * nu)) {
    bool ok = false;
    ComplexSample a = k_asymptotic(nu, z, tol, ok);
    if (ok) return a;
  }
  return k_integral(nu, z, tol);
}

ComplexSample macdonald_k(double nu, cplx z, double tol) {
  check_k_args(nu, z);
  if (is_half_integer(nu)) return k_half_integer(nu, z);
  return macdonald_k_general(nu, z, tol);
}

}  // namespace fracwave
