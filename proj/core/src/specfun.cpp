// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include "fracwave/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "fracwave/gamma_utils.hpp"

namespace fracwave {

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::series:
      return "series";
    case Regime::asymptotic:
      return "asymptotic";
    case Regime::quadrature:
      return "quadrature";
  }
  return "unknown";
}

cplx principal_power(cplx base, double exponent) {
  if (base == cplx(0.0, 0.0)) {
    if (exponent > 0.0) return {0.0, 0.0};
    throw std::domain_error("principal_power: 0 base with exponent <= 0");
  }
  return std::exp(exponent * std::log(base));
}

FracParams make_frac_params(double alpha, double omega) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw std::domain_error("FracParams: alpha must be in (1,2)");
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::domain_error("FracParams: omega must be finite and > 0");
  }
  FracParams p;
  p.alpha = alpha;
  p.omega = omega;
  // exp(i pi alpha/2) etc. via argument-reduced sin/cos for exact symmetry
  p.i_pow_alpha = cplx(cos_pi(alpha / 2.0), sin_pi(alpha / 2.0));
  p.forcing_eig = p.i_pow_alpha * std::pow(omega, alpha);
  p.helmholtz_root =
      std::pow(omega, alpha / 2.0) * cplx(cos_pi(alpha / 4.0), sin_pi(alpha / 4.0));
  return p;
}

}  // namespace fracwave
