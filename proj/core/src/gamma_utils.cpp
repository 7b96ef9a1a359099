// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include "fracwave/gamma_utils.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fracwave {

double sin_pi(double y) {
  double n = std::round(y);
  double r = y - n;  // r in [-1/2, 1/2], exact for representable y
  double s = std::sin(std::numbers::pi * r);
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -s : s;
}

double cos_pi(double y) {
  double n = std::round(y);
  double r = y - n;
  double c = std::cos(std::numbers::pi * r);
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -c : c;
}

SignedLog log_rgamma(double y) {
  if (y > 0.5) {
    return {-std::lgamma(y), 1};
  }
  // Reflection: 1/Gamma(y) = sin(pi*y) * Gamma(1-y) / pi, and 1-y >= 1/2.
  double s = sin_pi(y);
  if (s == 0.0) {
    return {-std::numeric_limits<double>::infinity(), 0};
  }
  double log_abs =
      std::log(std::fabs(s)) + std::lgamma(1.0 - y) - std::log(std::numbers::pi);
  return {log_abs, s > 0.0 ? 1 : -1};
}

double rgamma(double y) {
  SignedLog l = log_rgamma(y);
  if (l.sign == 0) return 0.0;
  return l.sign * std::exp(l.log_abs);
}

double gamma_fn(double y) { return std::tgamma(y); }

}  // namespace fracwave
