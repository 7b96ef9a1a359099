// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string_view>

namespace fracwave {

using cplx = std::complex<double>;

enum class Regime { series, asymptotic, quadrature };

std::string_view regime_name(Regime r);

// A complex value carrying an upper estimate of the truncation/round-off
// error of the evaluation regime that produced it.
struct ComplexSample {
  cplx value{};
  double abs_err = 0.0;
  Regime regime = Regime::series;
};

// Parameters shared by every module: the fractional order alpha in (1,2),
// the driving frequency omega > 0, and derived principal-branch constants.
struct FracParams {
  double alpha = 1.5;
  double omega = 1.0;
  cplx i_pow_alpha;     // exp(i*pi*alpha/2), unit modulus
  cplx forcing_eig;     // i^alpha * omega^alpha
  cplx helmholtz_root;  // (i*omega)^(alpha/2); Re > 0
};

FracParams make_frac_params(double alpha, double omega);

// Principal-branch complex power exp(p*Log z), Arg z in (-pi, pi].
// Throws std::domain_error for base 0 with exponent <= 0.
cplx principal_power(cplx base, double exponent);

}  // namespace fracwave
