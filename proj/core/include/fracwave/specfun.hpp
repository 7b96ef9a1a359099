// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include "fracwave/types.hpp"

namespace fracwave {

// ---------------------------------------------------------------------------
// Mittag-Leffler E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha*k + beta),
// for alpha in (0,2], beta > 0.
//
// Below the crossover radius |z| = 5 + 5*alpha the defining series is summed
// with compensated accumulation.  Above it the value is assembled from the
// exponential contributions of the enclosed poles of 1/(s^alpha - z) plus an
// algebraic tail; the tail uses the optimally truncated inverse-power
// expansion when its bound meets the tolerance (regime "asymptotic") and a
// Hankel branch-cut contour quadrature otherwise (regime "quadrature").
// ---------------------------------------------------------------------------

enum class MlPath { automatic, series, large_z };

double ml_crossover_radius(double alpha);

ComplexSample mittag_leffler(double alpha, double beta, cplx z,
                             double tol = 1e-12);
ComplexSample mittag_leffler_path(MlPath path, double alpha, double beta,
                                  cplx z, double tol = 1e-12);

// phi_omega(t) = E_alpha(i^alpha omega^alpha t^alpha); never zero on the
// critical ray (throws std::runtime_error if |value| <= abs_err).
ComplexSample mittag_leffler_on_ray(const FracParams& params, double t,
                                    double tol = 1e-12);

// ---------------------------------------------------------------------------
// Wright function Phi(rho,delta;z) = sum_m z^m / (m! Gamma(delta + rho*m)),
// rho in (-1,0).  For large negative real z the series cancels
// catastrophically; a saddle-point contour (vertical line through the saddle
// of the integral representation) is used there, which also yields values on
// a log scale far below double-precision underflow.
// ---------------------------------------------------------------------------

// value = mantissa * exp(log_scale); abs_err bounds the error of mantissa.
struct ScaledSample {
  cplx mantissa{};
  double log_scale = 0.0;
  double abs_err = 0.0;
  Regime regime = Regime::series;
};

ComplexSample wright_phi(double rho, double delta, cplx z, double tol = 1e-12);
ScaledSample wright_phi_scaled(double rho, double delta, cplx z,
                               double tol = 1e-12);

// Subordination density Phi_{1/alpha}(z) = Phi(-1/alpha, 1-1/alpha; -z).
ComplexSample wright_density(double alpha, double z, double tol = 1e-12);
ScaledSample wright_density_scaled(double alpha, double z, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Macdonald function K_nu(z), nu >= 0, Re z > 0 (principal-branch domain;
// Re z <= 0 is rejected with std::domain_error).  Half-integer nu uses the
// exact terminating sum; otherwise the optimally truncated large-z expansion
// or the integral representation int_0^inf exp(-z cosh t) cosh(nu t) dt.
// ---------------------------------------------------------------------------

ComplexSample macdonald_k(double nu, cplx z, double tol = 1e-12);
// Forces the general (asymptotic/integral) path even at half-integer nu, so
// the closed form can be tested against an independent evaluation.
ComplexSample macdonald_k_general(double nu, cplx z, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Fast evaluator of u |-> E_{alpha,beta}(-u) on the negative real axis
// (u >= 0), the hot path of kernel inversion and lattice evolution.  Three
// clamped cubic splines (u, log u, log u) cover [0, 1e9]; beyond that the
// three-term inverse-power expansion is exact to ~1e-30.  Built once per
// (alpha, beta) and cached process-wide; abs_err() is the validated uniform
// error bound of the table.
// ---------------------------------------------------------------------------

class MlNegRealTable {
 public:
  double operator()(double u) const;  // E_{alpha,beta}(-u)
  double abs_err() const;
  double alpha() const;
  double beta() const;

  struct Impl;

 private:
  friend MlNegRealTable ml_neg_real_table(double alpha, double beta);
  std::shared_ptr<const Impl> impl_;
};

MlNegRealTable ml_neg_real_table(double alpha, double beta);

}  // namespace fracwave
