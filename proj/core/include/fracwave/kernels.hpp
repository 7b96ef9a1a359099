// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "fracwave/types.hpp"

namespace fracwave {

// ---------------------------------------------------------------------------
// Fundamental-solution kernels of the fractional diffusion-wave equation
// D_t^alpha u = Laplace(u), alpha in (1,2), in R^n (n >= 3):
//
//   Gamma_{alpha,n}(r,t) = 2^{-n} pi^{(1-n)/2} t^{alpha-alpha*n/2-1}
//                          * f_{alpha/2}(t^{-alpha/2} r; n-1, alpha-alpha*n/2)
//
// (the forcing kernel Y), and the propagator kernel Z1 = H_alpha with Fourier
// symbol E_alpha(-|xi|^2 t^alpha).  Pointwise both obey stretched-exponential
// envelopes  C * t^{-p} * r^{-q} * exp{-sigma (t^{-alpha/2} r)^{2/(2-alpha)}}
// whose constants (C, sigma) are existential; fit_stretched_bound recovers
// them empirically.
// ---------------------------------------------------------------------------

// Envelope factor mu_n(z): 1 for n = 3, 1 + |log z| for n = 4, z^{4-n} for
// n >= 5 (z > 0).
double mu_n(int n, double z);

// Stretched-exponential envelope exp{-sigma * y^{2/(2-alpha)}} for the scaled
// radius y = t^{-alpha/2} * r >= 0.
double rho_sigma(double alpha, double sigma, double y);

// f_{alpha/2}(z; mu, delta)
//   = (2/Gamma(mu/2)) * int_1^inf Phi(-alpha/2, delta, -z*t) (t^2-1)^{mu/2-1} dt
// for z > 0, mu > 0.  For mu = 2 the exact antiderivative
// d/dw Phi(rho, delta; w) = Phi(rho, delta+rho; w) collapses the integral to
// (2/z) * Phi(-alpha/2, delta + alpha/2, -z); other mu use graded adaptive
// quadrature truncated where the Wright factor's stretched-exponential tail
// falls below tolerance.
ComplexSample f_alpha_half(double alpha, double z, double mu, double delta,
                           double tol = 1e-11);
// Forces the quadrature path even at mu = 2 so the closed form can be
// cross-checked against an independent evaluation.
ComplexSample f_alpha_half_quadrature(double alpha, double z, double mu,
                                      double delta, double tol = 1e-11);

// Gamma_{alpha,n}(r,t) for n >= 3, r > 0, t > 0 (real-valued).
ComplexSample gamma_kernel(const FracParams& params, int n, double r, double t,
                           double tol = 1e-11);

// Laplace transform of t |-> Gamma_{alpha,n}(r,t), closed form
//   2^{-n/2} pi^{-n/2} r^{-n/2+1} s^{-alpha/2+alpha*n/4}
//     * K_{n/2-1}(s^{alpha/2} r),
// valid on Re s >= 0, s != 0 (principal powers).
ComplexSample gamma_transform_closed(const FracParams& params, int n, double r,
                                     cplx s);

// Same transform by direct quadrature of int_0^inf e^{-s t} Gamma dt; the
// independent (expensive) oracle for the closed form.  Re s >= 0, s != 0;
// purely imaginary s uses half-period oscillatory panels with Euler
// acceleration.
ComplexSample gamma_transform_quadrature(const FracParams& params, int n,
                                         double r, cplx s, double tol = 1e-7);

// Fourier-Laplace boundary value: the closed form above at s = i*omega_lt
// (omega_lt real, nonzero).
ComplexSample fourier_gamma_transform(const FracParams& params, int n, double r,
                                      double omega_lt);

// Z1 kernel H_alpha(t,r): radial inverse Fourier transform of
// E_alpha(-|xi|^2 t^alpha) in dimension n.  The Mittag-Leffler symbol decays
// only like |xi|^{-2}, so the algebraic part A/(|xi|^2 + kappa^2) with
// A = t^{-alpha}/Gamma(1-alpha), kappa = t^{-alpha/2} is inverted in closed
// form (a Macdonald function) and only the O(|xi|^{-4}) remainder is
// integrated numerically.  Supported for n in {3, 4}; r > 0 (the kernel is
// singular at r = 0 like r^{-n+2}).
ComplexSample z1_kernel(const FracParams& params, int n, double r, double t,
                        double tol = 1e-9);

// Independent n = 3 closed form for cross-checks:
//   H_alpha(t,r) = t^{-alpha} Phi(-alpha/2, 1-alpha, -t^{-alpha/2} r)/(4 pi r),
// obtained by descending the subordination representation to one dimension.
ComplexSample z1_kernel_wright(const FracParams& params, double r, double t,
                               double tol = 1e-11);

// dH_alpha/dr by differentiated inversion (n = 3 only).
ComplexSample z1_radial_derivative(const FracParams& params, int n, double r,
                                   double t, double tol = 1e-8);

// Total mass int_{R^n} Z1(t,xi) dxi by radial quadrature of the inversion
// values (surface measure of S^{n-1} included); equals 1 for every t > 0.
ComplexSample z1_mass(const FracParams& params, int n, double t,
                      double tol = 1e-7);

// ---------------------------------------------------------------------------
// Kernel tables
// ---------------------------------------------------------------------------

enum class KernelKind { z1, z2, y_forcing };

std::string_view kernel_kind_name(KernelKind kind);

struct RadialKernel {
  KernelKind kind = KernelKind::z1;
  double alpha = 1.5;
  int dim = 3;
  double t = 1.0;
  std::vector<double> radii;    // strictly increasing, > 0
  std::vector<cplx> values;
  std::vector<double> abs_errs;
};

// Tabulates the named kernel over the given radii (parallel over radii,
// deterministic).  KernelKind::z2 has no real-space evaluator and is
// rejected with std::domain_error.
RadialKernel tabulate_kernel(KernelKind kind, const FracParams& params, int n,
                             double t, const std::vector<double>& radii,
                             double tol = 1e-9);

// CSV export with columns kind, alpha, n, t, r, re, im, abs_err.
void write_kernel_csv(const std::filesystem::path& path,
                      const RadialKernel& table);

// ---------------------------------------------------------------------------
// Empirical envelope constants
// ---------------------------------------------------------------------------

struct BoundParams {
  double C = 1.0;      // > 0
  double sigma = 1.0;  // > 0
};

// Given samples of w_i = y_i^{2/(2-alpha)} and
// logratio_i = log(|kernel_i| / algebraic envelope_i), fits (C, sigma) with
// log C - sigma * w >= logratio on every calibration sample: sigma is 0.9x
// the least-squares slope magnitude (demanding decay), C the smallest
// constant covering all samples with a 5% margin.  Throws std::runtime_error
// if the data do not decay (fitted sigma <= 0).
BoundParams fit_stretched_bound(const std::vector<double>& w,
                                const std::vector<double>& logratio);

// True when logratio <= log C - sigma * w (the bound holds at this sample).
bool satisfies_stretched_bound(const BoundParams& bp, double w,
                               double logratio);

}  // namespace fracwave
