// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "fracwave/types.hpp"

namespace fracwave {

struct QuadResult {
  cplx value{};
  double abs_err = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod (G7,K15) on the finite interval [a,b]; the worst
// interval is bisected until the accumulated error estimate falls below
// max(abs_tol, rel_tol*|value|) or max_intervals is reached.
QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12,
                     int max_intervals = 4000);

// Integral over [a, +inf) for an eventually decaying integrand: adaptive
// panels of geometrically growing length are added until two consecutive
// panel contributions fall below abs_tol/4.
QuadResult integrate_to_inf(const std::function<cplx(double)>& f, double a,
                            double first_len, double abs_tol = 1e-12,
                            int max_panels = 80);

// Euler-transform acceleration of the series sum_{k>=0} term(k) whose terms
// (eventually) alternate; terms are requested lazily.
struct EulerSumResult {
  cplx value{};
  double abs_err = 0.0;
  int terms_used = 0;
  bool converged = false;
};
EulerSumResult euler_sum(const std::function<cplx(int)>& term, double abs_tol,
                         int min_terms = 6, int max_terms = 400);

// Oscillatory integral over [a, +inf): consecutive half-period panels of
// length half_period are integrated adaptively and the (alternating) panel
// series is Euler-accelerated.
QuadResult integrate_oscillatory(const std::function<cplx(double)>& f, double a,
                                 double half_period, double abs_tol = 1e-12,
                                 int max_half_periods = 600);

// Geometrically graded breakpoints a = x_0 < ... < x_levels = b clustering
// towards b with successive gap ratio `ratio` (0 < ratio < 1).
std::vector<double> graded_breakpoints(double a, double b, int levels,
                                       double ratio);

// Least-squares straight line through (x_i, y_i).
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Deterministic parallel map over [0,n): each index writes only its own
// slot, so results are identical regardless of the worker count, which is
// capped by the FRACWAVE_THREADS environment variable when set.
void parallel_for(int n, const std::function<void(int)>& body);
int worker_count(int n);

}  // namespace fracwave
