// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <vector>

#include "fracwave/types.hpp"

namespace fracwave {

// ---------------------------------------------------------------------------
// Uniform time grids and sampled trajectories.
// ---------------------------------------------------------------------------

// Ascending grid t_k = k*h starting at 0.  Spacing must be uniform to within
// 1e-14 * (1 + t_end) per gap; validate_time_grid enforces the invariants.
struct TimeGrid {
  std::vector<double> t;
  double h = 0.0;
};

// Grid with n_points = round(t_end/h) + 1 nodes; requires h > 0, t_end >= h,
// and t_end an integer multiple of h to within 1e-9 relative.
TimeGrid make_time_grid(double t_end, double h);

// Throws std::invalid_argument if the grid breaks any TimeGrid invariant.
void validate_time_grid(const TimeGrid& grid);

// Complex scalar samples y_k = y(t_k) plus the initial slope y'(0), which the
// fractional derivative of order > 1 needs as explicit data.
struct ScalarTrajectory {
  TimeGrid grid;
  std::vector<cplx> y;
  cplx dy0{};
};

// ---------------------------------------------------------------------------
// Caputo-Dzhrbashyan derivative of order alpha in (1,2).
// ---------------------------------------------------------------------------

// D^alpha u(t_k) by product integration of the second-derivative form
//   (1/Gamma(2-alpha)) \int_0^{t_k} (t_k - tau)^{1-alpha} u''(tau) dtau
// with u'' approximated from half-node slopes (u_{j+1}-u_j)/h and the ghost
// slope u'(0)=dy0 on the first half cell, plus a starting-weight correction
// attached to (u_1 - u_0 - h*dy0) that makes the rule exact on
// span{1, t, t^alpha}.  Requires k >= 2 and k < len(t); O(k) work.
cplx caputo_derivative(const ScalarTrajectory& traj, double alpha,
                       std::size_t k);

// ---------------------------------------------------------------------------
// Forced relaxation oscillator  D^alpha y + lambda y = forcing,
// y(0) = y'(0) = 0.
// ---------------------------------------------------------------------------

// Implicit stepper using the same corrected product-integration rule at every
// node (full O(N^2) history).  Stability: unconditional for Re(lambda) >= 0;
// for Re(lambda) < 0 requires |lambda| * Gamma(3-alpha) * h^alpha < 1
// (checked, std::domain_error otherwise).  Throws std::runtime_error if the
// iterates blow up beyond 1e12 times the forcing scale.
ScalarTrajectory caputo_stepper(cplx lambda,
                                const std::function<cplx(double)>& forcing,
                                const TimeGrid& grid, double alpha);

// Duhamel convolution for the forcing phi_omega(tau) = E_alpha(i^alpha
// omega^alpha tau^alpha):
//   y(t) = \int_0^t (t-tau)^{alpha-1} E_{alpha,alpha}(-lambda (t-tau)^alpha)
//          phi_omega(tau) dtau,
// evaluated by adaptive quadrature on panels geometrically graded towards the
// endpoint tau = t where the kernel derivative is singular.  Requires
// lambda >= 0 and t >= 0; y(0) = 0 exactly.
ComplexSample duhamel_solution(double lambda, const FracParams& params,
                               double t, double tol = 1e-10);

// Closed form of the same solution,
//   y(t) = t^alpha [lambda E_{alpha,alpha+1}(-lambda t^alpha)
//                   + fe E_{alpha,alpha+1}(fe t^alpha)] / (lambda + fe),
// with fe = i^alpha omega^alpha; lambda + fe never vanishes for real
// lambda >= 0 because Im(fe) > 0 for alpha in (1,2).  y(0) = 0 exactly.
ComplexSample closed_form_forced(double lambda, const FracParams& params,
                                 double t);

// CSV export with header "t,re,im", one row per node.
void write_trajectory_csv(const std::filesystem::path& path,
                          const ScalarTrajectory& traj);

}  // namespace fracwave
