// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include "fracwave/fracode.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracwave/gamma_utils.hpp"
#include "fracwave/io_util.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/specfun.hpp"

namespace fracwave {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw std::domain_error("fracode: alpha must lie in (1,2)");
  }
}

// Kernel masses of (t_k - tau)^(1-alpha) over cells staggered by half a step
// so that each mass is centred where its second difference lives:
//   beta[0] = (1/2)^(2-alpha)                     cap [t_{k-1/2}, t_k],
//   beta[i] = (i+1/2)^(2-alpha) - (i-1/2)^(2-alpha)   for [t_{k-i-1/2},
//             t_{k-i+1/2}], i = 1..count-1,
// all in units of h^(2-alpha)/(2-alpha); positive and decreasing.
std::vector<double> staggered_weights(double alpha, std::size_t count) {
  const double e = 2.0 - alpha;
  std::vector<double> beta(count);
  double prev = std::pow(0.5, e);
  beta[0] = prev;
  for (std::size_t i = 1; i < count; ++i) {
    const double next = std::pow(double(i) + 0.5, e);
    beta[i] = next - prev;
    prev = next;
  }
  return beta;
}

// Mass of the leading cell [0, t_{1/2}] seen from node k, same units.
double leading_mass(double alpha, std::size_t k) {
  const double e = 2.0 - alpha;
  return std::pow(double(k), e) - std::pow(double(k) - 0.5, e);
}

}  // namespace

TimeGrid make_time_grid(double t_end, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("make_time_grid: h must be positive");
  }
  if (!(t_end >= h) || !std::isfinite(t_end)) {
    throw std::invalid_argument("make_time_grid: t_end must be >= h");
  }
  const double steps_real = t_end / h;
  const long long steps = std::llround(steps_real);
  if (std::abs(steps_real - double(steps)) > 1e-9 * steps_real) {
    throw std::invalid_argument(
        "make_time_grid: t_end must be an integer multiple of h");
  }
  TimeGrid grid;
  grid.h = h;
  grid.t.resize(std::size_t(steps) + 1);
  for (std::size_t k = 0; k < grid.t.size(); ++k) {
    grid.t[k] = double(k) * h;
  }
  return grid;
}

void validate_time_grid(const TimeGrid& grid) {
  if (grid.t.size() < 2) {
    throw std::invalid_argument("TimeGrid: need at least two nodes");
  }
  if (grid.t.front() != 0.0) {
    throw std::invalid_argument("TimeGrid: t[0] must be 0");
  }
  if (!(grid.h > 0.0) || !std::isfinite(grid.h)) {
    throw std::invalid_argument("TimeGrid: h must be positive");
  }
  const double tol = 1e-14 * (1.0 + std::abs(grid.t.back()));
  for (std::size_t j = 0; j + 1 < grid.t.size(); ++j) {
    if (std::abs(grid.t[j + 1] - grid.t[j] - grid.h) > tol) {
      throw std::invalid_argument("TimeGrid: spacing must be uniform");
    }
  }
}

// Discrete rule shared by caputo_derivative and caputo_stepper.  The second
// derivative on the staggered cell around t_j is the central difference
//   d2_j = u_{j+1} - 2 u_j + u_{j-1}            (units of h^2 u''),
// the leading half cell [0, t_{1/2}] uses the ghost slope u'(0),
//   d2_lead = 2 (u_1 - u_0 - h u'(0)),
// and the trailing cap [t_{k-1/2}, t_k] reuses the last interior stencil
// (one-sided, a local O(h) on an O(h^(2-alpha)) mass).  The raw rule
//   R_k[u] = h^(-alpha)/Gamma(3-alpha) * [ beta_0 (u_k - 2u_{k-1} + u_{k-2})
//            + sum_{i=1}^{k-1} beta_i d2_{k-i} + leading_mass(k) d2_lead ]
// is exact on quadratics; the starting-weight correction
//   (Gamma(alpha+1) - rho_k) * (u_1 - u_0 - h u'(0)) / h^alpha,
// with rho_k = R_k[t^alpha] (h-independent), extends exactness to t^alpha,
// the leading singular term of every Caputo eigenfunction at the origin.
namespace {

// rho_k = R_k[t^alpha] evaluated with h = 1 (the value is h-independent).
double raw_on_t_alpha(double alpha, std::size_t k,
                      const std::vector<double>& beta) {
  auto p = [&](std::size_t j) { return std::pow(double(j), alpha); };
  KahanSum<double> bracket;
  bracket.add(beta[0] * (p(k) - 2.0 * p(k - 1) + p(k - 2)));
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t j = k - i;
    bracket.add(beta[i] * (p(j + 1) - 2.0 * p(j) + p(j - 1)));
  }
  bracket.add(leading_mass(alpha, k) * 2.0);  // d2_lead of t^alpha is 1
  return bracket.sum / std::tgamma(3.0 - alpha);
}

}  // namespace

cplx caputo_derivative(const ScalarTrajectory& traj, double alpha,
                       std::size_t k) {
  check_alpha(alpha);
  validate_time_grid(traj.grid);
  if (traj.y.size() != traj.grid.t.size()) {
    throw std::invalid_argument(
        "caputo_derivative: trajectory/grid length mismatch");
  }
  if (k < 2) {
    throw std::invalid_argument("caputo_derivative: need k >= 2");
  }
  if (k >= traj.y.size()) {
    throw std::invalid_argument("caputo_derivative: k out of range");
  }
  const double h = traj.grid.h;
  const auto& y = traj.y;
  const auto beta = staggered_weights(alpha, k);

  KahanSum<cplx> bracket;
  bracket.add(beta[0] * (y[k] - 2.0 * y[k - 1] + y[k - 2]));
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t j = k - i;
    bracket.add(beta[i] * (y[j + 1] - 2.0 * y[j] + y[j - 1]));
  }
  const cplx ghost = y[1] - y[0] - h * traj.dy0;
  bracket.add(leading_mass(alpha, k) * 2.0 * ghost);

  const double g3 = std::tgamma(3.0 - alpha);
  const double h_alpha = std::pow(h, alpha);
  const cplx raw = bracket.sum / (h_alpha * g3);
  const double weight =
      std::tgamma(alpha + 1.0) - raw_on_t_alpha(alpha, k, beta);
  return raw + weight * ghost / h_alpha;
}

ScalarTrajectory caputo_stepper(cplx lambda,
                                const std::function<cplx(double)>& forcing,
                                const TimeGrid& grid, double alpha) {
  check_alpha(alpha);
  validate_time_grid(grid);
  if (!forcing) {
    throw std::invalid_argument("caputo_stepper: forcing must be callable");
  }
  const std::size_t n = grid.t.size();
  const double h = grid.h;
  const double g3 = std::tgamma(3.0 - alpha);
  const double h_alpha = std::pow(h, alpha);
  const double scale = 1.0 / (h_alpha * g3);
  if (lambda.real() < 0.0 && std::abs(lambda) * h_alpha * g3 >= 1.0) {
    throw std::domain_error(
        "caputo_stepper: step too large for Re(lambda) < 0; need "
        "|lambda| * Gamma(3-alpha) * h^alpha < 1");
  }

  const auto beta = staggered_weights(alpha, n);
  std::vector<double> p(n + 1);  // p[j] = j^alpha for the starting weights
  for (std::size_t j = 0; j <= n; ++j) {
    p[j] = std::pow(double(j), alpha);
  }
  const double gamma_a1 = std::tgamma(alpha + 1.0);

  ScalarTrajectory out;
  out.grid = grid;
  out.dy0 = cplx(0.0, 0.0);
  out.y.assign(n, cplx(0.0, 0.0));
  double forcing_scale = 1.0;

  // k = 1: the leading half cell and the trailing cap merge into the full
  // mass 1^(2-alpha); with the starting weight the update coefficient
  // collapses to Gamma(alpha+1)/h^alpha + lambda.
  {
    const cplx f1 = forcing(grid.t[1]);
    forcing_scale = std::max(forcing_scale, std::abs(f1));
    const cplx denom = gamma_a1 / h_alpha + lambda;
    if (std::abs(denom) < 1e-12 * scale) {
      throw std::domain_error(
          "caputo_stepper: singular update (lambda resonant with the step "
          "operator)");
    }
    out.y[1] = f1 / denom;
  }

  // The unknown y_k enters through the cap stencil and the i = 1 staggered
  // cell, which share the stencil y_k - 2y_{k-1} + y_{k-2}.
  const double lead = (beta[0] + beta[1]) * scale;
  for (std::size_t k = 2; k < n; ++k) {
    const cplx fk = forcing(grid.t[k]);
    forcing_scale = std::max(forcing_scale, std::abs(fk));

    KahanSum<cplx> hist;
    hist.add((beta[0] + beta[1]) * (-2.0 * out.y[k - 1] + out.y[k - 2]));
    KahanSum<double> rho;
    rho.add(beta[0] * (p[k] - 2.0 * p[k - 1] + p[k - 2]));
    rho.add(beta[1] * (p[k] - 2.0 * p[k - 1] + p[k - 2]));
    for (std::size_t i = 2; i < k; ++i) {
      const std::size_t j = k - i;
      hist.add(beta[i] *
               (out.y[j + 1] - 2.0 * out.y[j] + out.y[j - 1]));
      rho.add(beta[i] * (p[j + 1] - 2.0 * p[j] + p[j - 1]));
    }
    const double lm = leading_mass(alpha, k);
    hist.add(lm * 2.0 * out.y[1]);  // ghost term, y_0 = dy0 = 0
    rho.add(lm * 2.0);
    const double start_w = (gamma_a1 - rho.sum / g3) / h_alpha;

    const cplx rhs = fk - scale * hist.sum - start_w * out.y[1];
    const cplx denom = lead + lambda;
    if (std::abs(denom) < 1e-12 * lead) {
      throw std::domain_error(
          "caputo_stepper: singular update (lambda resonant with the step "
          "operator)");
    }
    out.y[k] = rhs / denom;
    if (std::abs(out.y[k]) >
        1e12 * forcing_scale * (1.0 + std::pow(grid.t[k], alpha))) {
      throw std::runtime_error(
          "caputo_stepper: instability detected (norm blow-up)");
    }
  }
  return out;
}

ComplexSample duhamel_solution(double lambda, const FracParams& params,
                               double t, double tol) {
  check_alpha(params.alpha);
  if (!(lambda >= 0.0)) {
    throw std::domain_error("duhamel_solution: lambda must be >= 0");
  }
  if (!(t >= 0.0)) {
    throw std::domain_error("duhamel_solution: t must be >= 0");
  }
  ComplexSample out;
  out.regime = Regime::quadrature;
  if (t == 0.0) {
    return out;
  }
  const double alpha = params.alpha;
  std::optional<MlNegRealTable> table;
  if (lambda > 0.0) {
    table.emplace(ml_neg_real_table(alpha, alpha));
  }
  const double inv_gamma_a = 1.0 / std::tgamma(alpha);

  double max_phi = 0.0;
  double max_phi_err = 0.0;
  auto integrand = [&](double tau) -> cplx {
    const ComplexSample phi = mittag_leffler_on_ray(params, tau, 1e-13);
    max_phi = std::max(max_phi, std::abs(phi.value));
    max_phi_err = std::max(max_phi_err, phi.abs_err);
    const double sigma = t - tau;
    double kernel = std::pow(sigma, alpha - 1.0);
    kernel *= lambda > 0.0 ? (*table)(lambda * std::pow(sigma, alpha))
                           : inv_gamma_a;
    return kernel * phi.value;
  };

  // The kernel derivative is singular at tau = t; panels graded towards that
  // endpoint keep each adaptive panel cheap.
  const auto bp = graded_breakpoints(0.0, t, 28, 0.5);
  const double panel_tol = 0.25 * tol / double(bp.size());
  KahanSum<cplx> value;
  double quad_err = 0.0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const QuadResult q =
        integrate(integrand, bp[i], bp[i + 1], panel_tol, 1e-11, 1500);
    value.add(q.value);
    quad_err += q.abs_err;
  }
  out.value = value.sum;
  const double weight_mass = std::pow(t, alpha) / alpha;  // integral of sigma^(alpha-1)
  const double table_err = lambda > 0.0 ? table->abs_err() : 0.0;
  out.abs_err = quad_err +
                weight_mass * (table_err * max_phi +
                               1.2 * inv_gamma_a * max_phi_err) +
                1e-15 * std::abs(out.value);
  return out;
}

ComplexSample closed_form_forced(double lambda, const FracParams& params,
                                 double t) {
  check_alpha(params.alpha);
  if (!(lambda >= 0.0)) {
    throw std::domain_error("closed_form_forced: lambda must be >= 0");
  }
  if (!(t >= 0.0)) {
    throw std::domain_error("closed_form_forced: t must be >= 0");
  }
  ComplexSample out;
  if (t == 0.0) {
    return out;
  }
  const double alpha = params.alpha;
  const double x = std::pow(t, alpha);
  const cplx fe = params.forcing_eig;
  const ComplexSample relax =
      mittag_leffler(alpha, alpha + 1.0, cplx(-lambda * x, 0.0));
  const ComplexSample drive = mittag_leffler(alpha, alpha + 1.0, fe * x);
  // Im(fe) = omega^alpha * sin(pi alpha / 2) > 0, so the denominator is
  // bounded away from zero for every real lambda >= 0.
  const cplx denom = lambda + fe;
  out.value = x * (lambda * relax.value + fe * drive.value) / denom;
  out.abs_err =
      x * (lambda * relax.abs_err + std::abs(fe) * drive.abs_err) /
          std::abs(denom) +
      4.4e-16 * std::abs(out.value);
  out.regime = drive.regime;
  return out;
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const ScalarTrajectory& traj) {
  validate_time_grid(traj.grid);
  if (traj.y.size() != traj.grid.t.size()) {
    throw std::invalid_argument(
        "write_trajectory_csv: trajectory/grid length mismatch");
  }
  std::vector<std::vector<std::string>> rows;
  rows.reserve(traj.y.size());
  for (std::size_t k = 0; k < traj.y.size(); ++k) {
    rows.push_back({format_double(traj.grid.t[k]),
                    format_double(traj.y[k].real()),
                    format_double(traj.y[k].imag())});
  }
  write_csv(path, {"t", "re", "im"}, rows);
}

}  // namespace fracwave
