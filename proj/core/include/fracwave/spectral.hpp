// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "fracwave/types.hpp"

namespace fracwave {

// ---------------------------------------------------------------------------
// Finite spectral decompositions of a nonnegative self-adjoint operator.
// ---------------------------------------------------------------------------

// Finitely many eigenpairs: eigenvalues lambda_k >= 0 together with the
// coordinates w_k of the driving profile in the eigenbasis.
struct FiniteSpectralOperator {
  std::vector<double> eigenvalues;
  std::vector<cplx> weights;
};

// Throws std::invalid_argument on length mismatch / empty lists or negative
// eigenvalues; with require_positive also rejects lambda_k = 0 (the
// limiting-amplitude statement needs 0 outside the spectrum).
void validate_spectral_operator(const FiniteSpectralOperator& op,
                                bool require_positive = false);

// Per-eigenvalue coefficients of the forced evolution started from rest:
// u_k(t) = closed_form_forced(lambda_k, params, t) * w_k; all zeros at t = 0.
std::vector<cplx> evolve_operator(const FiniteSpectralOperator& op,
                                  const FracParams& params, double t);

// Residual history of the limiting-amplitude principle: at each scheduled t,
// residual = l2-norm over k of [u_k(t)/phi_omega(t) - w_k/(lambda_k + fe)],
// fe = i^alpha omega^alpha.  Requires lambda_k > 0.
struct AmplitudePoint {
  double t = 0.0;
  double residual = 0.0;
};
struct AmplitudeReport {
  std::vector<AmplitudePoint> points;
  // Strict decrease over the trailing half of the schedule.
  bool tail_monotone = false;
};
AmplitudeReport limiting_amplitude_operator(const FiniteSpectralOperator& op,
                                            const FracParams& params,
                                            const std::vector<double>& t_schedule);

// Geometric default schedule t_j = 2^j, j = 0..11 (log-log slope fits need
// decades).
std::vector<double> default_t_schedule();

// ---------------------------------------------------------------------------
// Periodic lattice fields evolved mode-by-mode.
// ---------------------------------------------------------------------------

// Complex field sampled on a periodic lattice with uniform spacing.  values
// is row-major over shape; modes caches the unnormalized forward DFT and is
// kept consistent with values (round-trip error below 1e-10 relative) by
// every operation here.
struct LatticeField {
  std::vector<int> shape;  // one entry per axis, dim = shape.size() in {1,2,3}
  double spacing = 1.0;
  std::vector<cplx> values;
  std::vector<cplx> modes;
};

// Zero field of the given shape; throws std::invalid_argument for dim
// outside {1,2,3}, axis sizes < 1, or spacing <= 0.
LatticeField make_lattice_field(std::vector<int> shape, double spacing);

// Structural checks (shape/sizes/spacing); does not recompute transforms.
void validate_lattice_field(const LatticeField& field);

// Recompute the cached modes from values (forward DFT) or vice versa
// (inverse DFT with 1/N normalization).
void sync_modes_from_values(LatticeField& field);
void sync_values_from_modes(LatticeField& field);

// |xi|^2 for every lattice mode in DFT index order: the exact continuum
// Laplacian multiplier sampled at frequencies 2*pi*s/(n*spacing) with signed
// integer s, not a finite-difference symbol.
std::vector<double> laplace_symbols(const std::vector<int>& shape,
                                    double spacing);

// Mean of the field values (zero-mode coefficient / N).
cplx lattice_mean(const LatticeField& field);

// Evolution of D_t^alpha u = Laplacian u (+ forcing) from u(0) = u0,
// u_t(0) = u1, mode by mode:
//   u_hat(t,xi) = E_alpha(-|xi|^2 t^alpha) u0_hat
//                 + t E_{alpha,2}(-|xi|^2 t^alpha) u1_hat
//                 + closed_form_forced(|xi|^2, params, t) F_hat,
// where the forcing is F(x) * phi_omega(t) started from rest.  The zero mode
// uses the exact symbols 1 and t, so with u1 = F = 0 the lattice mean of u0
// is preserved exactly.  forcing may be nullptr.
LatticeField evolve_field(const LatticeField& u0, const LatticeField& u1,
                          const LatticeField* forcing,
                          const FracParams& params, double t);

// Fourier symbol t * E_{alpha,2}(-lam * t^alpha) of the kernel propagating
// the initial slope; equals t at lam = 0 and 0 at t = 0.
cplx z2_symbol(const FracParams& params, double lam, double t);

// Snapshot export: CSV "index,re,im" over the flattened field, and JSON
// metadata {shape, spacing, t}.
void write_field_csv(const std::filesystem::path& path,
                     const LatticeField& field);
void write_field_meta_json(const std::filesystem::path& path,
                           const LatticeField& field, double t);

}  // namespace fracwave
