// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include "fracwave/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracwave/fracode.hpp"
#include "fracwave/gamma_utils.hpp"
#include "fracwave/io_util.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/specfun.hpp"

namespace fracwave {
namespace {

constexpr double kPi = std::numbers::pi;

// FFTW plan creation/destruction is not thread-safe; execution of distinct
// plans is.
std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

void dft(const std::vector<int>& shape, const std::vector<cplx>& in,
         std::vector<cplx>& out, int sign) {
  out.resize(in.size());
  std::vector<int> dims(shape.begin(), shape.end());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    // FFTW_ESTIMATE planning does not touch the arrays, so the const_cast is
    // safe: execution only reads `in`.
    plan = fftw_plan_dft(
        int(dims.size()), dims.data(),
        reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
        reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) {
    throw std::runtime_error("spectral: FFTW plan creation failed");
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_destroy_plan(plan);
  }
}

std::size_t checked_size(const std::vector<int>& shape) {
  if (shape.empty() || shape.size() > 3) {
    throw std::invalid_argument("LatticeField: dim must be 1, 2 or 3");
  }
  std::size_t n = 1;
  for (int s : shape) {
    if (s < 1) {
      throw std::invalid_argument("LatticeField: axis sizes must be >= 1");
    }
    n *= std::size_t(s);
    if (n > (std::size_t(1) << 31)) {
      throw std::invalid_argument("LatticeField: lattice too large");
    }
  }
  return n;
}

void check_same_layout(const LatticeField& a, const LatticeField& b,
                       const char* what) {
  if (a.shape != b.shape || a.spacing != b.spacing) {
    throw std::invalid_argument(std::string("evolve_field: ") + what +
                                " does not match u0 shape/spacing");
  }
}

}  // namespace

void validate_spectral_operator(const FiniteSpectralOperator& op,
                                bool require_positive) {
  if (op.eigenvalues.empty() ||
      op.eigenvalues.size() != op.weights.size()) {
    throw std::invalid_argument(
        "FiniteSpectralOperator: eigenvalues and weights must have equal "
        "nonzero length");
  }
  for (double lam : op.eigenvalues) {
    if (!(lam >= 0.0) || !std::isfinite(lam)) {
      throw std::invalid_argument(
          "FiniteSpectralOperator: eigenvalues must be finite and >= 0");
    }
    if (require_positive && lam == 0.0) {
      throw std::invalid_argument(
          "FiniteSpectralOperator: eigenvalue 0 not allowed here (0 must lie "
          "outside the spectrum)");
    }
  }
}

std::vector<cplx> evolve_operator(const FiniteSpectralOperator& op,
                                  const FracParams& params, double t) {
  validate_spectral_operator(op);
  if (!(t >= 0.0)) {
    throw std::domain_error("evolve_operator: t must be >= 0");
  }
  std::vector<cplx> out(op.eigenvalues.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = closed_form_forced(op.eigenvalues[k], params, t).value *
             op.weights[k];
  }
  return out;
}

std::vector<double> default_t_schedule() {
  std::vector<double> t(12);
  double v = 1.0;
  for (double& x : t) {
    x = v;
    v *= 2.0;
  }
  return t;
}

AmplitudeReport limiting_amplitude_operator(
    const FiniteSpectralOperator& op, const FracParams& params,
    const std::vector<double>& t_schedule) {
  validate_spectral_operator(op, /*require_positive=*/true);
  if (t_schedule.empty()) {
    throw std::invalid_argument(
        "limiting_amplitude_operator: empty t schedule");
  }
  for (std::size_t i = 0; i < t_schedule.size(); ++i) {
    if (!(t_schedule[i] > 0.0) ||
        (i > 0 && t_schedule[i] <= t_schedule[i - 1])) {
      throw std::invalid_argument(
          "limiting_amplitude_operator: t schedule must be positive and "
          "strictly increasing");
    }
  }

  std::vector<cplx> target(op.eigenvalues.size());
  for (std::size_t k = 0; k < target.size(); ++k) {
    target[k] = op.weights[k] / (op.eigenvalues[k] + params.forcing_eig);
  }

  AmplitudeReport report;
  report.points.resize(t_schedule.size());
  for (std::size_t i = 0; i < t_schedule.size(); ++i) {
    const double t = t_schedule[i];
    const cplx phi = mittag_leffler_on_ray(params, t).value;
    const auto coef = evolve_operator(op, params, t);
    KahanSum<double> sq;
    for (std::size_t k = 0; k < coef.size(); ++k) {
      sq.add(std::norm(coef[k] / phi - target[k]));
    }
    report.points[i] = {t, std::sqrt(sq.sum)};
  }

  report.tail_monotone = true;
  for (std::size_t i = report.points.size() / 2;
       i + 1 < report.points.size(); ++i) {
    if (!(report.points[i + 1].residual < report.points[i].residual)) {
      report.tail_monotone = false;
      break;
    }
  }
  return report;
}

LatticeField make_lattice_field(std::vector<int> shape, double spacing) {
  const std::size_t n = checked_size(shape);
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw std::invalid_argument("LatticeField: spacing must be positive");
  }
  LatticeField field;
  field.shape = std::move(shape);
  field.spacing = spacing;
  field.values.assign(n, cplx(0.0, 0.0));
  field.modes.assign(n, cplx(0.0, 0.0));
  return field;
}

void validate_lattice_field(const LatticeField& field) {
  const std::size_t n = checked_size(field.shape);
  if (!(field.spacing > 0.0) || !std::isfinite(field.spacing)) {
    throw std::invalid_argument("LatticeField: spacing must be positive");
  }
  if (field.values.size() != n) {
    throw std::invalid_argument(
        "LatticeField: values size does not match shape");
  }
  if (!field.modes.empty() && field.modes.size() != n) {
    throw std::invalid_argument(
        "LatticeField: modes size does not match shape");
  }
}

void sync_modes_from_values(LatticeField& field) {
  validate_lattice_field(field);
  dft(field.shape, field.values, field.modes, FFTW_FORWARD);
}

void sync_values_from_modes(LatticeField& field) {
  validate_lattice_field(field);
  if (field.modes.size() != field.values.size()) {
    throw std::invalid_argument("LatticeField: modes not populated");
  }
  dft(field.shape, field.modes, field.values, FFTW_BACKWARD);
  const double inv_n = 1.0 / double(field.values.size());
  for (cplx& v : field.values) {
    v *= inv_n;
  }
}

std::vector<double> laplace_symbols(const std::vector<int>& shape,
                                    double spacing) {
  const std::size_t n = checked_size(shape);
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("laplace_symbols: spacing must be positive");
  }
  // Squared frequency per axis index: (2 pi s / (len * spacing))^2 with the
  // signed integer s of the DFT bin.
  std::vector<std::vector<double>> axis(shape.size());
  for (std::size_t a = 0; a < shape.size(); ++a) {
    const int len = shape[a];
    axis[a].resize(std::size_t(len));
    for (int m = 0; m < len; ++m) {
      const int s = (m <= len / 2) ? m : m - len;
      const double xi = 2.0 * kPi * double(s) / (double(len) * spacing);
      axis[a][std::size_t(m)] = xi * xi;
    }
  }
  std::vector<double> sym(n);
  for (std::size_t flat = 0; flat < n; ++flat) {
    std::size_t rest = flat;
    double sum = 0.0;
    for (std::size_t a = shape.size(); a-- > 0;) {
      const std::size_t len = std::size_t(shape[a]);
      sum += axis[a][rest % len];
      rest /= len;
    }
    sym[flat] = sum;
  }
  return sym;
}

cplx lattice_mean(const LatticeField& field) {
  validate_lattice_field(field);
  KahanSum<cplx> sum;
  for (const cplx& v : field.values) {
    sum.add(v);
  }
  return sum.sum / double(field.values.size());
}

LatticeField evolve_field(const LatticeField& u0, const LatticeField& u1,
                          const LatticeField* forcing,
                          const FracParams& params, double t) {
  validate_lattice_field(u0);
  validate_lattice_field(u1);
  check_same_layout(u0, u1, "u1");
  if (forcing != nullptr) {
    validate_lattice_field(*forcing);
    check_same_layout(u0, *forcing, "forcing");
  }
  if (!(t >= 0.0)) {
    throw std::domain_error("evolve_field: t must be >= 0");
  }

  LatticeField out;
  out.shape = u0.shape;
  out.spacing = u0.spacing;
  if (t == 0.0) {
    out.values = u0.values;
    sync_modes_from_values(out);
    return out;
  }

  // Exactly-zero inputs contribute exactly zero modes; skipping their
  // transforms changes nothing numerically but saves full-lattice DFTs in
  // the common "no initial slope" runs.
  const auto all_zero = [](const std::vector<cplx>& v) {
    for (const cplx& z : v) {
      if (z != cplx(0.0, 0.0)) {
        return false;
      }
    }
    return true;
  };

  std::vector<cplx> m0;
  std::vector<cplx> m1;
  std::vector<cplx> mf;
  dft(u0.shape, u0.values, m0, FFTW_FORWARD);
  const bool has_u1 = !all_zero(u1.values);
  if (has_u1) {
    dft(u1.shape, u1.values, m1, FFTW_FORWARD);
  }
  if (forcing != nullptr) {
    dft(forcing->shape, forcing->values, mf, FFTW_FORWARD);
  }

  const double alpha = params.alpha;
  const double x = std::pow(t, alpha);
  const cplx fe = params.forcing_eig;
  const auto tab_e1 = ml_neg_real_table(alpha, 1.0);
  const auto tab_e2 = ml_neg_real_table(alpha, 2.0);
  const auto tab_forced = ml_neg_real_table(alpha, alpha + 1.0);
  // The driving Mittag-Leffler factor of the forced term is mode-independent.
  const cplx drive = mittag_leffler(alpha, alpha + 1.0, fe * x).value;

  const auto sym = laplace_symbols(u0.shape, u0.spacing);
  out.modes.assign(m0.size(), cplx(0.0, 0.0));
  const bool has_f = forcing != nullptr;
  parallel_for(int(m0.size()), [&](int i) {
    const double lam = sym[std::size_t(i)];
    cplx c0;
    cplx c1;
    cplx cf;
    if (lam == 0.0) {
      c0 = cplx(1.0, 0.0);  // exact: preserves the lattice mean
      c1 = cplx(t, 0.0);
      cf = x * drive;
    } else {
      const double u = lam * x;
      c0 = cplx(tab_e1(u), 0.0);
      c1 = cplx(t * tab_e2(u), 0.0);
      cf = x * (lam * tab_forced(u) + fe * drive) / (lam + fe);
    }
    cplx acc = c0 * m0[std::size_t(i)];
    if (has_u1) {
      acc += c1 * m1[std::size_t(i)];
    }
    if (has_f) {
      acc += cf * mf[std::size_t(i)];
    }
    out.modes[std::size_t(i)] = acc;
  });

  out.values.assign(out.modes.size(), cplx(0.0, 0.0));
  sync_values_from_modes(out);
  return out;
}

cplx z2_symbol(const FracParams& params, double lam, double t) {
  if (!(params.alpha > 1.0 && params.alpha < 2.0)) {
    throw std::domain_error("z2_symbol: alpha must lie in (1,2)");
  }
  if (!(lam >= 0.0)) {
    throw std::domain_error("z2_symbol: lam must be >= 0");
  }
  if (!(t >= 0.0)) {
    throw std::domain_error("z2_symbol: t must be >= 0");
  }
  if (t == 0.0) {
    return cplx(0.0, 0.0);
  }
  if (lam == 0.0) {
    return cplx(t, 0.0);
  }
  const double u = lam * std::pow(t, params.alpha);
  return t * mittag_leffler(params.alpha, 2.0, cplx(-u, 0.0)).value;
}

void write_field_csv(const std::filesystem::path& path,
                     const LatticeField& field) {
  validate_lattice_field(field);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(field.values.size());
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    rows.push_back({std::to_string(i), format_double(field.values[i].real()),
                    format_double(field.values[i].imag())});
  }
  write_csv(path, {"index", "re", "im"}, rows);
}

void write_field_meta_json(const std::filesystem::path& path,
                           const LatticeField& field, double t) {
  validate_lattice_field(field);
  nlohmann::json meta;
  meta["shape"] = field.shape;
  meta["spacing"] = field.spacing;
  meta["t"] = t;
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_field_meta_json: cannot open " +
                             path.string());
  }
  out << meta.dump(2) << "\n";
  if (!out) {
    throw std::runtime_error("write_field_meta_json: write failed for " +
                             path.string());
  }
}

}  // namespace fracwave
