// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include "fracwave/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "fracwave/experiments.hpp"
#include "fracwave/io_util.hpp"
#include "fracwave/kernels.hpp"
#include "fracwave/specfun.hpp"
#include "fracwave/spectral.hpp"

namespace fracwave {

namespace {

using json = nlohmann::ordered_json;

// Signals a violated experiment invariant (tolerance breach, sentinel trip).
struct InvariantError {
  std::string invariant;
  std::string message;
};

std::string fmt(double v) { return format_double(v); }

struct Context {
  const ExperimentConfig& config;
  std::filesystem::path dir;
  std::vector<RunArtifact> artifacts;
  json details = json::object();

  void emit_csv(const std::string& name,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    const auto path = dir / name;
    write_csv(path, header, rows);
    artifacts.push_back(RunArtifact{name, sha256_hex_of_file(path),
                                    rows.size()});
  }
};

// ---------------------------------------------------------------------------
// Per-experiment drivers
// ---------------------------------------------------------------------------

void run_limiting_amplitude_operator(Context& ctx) {
  const auto& config = ctx.config;
  const auto params = make_frac_params(config.alpha, config.omega);
  FiniteSpectralOperator op;
  op.eigenvalues = config.spectral_operator.eigenvalues;
  op.weights = config.spectral_operator.weights;
  const auto schedule = expand_schedule(config.schedule);
  const auto report = limiting_amplitude_operator(op, params, schedule);

  std::vector<std::vector<std::string>> rows;
  for (const auto& p : report.points) {
    rows.push_back({fmt(p.t), fmt(p.residual)});
  }
  ctx.emit_csv("residuals.csv", {"t", "residual"}, rows);
  ctx.details["tail_monotone"] = report.tail_monotone;
  ctx.details["first_residual"] = report.points.front().residual;
  ctx.details["final_residual"] = report.points.back().residual;

  if (!report.tail_monotone) {
    throw InvariantError{"residual_tail_monotone",
                         "residuals do not decrease over the trailing half "
                         "of the schedule"};
  }
  const double final_tol = tolerance_or(config, "residual_final", 1e-2);
  if (!(report.points.back().residual < final_tol) ||
      !(report.points.back().residual < report.points.front().residual)) {
    throw InvariantError{
        "residual_final_bound",
        "final residual " + fmt(report.points.back().residual) +
            " is not below " + fmt(final_tol) +
            " and the first residual " + fmt(report.points.front().residual)};
  }
}

void run_limiting_amplitude_r3(Context& ctx) {
  const auto& config = ctx.config;
  const auto params = make_frac_params(config.alpha, config.omega);
  const auto schedule = expand_schedule(config.schedule);

  const CompactSource* forcing = nullptr;
  const CompactSource* u0 = nullptr;
  const CompactSource* u1 = nullptr;
  for (const auto& spec : config.sources) {
    if (spec.role == "forcing") {
      forcing = &spec.source;
    } else if (spec.role == "u0") {
      u0 = &spec.source;
    } else if (spec.role == "u1") {
      u1 = &spec.source;
    }
  }

  std::vector<std::vector<std::string>> rows;
  const double ratio_rel = tolerance_or(config, "ratio_rel", 5e-2);
  for (std::size_t pi = 0; pi < config.probes.size(); ++pi) {
    const auto& x = config.probes[pi];
    const auto points =
        limiting_amplitude_r3(forcing, u0, u1, params, x, schedule);
    for (const auto& p : points) {
      rows.push_back({std::to_string(pi), fmt(p.t), fmt(p.ratio.real()),
                      fmt(p.ratio.imag()), fmt(p.target.real()),
                      fmt(p.target.imag()), fmt(std::abs(p.ratio - p.target)),
                      fmt(p.abs_err)});
    }
    const std::size_t tail = std::min<std::size_t>(4, points.size());
    if (forcing != nullptr) {
      const double target_abs = std::abs(points.back().target);
      const double final_gap =
          std::abs(points.back().ratio - points.back().target);
      if (!(final_gap <= ratio_rel * target_abs)) {
        throw InvariantError{
            "ratio_within_tolerance",
            "probe " + std::to_string(pi) + ": final |ratio - target| " +
                fmt(final_gap) + " exceeds " + fmt(ratio_rel) +
                " * |target| = " + fmt(ratio_rel * target_abs)};
      }
      for (std::size_t i = points.size() - tail; i + 1 < points.size(); ++i) {
        const double a = std::abs(points[i].ratio - points[i].target);
        const double b = std::abs(points[i + 1].ratio - points[i + 1].target);
        if (!(b < a)) {
          throw InvariantError{
              "ratio_error_decreasing",
              "probe " + std::to_string(pi) +
                  ": |ratio - target| does not decrease between t = " +
                  fmt(points[i].t) + " and t = " + fmt(points[i + 1].t)};
        }
      }
    } else {
      if (!(std::abs(points.back().ratio) < std::abs(points.front().ratio))) {
        throw InvariantError{
            "homogeneous_ratio_decay",
            "probe " + std::to_string(pi) +
                ": |u/phi| did not decay over the schedule"};
      }
    }
  }
  ctx.emit_csv("ratios.csv",
               {"probe", "t", "ratio_re", "ratio_im", "target_re",
                "target_im", "gap", "abs_err"},
               rows);
}

void run_stabilization(Context& ctx) {
  const auto& config = ctx.config;
  const auto params = make_frac_params(config.alpha, config.omega);
  const auto schedule = expand_schedule(config.schedule);

  StabilizationData data;
  data.offset = config.stabilization.offset;
  data.modes = config.stabilization.modes;
  for (const auto& spec : config.sources) {
    data.bumps.push_back(spec.source);
  }

  const auto result = stabilization_run(
      data, params, config.probes, schedule,
      config.stabilization.domain_length,
      config.stabilization.points_per_axis);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < result.t.size(); ++i) {
    for (std::size_t p = 0; p < result.probes.size(); ++p) {
      const cplx v = result.values[i][p];
      rows.push_back({fmt(result.t[i]), std::to_string(p),
                      fmt(result.probes[p][0]), fmt(result.probes[p][1]),
                      fmt(result.probes[p][2]), fmt(v.real()), fmt(v.imag()),
                      fmt(std::abs(v - result.lattice_mean))});
    }
  }
  ctx.emit_csv("stabilization.csv",
               {"t", "probe", "x", "y", "z", "re", "im", "deviation"}, rows);
  ctx.details["domain_length"] = result.domain_length;
  ctx.details["points_per_axis"] = result.points_per_axis;
  ctx.details["lattice_mean"] =
      json::array({result.lattice_mean.real(), result.lattice_mean.imag()});
}

void run_subordination_check(Context& ctx) {
  const auto& config = ctx.config;
  const double alpha = config.alpha;
  const double lam = config.subordination.lambda;
  const auto schedule = expand_schedule(config.schedule);
  const double tol = tolerance_or(config, "subordination_abs", 1e-4);

  const auto traj = [&](double s) {
    return mittag_leffler(alpha, 1.0, -lam * std::pow(s, alpha)).value;
  };

  std::vector<std::vector<std::string>> rows;
  double worst = 0.0;
  for (double t : schedule) {
    const double span =
        30.0 * std::pow(t, alpha) + 20.0 * std::pow(t, 1.0 / alpha) + 20.0;
    const auto value = subordination_transform(traj, alpha, t, span);
    const double heat = std::exp(-lam * t);
    const double diff = std::abs(value.value - heat);
    worst = std::max(worst, diff);
    rows.push_back({fmt(t), fmt(value.value.real()), fmt(value.value.imag()),
                    fmt(heat), fmt(diff)});
  }
  ctx.emit_csv("subordination.csv",
               {"t", "value_re", "value_im", "heat", "abs_diff"}, rows);
  ctx.details["worst_abs_diff"] = worst;
  if (!(worst <= tol)) {
    throw InvariantError{
        "subordination_heat_match",
        "worst |subordinated - heat| " + fmt(worst) + " exceeds " + fmt(tol)};
  }
}

void run_kernel_validation(Context& ctx) {
  const auto& config = ctx.config;
  const auto params = make_frac_params(config.alpha, config.omega);
  const auto& spec = config.kernel;
  const auto table =
      tabulate_kernel(spec.kind, params, spec.dim, spec.t, spec.radii, 1e-10);

  // Envelope variables: w = y^{2/(2-alpha)} with y the self-similar radius,
  // logratio = log(|value| / algebraic envelope factor).
  const double p = 2.0 / (2.0 - config.alpha);
  std::vector<double> w_all(table.radii.size());
  std::vector<double> lr_all(table.radii.size());
  for (std::size_t i = 0; i < table.radii.size(); ++i) {
    const double r = table.radii[i];
    const double y = r * std::pow(spec.t, -config.alpha / 2.0);
    const double v = std::abs(table.values[i]);
    w_all[i] = std::pow(y, p);
    if (spec.kind == KernelKind::y_forcing) {
      lr_all[i] = std::log(v) -
                  (config.alpha - config.alpha * spec.dim / 2.0 - 1.0) *
                      std::log(spec.t) -
                  std::log(mu_n(spec.dim, y));
    } else {
      lr_all[i] = std::log(v) + config.alpha * std::log(spec.t) +
                  (spec.dim - 2) * std::log(r);
    }
  }

  // Post-peak samples split into interleaved calibration/validation grids.
  std::size_t peak = 0;
  for (std::size_t i = 1; i < lr_all.size(); ++i) {
    if (std::isfinite(lr_all[i]) &&
        (!std::isfinite(lr_all[peak]) || lr_all[i] > lr_all[peak])) {
      peak = i;
    }
  }
  std::vector<double> w_cal, lr_cal, w_val, lr_val;
  for (std::size_t i = peak; i < w_all.size(); ++i) {
    if (!std::isfinite(lr_all[i])) {
      continue;
    }
    if ((i - peak) % 2 == 0) {
      w_cal.push_back(w_all[i]);
      lr_cal.push_back(lr_all[i]);
    } else {
      w_val.push_back(w_all[i]);
      lr_val.push_back(lr_all[i]);
    }
  }
  if (w_cal.size() < 4 || w_val.empty()) {
    throw InvariantError{"bound_sample_count",
                         "too few finite post-peak samples to calibrate "
                         "(need 4+) and validate (need 1+)"};
  }

  BoundParams bound;
  try {
    bound = fit_stretched_bound(w_cal, lr_cal);
  } catch (const std::runtime_error& err) {
    throw InvariantError{"bound_fit_decay", err.what()};
  }

  std::vector<std::vector<std::string>> rows;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < w_val.size(); ++i) {
    const bool ok = satisfies_stretched_bound(bound, w_val[i], lr_val[i]);
    violations += ok ? 0 : 1;
    rows.push_back({fmt(w_val[i]), fmt(lr_val[i]), ok ? "1" : "0"});
  }
  ctx.emit_csv("bound_validation.csv", {"w", "logratio", "within_bound"},
               rows);

  std::vector<std::vector<std::string>> krows;
  for (std::size_t i = 0; i < table.radii.size(); ++i) {
    krows.push_back({fmt(table.radii[i]), fmt(table.values[i].real()),
                     fmt(table.values[i].imag()), fmt(table.abs_errs[i])});
  }
  ctx.emit_csv("kernel.csv", {"r", "re", "im", "abs_err"}, krows);
  ctx.details["C"] = bound.C;
  ctx.details["sigma"] = bound.sigma;
  ctx.details["violations"] = violations;

  if (violations != 0) {
    throw InvariantError{
        "stretched_bound_holds",
        std::to_string(violations) +
            " validation sample(s) violate the calibrated envelope"};
  }
}

void run_specfun_eval(Context& ctx) {
  const auto& spec = ctx.config.specfun;
  const auto sample = eval_specfun(spec.function, spec.args);
  std::vector<std::vector<std::string>> rows{
      {spec.function, fmt(sample.value.real()), fmt(sample.value.imag()),
       fmt(sample.abs_err), std::string(regime_name(sample.regime))}};
  ctx.emit_csv("specfun.csv",
               {"function", "value_re", "value_im", "abs_err", "regime"},
               rows);
  ctx.details["value"] =
      json::array({sample.value.real(), sample.value.imag()});
  ctx.details["abs_err"] = sample.abs_err;
  ctx.details["regime"] = std::string(regime_name(sample.regime));
}

void write_manifest(Context& ctx, RunReport& report) {
  json manifest;
  manifest["schema_version"] = 1;
  manifest["experiment"] =
      std::string(experiment_name(ctx.config.experiment));
  manifest["timestamp_utc"] = iso8601_utc_now();
  const std::string canonical = serialize_config(ctx.config);
  manifest["config_sha256"] = sha256_hex(canonical);
  manifest["config"] = json::parse(canonical);
  manifest["status"] = report.status;
  json outputs = json::array();
  for (const auto& artifact : ctx.artifacts) {
    outputs.push_back({{"file", artifact.file},
                       {"sha256", artifact.sha256},
                       {"rows", artifact.rows}});
  }
  manifest["outputs"] = outputs;
  manifest["details"] = ctx.details;

  const auto path = ctx.dir / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string());
  }
  out << manifest.dump(2) << "\n";
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
  report.manifest_file = "manifest.json";
}

void write_error_report(const std::filesystem::path& dir,
                        const RunReport& report) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(dir / "error_report.json",
                    std::ios::binary | std::ios::trunc);
  if (out) {
    out << report_json(report);
  }
}

}  // namespace

std::string report_json(const RunReport& report) {
  json j;
  j["status"] = report.status;
  j["exit_code"] = report.exit_code;
  if (!report.field_path.empty()) {
    j["field_path"] = report.field_path;
  }
  if (!report.invariant.empty()) {
    j["invariant"] = report.invariant;
  }
  if (!report.message.empty()) {
    j["message"] = report.message;
  }
  return j.dump(2) + "\n";
}

RunReport validate_only(const ExperimentConfig& config) {
  RunReport report;
  try {
    validate_config(config);
  } catch (const ConfigError& err) {
    report.exit_code = 2;
    report.status = "config_error";
    report.field_path = err.field_path();
    report.message = err.what();
  }
  return report;
}

ComplexSample eval_specfun(const std::string& function,
                           const std::vector<double>& args) {
  const auto need = [&](std::size_t lo, std::size_t hi,
                        const char* usage) {
    if (args.size() < lo || args.size() > hi) {
      throw ConfigError("specfun.args",
                        std::string("expected arguments: ") + usage);
    }
  };
  if (function == "mittag_leffler") {
    need(3, 4, "alpha beta re [im]");
    return mittag_leffler(args[0], args[1],
                          cplx(args[2], args.size() > 3 ? args[3] : 0.0));
  }
  if (function == "macdonald_k") {
    need(2, 3, "nu re [im]");
    return macdonald_k(args[0],
                       cplx(args[1], args.size() > 2 ? args[2] : 0.0));
  }
  if (function == "wright_density") {
    need(2, 2, "alpha x");
    return wright_density(args[0], args[1]);
  }
  if (function == "wright_phi") {
    need(3, 4, "rho delta re [im]");
    return wright_phi(args[0], args[1],
                      cplx(args[2], args.size() > 3 ? args[3] : 0.0));
  }
  if (function == "phi_omega") {
    need(3, 3, "alpha omega t");
    return mittag_leffler_on_ray(make_frac_params(args[0], args[1]), args[2]);
  }
  throw ConfigError("specfun.function",
                    "unknown function \"" + function +
                        "\" (expected mittag_leffler, macdonald_k, "
                        "wright_density, wright_phi, or phi_omega)");
}

RunReport run_experiment(const ExperimentConfig& config) {
  RunReport report = validate_only(config);
  const std::filesystem::path dir(config.output_dir);
  if (report.exit_code != 0) {
    write_error_report(dir, report);
    return report;
  }

  Context ctx{config, dir, {}, json::object()};
  try {
    std::filesystem::create_directories(dir);
    switch (config.experiment) {
      case ExperimentKind::limiting_amplitude_operator:
        run_limiting_amplitude_operator(ctx);
        break;
      case ExperimentKind::limiting_amplitude_r3:
        run_limiting_amplitude_r3(ctx);
        break;
      case ExperimentKind::stabilization:
        run_stabilization(ctx);
        break;
      case ExperimentKind::subordination_check:
        run_subordination_check(ctx);
        break;
      case ExperimentKind::kernel_validation:
        run_kernel_validation(ctx);
        break;
      case ExperimentKind::specfun_eval:
        run_specfun_eval(ctx);
        break;
    }
    report.artifacts = ctx.artifacts;
    write_manifest(ctx, report);
  } catch (const InvariantError& err) {
    report.exit_code = 3;
    report.status = "experiment_error";
    report.invariant = err.invariant;
    report.message = err.message;
    report.artifacts = ctx.artifacts;
    write_error_report(dir, report);
  } catch (const ConfigError& err) {
    report.exit_code = 2;
    report.status = "config_error";
    report.field_path = err.field_path();
    report.message = err.what();
    write_error_report(dir, report);
  } catch (const std::exception& err) {
    report.exit_code = 3;
    report.status = "experiment_error";
    report.invariant = "module_precondition";
    report.message = err.what();
    report.artifacts = ctx.artifacts;
    write_error_report(dir, report);
  }
  return report;
}

}  // namespace fracwave
