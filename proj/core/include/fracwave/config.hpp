// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fracwave/experiments.hpp"
#include "fracwave/kernels.hpp"
#include "fracwave/types.hpp"

namespace fracwave {

// ---------------------------------------------------------------------------
// Experiment configuration: a JSON document (schema_version 1) describing one
// reproducible experiment run.  Parsing and validation report errors with the
// offending field path; serialization is canonical (fixed key order, shortest
// round-trip numbers), so parse(serialize(c)) reproduces c exactly.
// ---------------------------------------------------------------------------

enum class ExperimentKind {
  limiting_amplitude_operator,
  limiting_amplitude_r3,
  stabilization,
  subordination_check,
  kernel_validation,
  specfun_eval,
};

std::string_view experiment_name(ExperimentKind kind);

// Error carrying the JSON field path it refers to ("params.alpha", ...).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field_path, const std::string& message)
      : std::runtime_error(field_path + ": " + message),
        field_path_(std::move(field_path)) {}
  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

// Geometric time schedule t_j = t0 * factor^j, j = 0..count-1.
struct ScheduleSpec {
  double t0 = 1.0;
  double factor = 2.0;
  int count = 8;
};

std::vector<double> expand_schedule(const ScheduleSpec& schedule);

// A spatial source tagged with its role in the experiment: "forcing", "u0"
// (initial value), or "u1" (initial slope).
struct SourceSpec {
  std::string role = "forcing";
  CompactSource source;
};

struct OperatorSpec {
  std::vector<double> eigenvalues;
  std::vector<cplx> weights;
};

struct StabilizationSpec {
  double offset = 0.0;
  std::vector<StabilizationData::PlaneMode> modes;
  double domain_length = 0.0;  // 0 = size automatically
  int points_per_axis = 0;     // 0 = size automatically
};

struct SubordinationSpec {
  double lambda = 1.0;  // single Fourier mode |xi0|^2
};

struct KernelSpec {
  KernelKind kind = KernelKind::z1;
  int dim = 3;
  double t = 1.0;
  std::vector<double> radii;
};

struct SpecfunSpec {
  std::string function = "mittag_leffler";
  std::vector<double> args;
};

struct ExperimentConfig {
  int schema_version = 1;
  ExperimentKind experiment = ExperimentKind::limiting_amplitude_operator;
  double alpha = 1.5;
  double omega = 1.0;
  ScheduleSpec schedule;
  std::vector<SourceSpec> sources;
  std::vector<Point3> probes;
  OperatorSpec spectral_operator;
  StabilizationSpec stabilization;
  SubordinationSpec subordination;
  KernelSpec kernel;
  SpecfunSpec specfun;
  std::map<std::string, double> tolerances;  // validated named overrides
  std::uint64_t seed = 20260814ull;
  std::string output_dir = "out";
};

// Named tolerance with per-experiment default when the config does not
// override it.
double tolerance_or(const ExperimentConfig& config, const std::string& name,
                    double fallback);

// Parses a JSON document; throws ConfigError (with field path) on malformed
// JSON, wrong types, or unknown keys.
ExperimentConfig parse_config(const std::string& json_text);

// Canonical JSON serialization (2-space indent, fixed key order).
std::string serialize_config(const ExperimentConfig& config);

// Cross-field/range validation per the target experiment; throws ConfigError.
void validate_config(const ExperimentConfig& config);

}  // namespace fracwave
