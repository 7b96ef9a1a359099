// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "fracwave/config.hpp"
#include "fracwave/types.hpp"

namespace fracwave {

// ---------------------------------------------------------------------------
// Experiment runner: executes a validated ExperimentConfig, writes CSV
// artifacts plus a manifest.json (every artifact listed with its SHA-256),
// and reports the outcome.  Identical configs rerun to byte-identical CSVs;
// only the manifest timestamp changes.
// ---------------------------------------------------------------------------

struct RunArtifact {
  std::string file;    // name relative to output_dir
  std::string sha256;  // content hash
  std::size_t rows = 0;
};

struct RunReport {
  // 0 = success, 2 = invalid config, 3 = experiment/invariant failure.
  int exit_code = 0;
  std::string status = "ok";  // "ok" | "config_error" | "experiment_error"
  std::string message;
  std::string field_path;  // offending config field, when status is
                           // config_error
  std::string invariant;   // violated invariant name, when status is
                           // experiment_error
  std::vector<RunArtifact> artifacts;
  std::string manifest_file;  // set when a manifest was written
};

// Runs the experiment; never throws (failures are encoded in the report, and
// a machine-readable error_report.json is left in output_dir when possible).
RunReport run_experiment(const ExperimentConfig& config);

// Validates only (parse errors are the caller's: this takes a parsed
// config); returns a success/config_error report without touching the disk.
RunReport validate_only(const ExperimentConfig& config);

// The error/status report as a JSON document (used for error_report.json and
// the CLI's stderr).
std::string report_json(const RunReport& report);

// Point evaluation used by `specfun_eval` and the `fracwave specfun`
// subcommand.  Exposed functions and their argument lists:
//   mittag_leffler alpha beta re [im]
//   macdonald_k    nu re [im]
//   wright_density alpha x
//   wright_phi     rho delta re [im]
//   phi_omega      alpha omega t
// Throws ConfigError for unknown names/arity; domain errors are forwarded.
ComplexSample eval_specfun(const std::string& function,
                           const std::vector<double>& args);

}  // namespace fracwave
