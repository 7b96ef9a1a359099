// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include "fracwave/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "json.hpp"

namespace fracwave {

namespace {

using json = nlohmann::ordered_json;

const std::set<std::string>& known_tolerances() {
  static const std::set<std::string> keys{
      "ratio_rel", "residual_final", "subordination_abs", "bound_margin"};
  return keys;
}

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

void require_keys(const json& j, const std::string& path,
                  const std::set<std::string>& allowed) {
  for (const auto& item : j.items()) {
    if (allowed.find(item.key()) == allowed.end()) {
      throw ConfigError(join_path(path, item.key()), "unknown field");
    }
  }
}

double as_double(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw ConfigError(path, "expected a number");
  }
  return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    throw ConfigError(path, "expected an integer");
  }
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) {
    throw ConfigError(path, "expected a string");
  }
  return j.get<std::string>();
}

Point3 as_point(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) {
    throw ConfigError(path, "expected an array of 3 numbers");
  }
  Point3 p{};
  for (int d = 0; d < 3; ++d) {
    p[std::size_t(d)] = as_double(j[std::size_t(d)],
                                  path + "[" + std::to_string(d) + "]");
  }
  return p;
}

cplx as_complex(const json& j, const std::string& path) {
  if (j.is_number()) {
    return cplx(j.get<double>(), 0.0);
  }
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError(path, "expected a number or an [re, im] pair");
  }
  return cplx(as_double(j[0], path + "[0]"), as_double(j[1], path + "[1]"));
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

ExperimentKind experiment_from_name(const std::string& name,
                                    const std::string& path) {
  for (ExperimentKind kind :
       {ExperimentKind::limiting_amplitude_operator,
        ExperimentKind::limiting_amplitude_r3, ExperimentKind::stabilization,
        ExperimentKind::subordination_check, ExperimentKind::kernel_validation,
        ExperimentKind::specfun_eval}) {
    if (experiment_name(kind) == name) {
      return kind;
    }
  }
  throw ConfigError(path,
                    "unknown experiment \"" + name +
                        "\" (expected one of limiting_amplitude_operator, "
                        "limiting_amplitude_r3, stabilization, "
                        "subordination_check, kernel_validation, "
                        "specfun_eval)");
}

SourceKind source_kind_from_name(const std::string& name,
                                 const std::string& path) {
  for (SourceKind kind : {SourceKind::gaussian_bump, SourceKind::ball_indicator,
                          SourceKind::multi_bump}) {
    if (source_kind_name(kind) == name) {
      return kind;
    }
  }
  throw ConfigError(path, "unknown source kind \"" + name +
                              "\" (expected gaussian_bump, ball_indicator, "
                              "or multi_bump)");
}

KernelKind kernel_kind_from_name(const std::string& name,
                                 const std::string& path) {
  for (KernelKind kind :
       {KernelKind::z1, KernelKind::z2, KernelKind::y_forcing}) {
    if (kernel_kind_name(kind) == name) {
      return kind;
    }
  }
  throw ConfigError(path,
                    "unknown kernel kind \"" + name +
                        "\" (expected z1, z2, or y_forcing)");
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::limiting_amplitude_operator:
      return "limiting_amplitude_operator";
    case ExperimentKind::limiting_amplitude_r3:
      return "limiting_amplitude_r3";
    case ExperimentKind::stabilization:
      return "stabilization";
    case ExperimentKind::subordination_check:
      return "subordination_check";
    case ExperimentKind::kernel_validation:
      return "kernel_validation";
    case ExperimentKind::specfun_eval:
      return "specfun_eval";
  }
  return "unknown";
}

std::vector<double> expand_schedule(const ScheduleSpec& schedule) {
  std::vector<double> out;
  out.reserve(std::size_t(std::max(schedule.count, 0)));
  double t = schedule.t0;
  for (int j = 0; j < schedule.count; ++j) {
    out.push_back(t);
    t *= schedule.factor;
  }
  return out;
}

double tolerance_or(const ExperimentConfig& config, const std::string& name,
                    double fallback) {
  const auto it = config.tolerances.find(name);
  return it == config.tolerances.end() ? fallback : it->second;
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ConfigError("", std::string("invalid JSON: ") + err.what());
  }
  if (!j.is_object()) {
    throw ConfigError("", "top-level value must be an object");
  }
  require_keys(j, "",
               {"schema_version", "experiment", "params", "schedule",
                "sources", "probes", "operator", "stabilization",
                "subordination", "kernel", "specfun", "tolerances", "seed",
                "output_dir"});

  ExperimentConfig config;
  if (j.contains("schema_version")) {
    config.schema_version = as_int(j["schema_version"], "schema_version");
  }
  if (config.schema_version != 1) {
    throw ConfigError("schema_version", "unsupported version (expected 1)");
  }
  if (!j.contains("experiment")) {
    throw ConfigError("experiment", "required field is missing");
  }
  config.experiment =
      experiment_from_name(as_string(j["experiment"], "experiment"),
                           "experiment");

  if (j.contains("params")) {
    const json& p = j["params"];
    require_keys(p, "params", {"alpha", "omega"});
    if (p.contains("alpha")) {
      config.alpha = as_double(p["alpha"], "params.alpha");
    }
    if (p.contains("omega")) {
      config.omega = as_double(p["omega"], "params.omega");
    }
  }

  if (j.contains("schedule")) {
    const json& s = j["schedule"];
    require_keys(s, "schedule", {"t0", "factor", "count"});
    if (s.contains("t0")) {
      config.schedule.t0 = as_double(s["t0"], "schedule.t0");
    }
    if (s.contains("factor")) {
      config.schedule.factor = as_double(s["factor"], "schedule.factor");
    }
    if (s.contains("count")) {
      config.schedule.count = as_int(s["count"], "schedule.count");
    }
  }

  if (j.contains("sources")) {
    const json& list = j["sources"];
    if (!list.is_array()) {
      throw ConfigError("sources", "expected an array");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "sources[" + std::to_string(i) + "]";
      const json& s = list[i];
      if (!s.is_object()) {
        throw ConfigError(path, "expected an object");
      }
      require_keys(s, path, {"role", "kind", "centers", "scale", "amplitude"});
      SourceSpec spec;
      if (s.contains("role")) {
        spec.role = as_string(s["role"], path + ".role");
      }
      if (s.contains("kind")) {
        spec.source.kind = source_kind_from_name(
            as_string(s["kind"], path + ".kind"), path + ".kind");
      }
      if (s.contains("centers")) {
        const json& centers = s["centers"];
        if (!centers.is_array() || centers.empty()) {
          throw ConfigError(path + ".centers", "expected a non-empty array");
        }
        spec.source.centers.clear();
        for (std::size_t c = 0; c < centers.size(); ++c) {
          spec.source.centers.push_back(as_point(
              centers[c], path + ".centers[" + std::to_string(c) + "]"));
        }
      }
      if (s.contains("scale")) {
        spec.source.scale = as_double(s["scale"], path + ".scale");
      }
      if (s.contains("amplitude")) {
        spec.source.amplitude = as_double(s["amplitude"], path + ".amplitude");
      }
      config.sources.push_back(std::move(spec));
    }
  }

  if (j.contains("probes")) {
    const json& list = j["probes"];
    if (!list.is_array()) {
      throw ConfigError("probes", "expected an array of points");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      config.probes.push_back(
          as_point(list[i], "probes[" + std::to_string(i) + "]"));
    }
  }

  if (j.contains("operator")) {
    const json& op = j["operator"];
    require_keys(op, "operator", {"eigenvalues", "weights"});
    if (op.contains("eigenvalues")) {
      const json& ev = op["eigenvalues"];
      if (!ev.is_array()) {
        throw ConfigError("operator.eigenvalues", "expected an array");
      }
      for (std::size_t i = 0; i < ev.size(); ++i) {
        config.spectral_operator.eigenvalues.push_back(as_double(
            ev[i], "operator.eigenvalues[" + std::to_string(i) + "]"));
      }
    }
    if (op.contains("weights")) {
      const json& w = op["weights"];
      if (!w.is_array()) {
        throw ConfigError("operator.weights", "expected an array");
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        config.spectral_operator.weights.push_back(
            as_complex(w[i], "operator.weights[" + std::to_string(i) + "]"));
      }
    }
  }

  if (j.contains("stabilization")) {
    const json& st = j["stabilization"];
    require_keys(st, "stabilization",
                 {"offset", "modes", "domain_length", "points_per_axis"});
    if (st.contains("offset")) {
      config.stabilization.offset =
          as_double(st["offset"], "stabilization.offset");
    }
    if (st.contains("modes")) {
      const json& modes = st["modes"];
      if (!modes.is_array()) {
        throw ConfigError("stabilization.modes", "expected an array");
      }
      for (std::size_t i = 0; i < modes.size(); ++i) {
        const std::string path =
            "stabilization.modes[" + std::to_string(i) + "]";
        const json& m = modes[i];
        if (!m.is_object()) {
          throw ConfigError(path, "expected an object");
        }
        require_keys(m, path, {"index", "amplitude"});
        StabilizationData::PlaneMode mode;
        if (!m.contains("index")) {
          throw ConfigError(path + ".index", "required field is missing");
        }
        const json& idx = m["index"];
        if (!idx.is_array() || idx.size() != 3) {
          throw ConfigError(path + ".index",
                            "expected an array of 3 integers");
        }
        for (int d = 0; d < 3; ++d) {
          mode.index[std::size_t(d)] =
              as_int(idx[std::size_t(d)],
                     path + ".index[" + std::to_string(d) + "]");
        }
        if (m.contains("amplitude")) {
          mode.amplitude = as_complex(m["amplitude"], path + ".amplitude");
        }
        config.stabilization.modes.push_back(mode);
      }
    }
    if (st.contains("domain_length")) {
      config.stabilization.domain_length =
          as_double(st["domain_length"], "stabilization.domain_length");
    }
    if (st.contains("points_per_axis")) {
      config.stabilization.points_per_axis =
          as_int(st["points_per_axis"], "stabilization.points_per_axis");
    }
  }

  if (j.contains("subordination")) {
    const json& sub = j["subordination"];
    require_keys(sub, "subordination", {"lambda"});
    if (sub.contains("lambda")) {
      config.subordination.lambda =
          as_double(sub["lambda"], "subordination.lambda");
    }
  }

  if (j.contains("kernel")) {
    const json& k = j["kernel"];
    require_keys(k, "kernel", {"kind", "dim", "t", "radii"});
    if (k.contains("kind")) {
      config.kernel.kind = kernel_kind_from_name(
          as_string(k["kind"], "kernel.kind"), "kernel.kind");
    }
    if (k.contains("dim")) {
      config.kernel.dim = as_int(k["dim"], "kernel.dim");
    }
    if (k.contains("t")) {
      config.kernel.t = as_double(k["t"], "kernel.t");
    }
    if (k.contains("radii")) {
      const json& radii = k["radii"];
      if (!radii.is_array()) {
        throw ConfigError("kernel.radii", "expected an array");
      }
      for (std::size_t i = 0; i < radii.size(); ++i) {
        config.kernel.radii.push_back(
            as_double(radii[i], "kernel.radii[" + std::to_string(i) + "]"));
      }
    }
  }

  if (j.contains("specfun")) {
    const json& sf = j["specfun"];
    require_keys(sf, "specfun", {"function", "args"});
    if (sf.contains("function")) {
      config.specfun.function = as_string(sf["function"], "specfun.function");
    }
    if (sf.contains("args")) {
      const json& args = sf["args"];
      if (!args.is_array()) {
        throw ConfigError("specfun.args", "expected an array of numbers");
      }
      for (std::size_t i = 0; i < args.size(); ++i) {
        config.specfun.args.push_back(
            as_double(args[i], "specfun.args[" + std::to_string(i) + "]"));
      }
    }
  }

  if (j.contains("tolerances")) {
    const json& tols = j["tolerances"];
    if (!tols.is_object()) {
      throw ConfigError("tolerances", "expected an object");
    }
    for (const auto& item : tols.items()) {
      const std::string path = "tolerances." + item.key();
      if (known_tolerances().find(item.key()) == known_tolerances().end()) {
        throw ConfigError(path, "unknown tolerance name");
      }
      config.tolerances[item.key()] = as_double(item.value(), path);
    }
  }

  if (j.contains("seed")) {
    const json& seed = j["seed"];
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      throw ConfigError("seed", "expected a nonnegative integer");
    }
    if (seed.is_number_integer() && seed.get<long long>() < 0) {
      throw ConfigError("seed", "expected a nonnegative integer");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  if (j.contains("output_dir")) {
    config.output_dir = as_string(j["output_dir"], "output_dir");
  }
  return config;
}

std::string serialize_config(const ExperimentConfig& config) {
  json j;
  j["schema_version"] = config.schema_version;
  j["experiment"] = std::string(experiment_name(config.experiment));
  j["params"] = {{"alpha", config.alpha}, {"omega", config.omega}};
  j["schedule"] = {{"t0", config.schedule.t0},
                   {"factor", config.schedule.factor},
                   {"count", config.schedule.count}};
  json sources = json::array();
  for (const auto& spec : config.sources) {
    json centers = json::array();
    for (const auto& c : spec.source.centers) {
      centers.push_back(json::array({c[0], c[1], c[2]}));
    }
    sources.push_back({{"role", spec.role},
                       {"kind", std::string(source_kind_name(spec.source.kind))},
                       {"centers", centers},
                       {"scale", spec.source.scale},
                       {"amplitude", spec.source.amplitude}});
  }
  j["sources"] = sources;
  json probes = json::array();
  for (const auto& p : config.probes) {
    probes.push_back(json::array({p[0], p[1], p[2]}));
  }
  j["probes"] = probes;
  json weights = json::array();
  for (const auto& w : config.spectral_operator.weights) {
    weights.push_back(complex_to_json(w));
  }
  j["operator"] = {{"eigenvalues", config.spectral_operator.eigenvalues},
                   {"weights", weights}};
  json modes = json::array();
  for (const auto& m : config.stabilization.modes) {
    modes.push_back(
        {{"index", json::array({m.index[0], m.index[1], m.index[2]})},
         {"amplitude", complex_to_json(m.amplitude)}});
  }
  j["stabilization"] = {{"offset", config.stabilization.offset},
                        {"modes", modes},
                        {"domain_length", config.stabilization.domain_length},
                        {"points_per_axis",
                         config.stabilization.points_per_axis}};
  j["subordination"] = {{"lambda", config.subordination.lambda}};
  j["kernel"] = {{"kind", std::string(kernel_kind_name(config.kernel.kind))},
                 {"dim", config.kernel.dim},
                 {"t", config.kernel.t},
                 {"radii", config.kernel.radii}};
  j["specfun"] = {{"function", config.specfun.function},
                  {"args", config.specfun.args}};
  json tols = json::object();
  for (const auto& [name, value] : config.tolerances) {
    tols[name] = value;
  }
  j["tolerances"] = tols;
  j["seed"] = config.seed;
  j["output_dir"] = config.output_dir;
  return j.dump(2) + "\n";
}

void validate_config(const ExperimentConfig& config) {
  if (!(config.alpha > 1.0 && config.alpha < 2.0)) {
    throw ConfigError("params.alpha", "must lie in the open range (1,2)");
  }
  if (!(config.omega > 0.0) || !std::isfinite(config.omega)) {
    throw ConfigError("params.omega", "must be > 0 and finite");
  }
  if (!(config.schedule.t0 > 0.0)) {
    throw ConfigError("schedule.t0", "must be > 0");
  }
  if (!(config.schedule.factor > 1.0)) {
    throw ConfigError("schedule.factor", "must be > 1");
  }
  if (config.schedule.count < 1 || config.schedule.count > 64) {
    throw ConfigError("schedule.count", "must lie in [1, 64]");
  }
  for (std::size_t i = 0; i < config.sources.size(); ++i) {
    const auto& spec = config.sources[i];
    const std::string path = "sources[" + std::to_string(i) + "]";
    if (spec.role != "forcing" && spec.role != "u0" && spec.role != "u1") {
      throw ConfigError(path + ".role",
                        "must be \"forcing\", \"u0\", or \"u1\"");
    }
    try {
      validate_source(spec.source);
    } catch (const std::invalid_argument& err) {
      throw ConfigError(path, err.what());
    }
  }
  for (const auto& [name, value] : config.tolerances) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw ConfigError("tolerances." + name, "must be > 0 and finite");
    }
  }

  const auto count_role = [&](std::string_view role) {
    std::size_t n = 0;
    for (const auto& spec : config.sources) {
      n += spec.role == role ? 1 : 0;
    }
    return n;
  };

  switch (config.experiment) {
    case ExperimentKind::limiting_amplitude_operator: {
      const auto& op = config.spectral_operator;
      if (op.eigenvalues.empty()) {
        throw ConfigError("operator.eigenvalues", "must be non-empty");
      }
      if (op.eigenvalues.size() != op.weights.size()) {
        throw ConfigError("operator.weights",
                          "must match eigenvalues in length");
      }
      for (std::size_t i = 0; i < op.eigenvalues.size(); ++i) {
        if (!(op.eigenvalues[i] > 0.0)) {
          throw ConfigError("operator.eigenvalues[" + std::to_string(i) + "]",
                            "must be > 0 (0 lies outside the spectrum)");
        }
      }
      break;
    }
    case ExperimentKind::limiting_amplitude_r3: {
      if (config.probes.empty()) {
        throw ConfigError("probes", "need at least one probe point");
      }
      if (count_role("forcing") + count_role("u0") + count_role("u1") == 0) {
        throw ConfigError("sources",
                          "need at least one forcing/u0/u1 source");
      }
      for (std::string_view role : {"forcing", "u0", "u1"}) {
        if (count_role(role) > 1) {
          throw ConfigError("sources", "role \"" + std::string(role) +
                                           "\" given more than once");
        }
      }
      break;
    }
    case ExperimentKind::stabilization: {
      if (config.probes.empty()) {
        throw ConfigError("probes", "need at least one probe point");
      }
      for (std::size_t i = 0; i < config.sources.size(); ++i) {
        if (config.sources[i].role != "u0") {
          throw ConfigError("sources[" + std::to_string(i) + "].role",
                            "stabilization only takes \"u0\" sources");
        }
      }
      if (!config.stabilization.modes.empty() &&
          !(config.stabilization.domain_length > 0.0)) {
        throw ConfigError("stabilization.domain_length",
                          "required (> 0) when plane modes are present");
      }
      if (config.stabilization.domain_length < 0.0) {
        throw ConfigError("stabilization.domain_length", "must be >= 0");
      }
      if (config.stabilization.points_per_axis < 0 ||
          config.stabilization.points_per_axis > 224) {
        throw ConfigError("stabilization.points_per_axis",
                          "must lie in [0, 224]");
      }
      break;
    }
    case ExperimentKind::subordination_check: {
      if (!(config.subordination.lambda > 0.0)) {
        throw ConfigError("subordination.lambda", "must be > 0");
      }
      break;
    }
    case ExperimentKind::kernel_validation: {
      if (config.kernel.kind == KernelKind::z2) {
        throw ConfigError("kernel.kind",
                          "z2 has no real-space evaluator; use z1 or "
                          "y_forcing");
      }
      if (config.kernel.dim < 1 || config.kernel.dim > 3) {
        throw ConfigError("kernel.dim", "must lie in [1, 3]");
      }
      if (!(config.kernel.t > 0.0)) {
        throw ConfigError("kernel.t", "must be > 0");
      }
      if (config.kernel.radii.size() < 8) {
        throw ConfigError("kernel.radii",
                          "need at least 8 radii to calibrate and validate");
      }
      for (std::size_t i = 0; i < config.kernel.radii.size(); ++i) {
        if (!(config.kernel.radii[i] > 0.0) ||
            (i > 0 && config.kernel.radii[i] <= config.kernel.radii[i - 1])) {
          throw ConfigError("kernel.radii[" + std::to_string(i) + "]",
                            "radii must be positive and strictly increasing");
        }
      }
      break;
    }
    case ExperimentKind::specfun_eval: {
      // The function/arity check lives in the runner's dispatch table; here
      // only the name being non-empty is enforced.
      if (config.specfun.function.empty()) {
        throw ConfigError("specfun.function", "must be non-empty");
      }
      break;
    }
  }
}

}  // namespace fracwave
