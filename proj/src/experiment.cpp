// SPDX-License-Identifier: Apache-2.0
//
// secee: secure energy-efficiency optimization for RIS-aided multicast
// Copyright (C) 2026 The secee authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "secee/experiment.hpp"

#include "secee/parallel.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace secee {

namespace {

// Shortest text that parses back to the same double.
std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

const ConfigEntries kConvergence{{"system.n_antennas", "10"}, {"system.n_elements", "10"}, {"system.n_users", "5"},
                                 {"system.n_eves", "10"},     {"secrecy.sop_bound", "0.1"}};

const std::vector<double> kPowerSweep{-10.0, -5.0, 0.0, 5.0, 10.0};

}  // namespace

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids{"fig5a", "fig5b", "fig5c", "fig6", "fig7a", "fig7b", "scaling", "custom"};
  return ids;
}

ExperimentSpec preset_experiment(const std::string& id) {
  ExperimentSpec s;
  s.id = id;
  if (id == "fig5a" || id == "fig5b" || id == "fig5c") {
    // Same runs; the three views differ only in which trace layer is plotted.
    s.preset = kConvergence;
    s.sweeps = {{"power.p_max_dbm", {-10.0, 0.0, 10.0}}};
  } else if (id == "fig6") {
    s.preset = kConvergence;
    s.preset["system.n_elements"] = "8";
    s.sweeps = {{"power.p_max_dbm", kPowerSweep}};
    s.schemes = {"quantized-2", "quantized-4", "quantized-8", "proposed"};
  } else if (id == "fig7a") {
    s.preset = {{"system.n_antennas", "10"}, {"system.n_elements", "10"}, {"system.n_users", "1"},
                {"system.n_eves", "1"},      {"power.p_max_dbm", "0"}};
    s.sweeps = {{"secrecy.sop_bound", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}}};
    s.schemes = {"proposed", "fps", "rps", "ignore-uncertainty"};
  } else if (id == "fig7b") {
    s.preset = {{"system.n_antennas", "10"}, {"system.n_elements", "10"}, {"system.n_users", "1"},
                {"system.n_eves", "1"},      {"secrecy.sop_bound", "0.5"}};
    s.sweeps = {{"power.p_max_dbm", kPowerSweep}};
    s.schemes = {"proposed", "fps", "rps", "ignore-uncertainty"};
  } else if (id == "scaling") {
    // Per-iteration cost does not depend on K or J; one pair keeps the run short.
    s.preset = {{"system.n_antennas", "10"}, {"system.n_elements", "10"}, {"system.n_users", "1"},
                {"system.n_eves", "1"}};
    s.sweeps = {{"system.n_antennas", {16, 32, 64, 128}}, {"system.n_elements", {16, 32, 64, 128}}};
    s.trials = 20;
  } else if (id == "custom") {
    s.sweeps = {{"none", {0.0}}};
  } else {
    throw Error("unknown experiment '" + id + "'");
  }
  return s;
}

void ExperimentSpec::validate() const {
  if (std::find(experiment_ids().begin(), experiment_ids().end(), id) == experiment_ids().end())
    throw Error("unknown experiment '" + id + "'");
  if (trials < 1) throw Error("experiment: trials must be >= 1");
  if (sweeps.empty()) throw Error("experiment: no sweep");
  if (schemes.empty()) throw Error("experiment: no scheme");
  for (const auto& name : schemes) Scheme::parse(name);
  for (const auto& sw : sweeps) {
    if (sw.values.empty()) throw Error("sweep '" + sw.variable + "': no values");
    for (double x : sw.values)
      if (!std::isfinite(x)) throw Error("sweep '" + sw.variable + "': non-finite value");
    if (!std::is_sorted(sw.values.begin(), sw.values.end()))
      throw Error("sweep '" + sw.variable + "': values must be sorted ascending");
    if (sw.variable == "none") continue;
    const auto& schema = config_schema();
    if (std::none_of(schema.begin(), schema.end(), [&](const SchemaField& f) { return f.key == sw.variable; }))
      throw Error("sweep: unknown config key '" + sw.variable + "'");
  }
}

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw Error("sweep '" + text + "': expected key=v1,v2,...");
  Sweep sw;
  sw.variable = text.substr(0, eq);
  for (const auto& item : split(text.substr(eq + 1), ',')) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (item.empty() || pos != item.size()) throw Error("sweep '" + sw.variable + "': bad value '" + item + "'");
    sw.values.push_back(x);
  }
  return sw;
}

ConfigEntries merge_entries(const ConfigEntries& file_entries, const ExperimentSpec& spec,
                            const ConfigEntries& overrides) {
  ConfigEntries merged = file_entries;
  for (const auto& [k, v] : spec.preset) merged[k] = v;
  for (const auto& [k, v] : overrides) merged[k] = v;
  return merged;
}

namespace {

struct SchemeOutcome {
  double ee_bits_per_joule = 0.0;
  double am_iters = 0.0;
  double wall_ms = 0.0;
  double d1_ms = 0.0, q2_ms = 0.0;
  long d1_iters = 0, q2_iters = 0;
};

struct TrialOutcome {
  std::vector<SchemeOutcome> schemes;
  std::vector<Trace> traces;  // trial 0 only
};

SchemeOutcome summarize(const SolveReport& r, double bandwidth_hz) {
  SchemeOutcome o;
  o.ee_bits_per_joule = r.min_objective * bandwidth_hz;
  o.wall_ms = r.wall_ms;
  for (const auto& s : r.subproblems) {
    o.am_iters += s.am_rounds;
    o.d1_ms += s.d1_wall_ms;
    o.q2_ms += s.q2_wall_ms;
    o.d1_iters += s.d1_inner_iterations;
    o.q2_iters += s.q2_inner_iterations;
  }
  if (!r.subproblems.empty()) o.am_iters /= static_cast<double>(r.subproblems.size());
  return o;
}

TrialOutcome run_trial(const SystemConfig& cfg, const std::vector<Scheme>& schemes, int trial, bool keep_trace) {
  TrialOutcome out;
  const ChannelSet cs = generate_trial(cfg, cfg.rng_seed, static_cast<std::uint64_t>(trial));
  std::optional<SolveReport> continuous;
  Trace continuous_trace;
  for (const Scheme& sc : schemes) {
    Trace trace;
    SolveReport report;
    const bool shares_continuous = sc.kind == SchemeKind::Proposed || sc.kind == SchemeKind::Quantized;
    if (shares_continuous) {
      if (!continuous) {
        SystemConfig cont_cfg = cfg;
        cont_cfg.quantization_levels = 0;
        continuous = run_scheme(Scheme{}, cont_cfg, cs, 1, keep_trace ? &continuous_trace : nullptr);
      }
      const int levels = sc.kind == SchemeKind::Quantized ? sc.levels : cfg.quantization_levels;
      report = levels > 0 ? quantized_report(*continuous, make_contexts(cfg, cs), levels) : *continuous;
      trace = continuous_trace;
    } else {
      report = run_scheme(sc, cfg, cs, 1, keep_trace ? &trace : nullptr);
    }
    out.schemes.push_back(summarize(report, cfg.bandwidth_hz));
    if (keep_trace) out.traces.push_back(std::move(trace));
  }
  return out;
}

}  // namespace

std::string points_to_csv(const std::vector<PointSummary>& points) {
  std::ostringstream out;
  out << kPointsHeader << '\n';
  for (const auto& p : points) {
    out << p.sweep_variable << ',' << fmt(p.sweep_value) << ',' << p.scheme << ',' << fmt(p.mean_ee_bits_per_joule)
        << ',' << fmt(p.std_ee) << ',' << p.trials << ',' << fmt(p.mean_am_iters) << ',' << fmt(p.mean_wall_ms) << ','
        << fmt(p.d1_us_per_iter) << ',' << fmt(p.q2_us_per_iter) << '\n';
  }
  return out.str();
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const ConfigEntries& entries, const RunOptions& opts) {
  spec.validate();
  std::vector<Scheme> schemes;
  for (const auto& name : spec.schemes) schemes.push_back(Scheme::parse(name));

  ExperimentResult result;
  std::ostringstream trace_out;
  trace_out << "sweep_variable,sweep_value,scheme,trial,";
  write_trace_header(trace_out);

  for (const Sweep& sw : spec.sweeps) {
    for (double value : sw.values) {
      ConfigEntries point_entries = entries;
      if (sw.variable != "none") point_entries[sw.variable] = fmt(value);
      const SystemConfig cfg = load_config(point_entries, {});
      const std::string where = sw.variable + "=" + fmt(value);

      const auto trials = parallel_map(static_cast<std::size_t>(spec.trials), opts.workers, [&](std::size_t t) {
        try {
          return run_trial(cfg, schemes, static_cast<int>(t), t == 0);
        } catch (const std::exception& e) {
          throw Error("experiment " + spec.id + ", " + where + ", trial " + std::to_string(t) + ": " + e.what());
        }
      });

      for (std::size_t s = 0; s < schemes.size(); ++s) {
        PointSummary p;
        p.sweep_variable = sw.variable;
        p.sweep_value = value;
        p.scheme = schemes[s].name();
        p.trials = spec.trials;
        double sum = 0.0, wall = 0.0, am = 0.0, d1_ms = 0.0, q2_ms = 0.0;
        long d1_it = 0, q2_it = 0;
        for (const auto& tr : trials) {
          const SchemeOutcome& o = tr.schemes[s];
          sum += o.ee_bits_per_joule;
          wall += o.wall_ms;
          am += o.am_iters;
          d1_ms += o.d1_ms;
          q2_ms += o.q2_ms;
          d1_it += o.d1_iters;
          q2_it += o.q2_iters;
        }
        const double n = static_cast<double>(spec.trials);
        p.mean_ee_bits_per_joule = sum / n;
        double ss = 0.0;
        for (const auto& tr : trials) ss += std::pow(tr.schemes[s].ee_bits_per_joule - p.mean_ee_bits_per_joule, 2);
        p.std_ee = spec.trials > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
        p.mean_am_iters = am / n;
        if (!opts.reproducible) {
          p.mean_wall_ms = wall / n;
          p.d1_us_per_iter = d1_it > 0 ? 1e3 * d1_ms / static_cast<double>(d1_it) : 0.0;
          p.q2_us_per_iter = q2_it > 0 ? 1e3 * q2_ms / static_cast<double>(q2_it) : 0.0;
        }
        result.points.push_back(p);
        write_trace_rows(trace_out, trials.front().traces[s],
                         sw.variable + "," + fmt(value) + "," + p.scheme + ",0,");
      }
    }
  }
  result.points_csv = points_to_csv(result.points);
  result.trace_csv = trace_out.str();

  Manifest m;
  m.spec = spec;
  m.entries = entries;
  m.reproducible = opts.reproducible;
  m.input_hash = input_hash(spec, entries);
  m.points_hash = content_hash(result.points_csv);
  m.trace_hash = content_hash(result.trace_csv);
  result.manifest_json = write_manifest(m);

  if (opts.write_files) {
    namespace fs = std::filesystem;
    fs::create_directories(spec.out_dir);
    auto dump = [&](const std::string& name, const std::string& content) {
      std::ofstream f(fs::path(spec.out_dir) / name, std::ios::binary);
      if (!f) throw Error("cannot write " + (fs::path(spec.out_dir) / name).string());
      f << content;
    };
    dump("points.csv", result.points_csv);
    dump("trace.csv", result.trace_csv);
    dump("manifest.json", result.manifest_json);
  }
  return result;
}

std::string content_hash(const std::string& content) {
  const std::string blob = "blob " + std::to_string(content.size()) + std::string(1, '\0') + content;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(blob.data(), blob.size(), digest, &len, EVP_sha1(), nullptr) != 1) throw Error("SHA-1 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

using Json = nlohmann::ordered_json;

Json spec_json(const ExperimentSpec& spec) {
  Json sweeps = Json::array();
  for (const auto& sw : spec.sweeps) sweeps.push_back({{"variable", sw.variable}, {"values", sw.values}});
  return {{"id", spec.id},           {"sweeps", sweeps}, {"schemes", spec.schemes},
          {"trials", spec.trials}, {"preset", spec.preset}};
}

}  // namespace

std::string input_hash(const ExperimentSpec& spec, const ConfigEntries& entries) {
  const Json j{{"experiment", spec_json(spec)}, {"entries", entries}};
  return content_hash(j.dump());
}

std::string write_manifest(const Manifest& m) {
  const Json j{{"format", "secee-manifest"},
               {"version", 1},
               {"points_schema", kPointsSchemaVersion},
               {"experiment", spec_json(m.spec)},
               {"entries", m.entries},
               {"seed", load_config(m.entries, {}).rng_seed},
               {"reproducible", m.reproducible},
               {"input_hash", m.input_hash},
               {"outputs", {{"points.csv", m.points_hash}, {"trace.csv", m.trace_hash}}}};
  return j.dump(2) + "\n";
}

Manifest parse_manifest(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("manifest: ") + e.what());
  }
  if (j.value("format", "") != "secee-manifest") throw Error("manifest: not a secee manifest");
  if (j.value("version", 0) != 1) throw Error("manifest: unsupported version");
  Manifest m;
  try {
    const Json& e = j.at("experiment");
    m.spec.id = e.at("id").get<std::string>();
    m.spec.sweeps.clear();
    for (const auto& sw : e.at("sweeps"))
      m.spec.sweeps.push_back({sw.at("variable").get<std::string>(), sw.at("values").get<std::vector<double>>()});
    m.spec.schemes = e.at("schemes").get<std::vector<std::string>>();
    m.spec.trials = e.at("trials").get<int>();
    m.spec.preset = e.at("preset").get<ConfigEntries>();
    m.entries = j.at("entries").get<ConfigEntries>();
    m.reproducible = j.at("reproducible").get<bool>();
    m.input_hash = j.at("input_hash").get<std::string>();
    m.points_hash = j.at("outputs").at("points.csv").get<std::string>();
    m.trace_hash = j.at("outputs").at("trace.csv").get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("manifest: ") + ex.what());
  }
  return m;
}

}  // namespace secee
