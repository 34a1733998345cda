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

#ifndef SECEE_EXPERIMENT_HPP
#define SECEE_EXPERIMENT_HPP

// Batch experiment runner: sweeps a config key over a list of values, runs
// every scheme on the same channel trials and writes plot-ready CSV files plus
// a JSON manifest that is enough to rerun the experiment exactly.
//
// Output files in the output directory:
//   points.csv     one row per (sweep value, scheme), see kPointsHeader
//   trace.csv      per-iteration solver trace of trial 0 for every row of points.csv
//   manifest.json  experiment, merged config entries, content hashes

#include "secee/config.hpp"
#include "secee/orchestrator.hpp"

#include <string>
#include <vector>

namespace secee {

inline constexpr int kPointsSchemaVersion = 1;
inline constexpr const char* kPointsHeader =
    "sweep_variable,sweep_value,scheme,mean_ee_bits_per_joule,std,trials,mean_am_iters,mean_wall_ms,"
    "d1_us_per_iter,q2_us_per_iter";

struct Sweep {
  std::string variable;  // config key, e.g. "power.p_max_dbm"; "none" for a single point
  std::vector<double> values;
};

struct ExperimentSpec {
  std::string id = "custom";  // fig5a|fig5b|fig5c|fig6|fig7a|fig7b|scaling|custom
  std::vector<Sweep> sweeps;
  std::vector<std::string> schemes{"proposed"};
  int trials = 500;
  // Fixed settings of the experiment, applied over the config file and under --set.
  ConfigEntries preset;
  std::string out_dir = "out";

  void validate() const;
};

const std::vector<std::string>& experiment_ids();
/// Preset sweep, schemes and settings for a named experiment.
ExperimentSpec preset_experiment(const std::string& id);

/// "key=v1,v2,..." into a sweep with sorted-order check left to validate().
Sweep parse_sweep(const std::string& text);

struct PointSummary {
  std::string sweep_variable;
  double sweep_value = 0.0;
  std::string scheme;
  double mean_ee_bits_per_joule = 0.0;
  double std_ee = 0.0;
  int trials = 0;
  double mean_am_iters = 0.0;
  double mean_wall_ms = 0.0;
  double d1_us_per_iter = 0.0;
  double q2_us_per_iter = 0.0;
};

struct RunOptions {
  int workers = 1;
  // Zero every timing column so reruns are byte-identical.
  bool reproducible = false;
  bool write_files = true;
};

struct ExperimentResult {
  std::vector<PointSummary> points;
  std::string points_csv;
  std::string trace_csv;
  std::string manifest_json;
};

/// Merged entries (file, then preset, then overrides) that reproduce the run's config on top of the defaults.
ConfigEntries merge_entries(const ConfigEntries& file_entries, const ExperimentSpec& spec,
                            const ConfigEntries& overrides);

/// Run the experiment on the config given by merge_entries(...). Failed trials
/// raise Error naming the sweep point, scheme and trial.
ExperimentResult run_experiment(const ExperimentSpec& spec, const ConfigEntries& entries, const RunOptions& opts);

std::string points_to_csv(const std::vector<PointSummary>& points);

/// Git blob hash ("blob <size>\0" + content), lowercase hex SHA-1.
std::string content_hash(const std::string& content);

struct Manifest {
  ExperimentSpec spec;
  ConfigEntries entries;
  bool reproducible = false;
  std::string input_hash;
  std::string points_hash;
  std::string trace_hash;
};

std::string write_manifest(const Manifest& m);
Manifest parse_manifest(const std::string& text);
/// Hash of the canonical rendering of the experiment and entries.
std::string input_hash(const ExperimentSpec& spec, const ConfigEntries& entries);

}  // namespace secee

#endif  // SECEE_EXPERIMENT_HPP
