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

// Command-line front end for the experiment runner.
//
//   secee_cli run --config FILE --experiment ID [--set key=value]... [--trials N]
//                 [--seed S] [--workers W] [--out DIR] [--reproducible]
//                 [--sweep key=v1,v2,...]... [--schemes a,b,...]
//   secee_cli echo-config --config FILE [--experiment ID] [--set key=value]...
//   secee_cli dump-channels --config FILE [--set key=value]... [--trial T] [--out FILE]
//   secee_cli replay --manifest FILE [--out DIR] [--workers W]
//   secee_cli config-keys
//
// Config precedence: defaults < config file < experiment preset < --set/--seed.

#include "secee/channel.hpp"
#include "secee/config.hpp"
#include "secee/experiment.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace secee;

ConfigEntries parse_sets(const std::vector<std::string>& sets) {
  ConfigEntries out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("--set '" + s + "': expected key=value");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void print_summary(const ExperimentResult& r, const std::string& out_dir) {
  std::printf("%-20s %-12s %-20s %16s %12s %8s\n", "sweep_variable", "value", "scheme", "mean_ee_bits/J", "std",
              "am_iters");
  for (const auto& p : r.points)
    std::printf("%-20s %-12g %-20s %16.6g %12.4g %8.2f\n", p.sweep_variable.c_str(), p.sweep_value, p.scheme.c_str(),
                p.mean_ee_bits_per_joule, p.std_ee, p.mean_am_iters);
  std::printf("wrote %s/{points.csv,trace.csv,manifest.json}\n", out_dir.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure energy-efficiency optimization for RIS-aided multicast: experiment runner"};
  app.require_subcommand(1);

  std::string config_path, experiment = "custom", out_dir = "out", manifest_path, schemes;
  std::vector<std::string> sets, sweeps;
  int trials = -1, workers = 1, trial_index = 0;
  long long seed = -1;
  bool reproducible = false;

  auto* run = app.add_subcommand("run", "Run an experiment and write points.csv, trace.csv and manifest.json");
  run->add_option("--config", config_path, "INI config file")->required()->check(CLI::ExistingFile);
  run->add_option("--experiment", experiment, "fig5a|fig5b|fig5c|fig6|fig7a|fig7b|scaling|custom")
      ->check(CLI::IsMember(experiment_ids()));
  run->add_option("--set", sets, "Config override key=value (repeatable)");
  run->add_option("--trials", trials, "Trials per sweep point")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Master RNG seed (same as --set run.rng_seed=S)")->check(CLI::NonNegativeNumber);
  run->add_option("--workers", workers, "Worker threads over trials")->check(CLI::PositiveNumber);
  run->add_option("--out", out_dir, "Output directory");
  run->add_flag("--reproducible", reproducible, "Zero timing columns so reruns are byte-identical");
  run->add_option("--sweep", sweeps, "Replace the sweep: key=v1,v2,... (repeatable)");
  run->add_option("--schemes", schemes, "Comma list: proposed,fps,rps,ignore-uncertainty,quantized-L");

  auto* echo = app.add_subcommand("echo-config", "Print the effective config as INI");
  echo->add_option("--config", config_path, "INI config file")->required()->check(CLI::ExistingFile);
  echo->add_option("--experiment", experiment, "Apply this experiment's preset")->check(CLI::IsMember(experiment_ids()));
  echo->add_option("--set", sets, "Config override key=value (repeatable)");
  echo->add_option("--seed", seed, "Master RNG seed")->check(CLI::NonNegativeNumber);

  auto* dump = app.add_subcommand("dump-channels", "Write one trial's channel realization in the text fixture format");
  dump->add_option("--config", config_path, "INI config file")->required()->check(CLI::ExistingFile);
  dump->add_option("--set", sets, "Config override key=value (repeatable)");
  dump->add_option("--seed", seed, "Master RNG seed")->check(CLI::NonNegativeNumber);
  dump->add_option("--trial", trial_index, "Trial index")->check(CLI::NonNegativeNumber);
  std::string dump_out;
  dump->add_option("--out", dump_out, "Output file (default stdout)");

  auto* replay = app.add_subcommand("replay", "Rerun the experiment recorded in a manifest and compare output hashes");
  replay->add_option("--manifest", manifest_path, "manifest.json of a previous run")
      ->required()
      ->check(CLI::ExistingFile);
  replay->add_option("--out", out_dir, "Output directory");
  replay->add_option("--workers", workers, "Worker threads over trials")->check(CLI::PositiveNumber);

  auto* keys = app.add_subcommand("config-keys", "List every config key with unit and default");

  CLI11_PARSE(app, argc, argv);

  try {
    ConfigEntries overrides = parse_sets(sets);
    if (seed >= 0) overrides["run.rng_seed"] = std::to_string(seed);

    if (*keys) {
      for (const auto& f : config_schema())
        std::printf("%-28s %-8s %-12s %s\n", f.key.c_str(), f.unit.c_str(), f.default_value.c_str(),
                    f.description.c_str());
      return 0;
    }
    if (*echo) {
      const ExperimentSpec spec = preset_experiment(experiment);
      const ConfigEntries merged = merge_entries(read_ini_file(config_path), spec, overrides);
      std::cout << to_ini(load_config(merged, {}));
      return 0;
    }
    if (*dump) {
      const SystemConfig cfg = load_config(read_ini_file(config_path), overrides);
      const ChannelSet cs = generate_trial(cfg, cfg.rng_seed, static_cast<std::uint64_t>(trial_index));
      if (dump_out.empty()) {
        write_channels(std::cout, cs);
      } else {
        std::ofstream f(dump_out);
        if (!f) throw Error("cannot write " + dump_out);
        write_channels(f, cs);
      }
      return 0;
    }
    RunOptions opts;
    opts.workers = workers;
    if (*run) {
      ExperimentSpec spec = preset_experiment(experiment);
      if (trials > 0) spec.trials = trials;
      if (!sweeps.empty()) {
        spec.sweeps.clear();
        for (const auto& s : sweeps) spec.sweeps.push_back(parse_sweep(s));
      }
      if (!schemes.empty()) spec.schemes = split_commas(schemes);
      spec.out_dir = out_dir;
      opts.reproducible = reproducible;
      const ConfigEntries merged = merge_entries(read_ini_file(config_path), spec, overrides);
      load_config(merged, {});  // reject a bad config before any work
      print_summary(run_experiment(spec, merged, opts), out_dir);
      return 0;
    }
    if (*replay) {
      const Manifest m = parse_manifest(read_file(manifest_path));
      if (input_hash(m.spec, m.entries) != m.input_hash) throw Error("manifest: input hash mismatch");
      ExperimentSpec spec = m.spec;
      spec.out_dir = out_dir;
      opts.reproducible = m.reproducible;
      const ExperimentResult r = run_experiment(spec, m.entries, opts);
      print_summary(r, out_dir);
      const bool same_points = content_hash(r.points_csv) == m.points_hash;
      const bool same_trace = content_hash(r.trace_csv) == m.trace_hash;
      std::printf("points.csv %s, trace.csv %s\n", same_points ? "matches" : "differs",
                  same_trace ? "matches" : "differs");
      if (m.reproducible && !(same_points && same_trace)) {
        std::fprintf(stderr, "error: replay of a reproducible run produced different outputs\n");
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
