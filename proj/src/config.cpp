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

#include "secee/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace secee {

namespace {

// Shortest text that parses back to the same double.
std::string fmt_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw Error("config field '" + key + "': expected a number, got '" + raw + "'");
  }
  if (pos != s.size()) throw Error("config field '" + key + "': trailing characters in '" + raw + "'");
  return v;
}

long long parse_int(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error("config field '" + key + "': expected an integer, got '" + raw + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& raw) {
  std::string s = trim(raw);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw Error("config field '" + key + "': expected a boolean, got '" + raw + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& raw) {
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw Error("config field '" + key + "': empty list");
  return out;
}

struct Field {
  SchemaField schema;
  std::function<void(SystemConfig&, const std::string&)> set;
  std::function<std::string(const SystemConfig&)> get;
};

#define SECEE_DOUBLE(KEY, UNIT, DESC, MEMBER)                                                        \
  Field {                                                                                            \
    {KEY, UNIT, fmt_double(SystemConfig{}.MEMBER), DESC},                                            \
        [](SystemConfig& c, const std::string& v) { c.MEMBER = parse_double(KEY, v); },              \
        [](const SystemConfig& c) { return fmt_double(c.MEMBER); }                                   \
  }
#define SECEE_INT(KEY, UNIT, DESC, MEMBER)                                                           \
  Field {                                                                                            \
    {KEY, UNIT, std::to_string(SystemConfig{}.MEMBER), DESC},                                        \
        [](SystemConfig& c, const std::string& v) {                                                  \
          c.MEMBER = static_cast<decltype(c.MEMBER)>(parse_int(KEY, v));                             \
        },                                                                                           \
        [](const SystemConfig& c) { return std::to_string(c.MEMBER); }                               \
  }
#define SECEE_DBM(KEY, DESC, MEMBER)                                                                 \
  Field {                                                                                            \
    {KEY, "dBm", fmt_double(watts_to_dbm(SystemConfig{}.MEMBER)), DESC},                             \
        [](SystemConfig& c, const std::string& v) { c.MEMBER = dbm_to_watts(parse_double(KEY, v)); }, \
        [](const SystemConfig& c) { return fmt_double(watts_to_dbm(c.MEMBER)); }                     \
  }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      SECEE_INT("system.n_antennas", "-", "BS antennas N", n_antennas),
      SECEE_INT("system.n_elements", "-", "RIS reflecting elements M", n_elements),
      SECEE_INT("system.n_users", "-", "legitimate users K", n_users),
      SECEE_INT("system.n_eves", "-", "eavesdroppers J", n_eves),
      SECEE_DBM("power.p_max_dbm", "BS transmit power budget", p_max_w),
      SECEE_DOUBLE("power.eta", "-", "power-amplifier efficiency in (0,1]", eta),
      Field{{"power.spectral_efficiency", "bool", "false", "drop the amplifier term (1/eta = 0)"},
            [](SystemConfig& c, const std::string& v) {
              c.spectral_efficiency = parse_bool("power.spectral_efficiency", v);
            },
            [](const SystemConfig& c) { return std::string(c.spectral_efficiency ? "true" : "false"); }},
      SECEE_DBM("power.p_a_dbm", "BS hardware static power", p_a_w),
      SECEE_DBM("power.p_c_dbm", "circuit power per user", p_c_w),
      SECEE_DBM("power.p_s_dbm", "static power per RIS element", p_s_w),
      Field{{"secrecy.sop_bound", "-", "0.1", "SOP bound per user (comma list or single value)"},
            [](SystemConfig& c, const std::string& v) { c.sop_bound = parse_list("secrecy.sop_bound", v); },
            [](const SystemConfig& c) {
              std::string s;
              for (std::size_t i = 0; i < c.sop_bound.size(); ++i) s += (i ? "," : "") + fmt_double(c.sop_bound[i]);
              return s;
            }},
      SECEE_DOUBLE("secrecy.eve_mu_r2", "-", "variance of RIS-Eve small-scale fading", eve_mu_r2),
      SECEE_DOUBLE("secrecy.eve_mu_d2", "-", "variance of BS-Eve small-scale fading", eve_mu_d2),
      SECEE_DOUBLE("noise.user_psd_dbm_hz", "dBm/Hz", "user noise PSD", noise_psd_dbm_hz),
      SECEE_DOUBLE("noise.eve_psd_dbm_hz", "dBm/Hz", "eavesdropper noise PSD", eve_noise_psd_dbm_hz),
      SECEE_DOUBLE("noise.bandwidth_hz", "Hz", "system bandwidth", bandwidth_hz),
      SECEE_DOUBLE("geometry.bs_x", "m", "BS x", geometry.bs_x),
      SECEE_DOUBLE("geometry.bs_y", "m", "BS y", geometry.bs_y),
      SECEE_DOUBLE("geometry.ris_x", "m", "RIS x", geometry.ris_x),
      SECEE_DOUBLE("geometry.ris_y", "m", "RIS y", geometry.ris_y),
      SECEE_DOUBLE("geometry.user_center_x", "m", "user disk center x", geometry.user_center_x),
      SECEE_DOUBLE("geometry.user_center_y", "m", "user disk center y", geometry.user_center_y),
      SECEE_DOUBLE("geometry.user_radius", "m", "user disk radius", geometry.user_radius),
      SECEE_DOUBLE("geometry.eve_ris_min", "m", "minimum Eve-RIS distance", geometry.eve_ris_min),
      SECEE_DOUBLE("geometry.eve_ris_max", "m", "maximum Eve-RIS distance", geometry.eve_ris_max),
      SECEE_DOUBLE("pathloss.ref_loss_db", "dB", "loss at the reference distance", pathloss.ref_loss_db),
      SECEE_DOUBLE("pathloss.ref_dist_m", "m", "reference distance", pathloss.ref_dist_m),
      SECEE_DOUBLE("pathloss.exp_bs_ris", "-", "BS-RIS exponent", pathloss.exp_bs_ris),
      SECEE_DOUBLE("pathloss.exp_ris_user", "-", "RIS-user exponent", pathloss.exp_ris_user),
      SECEE_DOUBLE("pathloss.exp_ris_eve", "-", "RIS-Eve exponent", pathloss.exp_ris_eve),
      SECEE_DOUBLE("pathloss.exp_bs_user", "-", "BS-user exponent", pathloss.exp_bs_user),
      SECEE_DOUBLE("pathloss.exp_bs_eve", "-", "BS-Eve exponent", pathloss.exp_bs_eve),
      SECEE_INT("run.rng_seed", "-", "master RNG seed", rng_seed),
      Field{{"run.quantization_levels", "-", "continuous", "RIS phase levels L or 'continuous'"},
            [](SystemConfig& c, const std::string& v) {
              const std::string s = trim(v);
              c.quantization_levels =
                  s == "continuous" ? 0 : static_cast<int>(parse_int("run.quantization_levels", s));
            },
            [](const SystemConfig& c) {
              return c.quantization_levels == 0 ? std::string("continuous")
                                                : std::to_string(c.quantization_levels);
            }},
      SECEE_DOUBLE("solver.tol", "-", "relative objective change stopping tolerance", solver.tol),
      SECEE_INT("solver.max_am", "-", "alternating-maximization rounds", solver.max_am),
      SECEE_INT("solver.max_pfp_d1", "-", "beamformer path-following rounds", solver.max_pfp_d1),
      SECEE_INT("solver.max_qt", "-", "quadratic-transform rounds", solver.max_qt),
      SECEE_INT("solver.max_pg", "-", "projected-gradient iterations", solver.max_pg),
      SECEE_INT("solver.max_pfp_q2", "-", "phase path-following rounds", solver.max_pfp_q2),
      SECEE_INT("solver.max_manifold", "-", "manifold iterations per round", solver.max_manifold),
      SECEE_DOUBLE("solver.armijo_init", "-", "initial step (units of sqrt(p_max)/||grad||)", solver.armijo_init),
      SECEE_DOUBLE("solver.armijo_shrink", "-", "backtracking factor", solver.armijo_shrink),
      SECEE_DOUBLE("solver.armijo_c", "-", "sufficient-increase constant", solver.armijo_c),
      SECEE_INT("solver.armijo_max", "-", "maximum backtracks", solver.armijo_max),
      SECEE_DOUBLE("solver.beta", "-", "manifold momentum shrinkage", solver.beta),
      Field{{"solver.momentum", "bool", "true", "use accelerated (momentum) iterations"},
            [](SystemConfig& c, const std::string& v) { c.solver.momentum = parse_bool("solver.momentum", v); },
            [](const SystemConfig& c) { return std::string(c.solver.momentum ? "true" : "false"); }},
  };
  return table;
}

#undef SECEE_DOUBLE
#undef SECEE_INT
#undef SECEE_DBM

}  // namespace

const std::vector<SchemaField>& config_schema() {
  static const std::vector<SchemaField> schema = [] {
    std::vector<SchemaField> out;
    for (const auto& f : fields()) out.push_back(f.schema);
    return out;
  }();
  return schema;
}

ConfigEntries parse_ini(const std::string& text) {
  // Inline comments start at a ';' or '#' that follows whitespace.
  std::string stripped;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    for (std::size_t i = 1; i < line.size(); ++i) {
      if ((line[i] == ';' || line[i] == '#') && (line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line.erase(i);
        break;
      }
    }
    stripped += line;
    stripped += '\n';
  }
  boost::property_tree::ptree tree;
  std::istringstream in(stripped);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw Error(std::string("config parse error: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  ConfigEntries out;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw Error("config key '" + section + "' must live inside a [section]");
    for (const auto& [key, value] : body) out[section + "." + key] = value.data();
  }
  return out;
}

ConfigEntries read_ini_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ini(ss.str());
}

void apply_entries(SystemConfig& cfg, const ConfigEntries& entries) {
  for (const auto& [key, value] : entries) {
    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return f.schema.key == key; });
    if (it == table.end()) throw Error("unknown config field '" + key + "'");
    it->set(cfg, value);
  }
}

SystemConfig validate_config(SystemConfig cfg) {
  auto require = [](bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw Error("config field '" + field + "' " + what);
  };
  require(cfg.n_antennas >= 1, "system.n_antennas", "must be >= 1");
  require(cfg.n_elements >= 1, "system.n_elements", "must be >= 1");
  require(cfg.n_users >= 1, "system.n_users", "must be >= 1");
  require(cfg.n_eves >= 1, "system.n_eves", "must be >= 1");
  require(std::isfinite(cfg.p_max_w) && cfg.p_max_w > 0.0, "power.p_max_dbm", "must give p_max > 0");
  require(cfg.eta > 0.0 && cfg.eta <= 1.0, "power.eta", "out of (0,1]");
  require(cfg.p_a_w >= 0.0 && cfg.p_c_w >= 0.0 && cfg.p_s_w >= 0.0, "power", "static powers must be >= 0");
  require(cfg.p_a_w + cfg.n_users * cfg.p_c_w + cfg.n_elements * cfg.p_s_w > 0.0, "power",
          "static power must be > 0");
  require(cfg.sop_bound.size() == 1 || static_cast<int>(cfg.sop_bound.size()) == cfg.n_users,
          "secrecy.sop_bound", "needs one value or one per user");
  for (double e : cfg.sop_bound) require(e > 0.0 && e < 1.0, "secrecy.sop_bound", "sop_bound out of (0,1)");
  require(cfg.eve_mu_r2 > 0.0 && cfg.eve_mu_d2 > 0.0, "secrecy.eve_mu_r2", "variances must be > 0");
  require(cfg.bandwidth_hz > 0.0, "noise.bandwidth_hz", "must be > 0");
  require(std::isfinite(cfg.noise_psd_dbm_hz), "noise.user_psd_dbm_hz", "must be finite");
  require(std::isfinite(cfg.eve_noise_psd_dbm_hz), "noise.eve_psd_dbm_hz", "must be finite");
  const auto& g = cfg.geometry;
  require(g.user_radius >= 0.0, "geometry.user_radius", "must be >= 0");
  require(g.eve_ris_min > 0.0 && g.eve_ris_max >= g.eve_ris_min, "geometry.eve_ris_min",
          "needs 0 < eve_ris_min <= eve_ris_max");
  require(cfg.pathloss.ref_dist_m > 0.0, "pathloss.ref_dist_m", "must be > 0");
  require(cfg.quantization_levels == 0 || cfg.quantization_levels >= 2, "run.quantization_levels",
          "must be 'continuous' or >= 2");
  const auto& s = cfg.solver;
  require(s.tol > 0.0, "solver.tol", "must be > 0");
  require(s.max_am >= 1 && s.max_pfp_d1 >= 1 && s.max_qt >= 1 && s.max_pg >= 1 && s.max_pfp_q2 >= 1 &&
              s.max_manifold >= 1,
          "solver", "iteration limits must be >= 1");
  require(s.armijo_init > 0.0, "solver.armijo_init", "must be > 0");
  require(s.armijo_shrink > 0.0 && s.armijo_shrink < 1.0, "solver.armijo_shrink", "out of (0,1)");
  require(s.armijo_c > 0.0 && s.armijo_c < 1.0, "solver.armijo_c", "out of (0,1)");
  require(s.armijo_max >= 1, "solver.armijo_max", "must be >= 1");
  require(s.beta > 0.0, "solver.beta", "must be > 0");

  // PSD (dBm/Hz) + 10 log10(B) gives the in-band noise power in dBm.
  cfg.sigma2_user_w = dbm_to_watts(cfg.noise_psd_dbm_hz + 10.0 * std::log10(cfg.bandwidth_hz));
  cfg.sigma2_eve_w = dbm_to_watts(cfg.eve_noise_psd_dbm_hz + 10.0 * std::log10(cfg.bandwidth_hz));
  return cfg;
}

SystemConfig load_config(const ConfigEntries& file_entries, const ConfigEntries& overrides) {
  SystemConfig cfg;
  apply_entries(cfg, file_entries);
  apply_entries(cfg, overrides);
  return validate_config(cfg);
}

ConfigEntries to_entries(const SystemConfig& cfg) {
  ConfigEntries out;
  for (const auto& f : fields()) out[f.schema.key] = f.get(cfg);
  return out;
}

std::string to_ini(const SystemConfig& cfg) {
  std::string out;
  std::string section;
  for (const auto& f : fields()) {
    const auto dot = f.schema.key.find('.');
    const std::string sec = f.schema.key.substr(0, dot);
    if (sec != section) {
      out += (section.empty() ? "" : "\n") + std::string("[") + sec + "]\n";
      section = sec;
    }
    out += f.schema.key.substr(dot + 1) + " = " + f.get(cfg) + "\n";
  }
  return out;
}

PowerModel PowerModel::from_config(const SystemConfig& cfg) {
  PowerModel pm;
  pm.inv_eta = cfg.spectral_efficiency ? 0.0 : 1.0 / cfg.eta;
  pm.p_a = cfg.p_a_w;
  pm.p_c = cfg.p_c_w;
  pm.p_s = cfg.p_s_w;
  pm.n_users = cfg.n_users;
  pm.n_elements = cfg.n_elements;
  if (!(pm.static_power() > 0.0)) throw Error("power model: static power must be > 0");
  return pm;
}

}  // namespace secee
