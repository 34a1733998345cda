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

#ifndef SECEE_CONFIG_HPP
#define SECEE_CONFIG_HPP

#include "secee/types.hpp"

#include <map>
#include <string>

namespace secee {

/// Flat "section.key" -> value view of an INI config file.
using ConfigEntries = std::map<std::string, std::string>;

struct SchemaField {
  std::string key;  // "section.key"
  std::string unit;
  std::string default_value;
  std::string description;
};

/// Every accepted config key with its unit and default.
const std::vector<SchemaField>& config_schema();

/// Parse INI text ("[section]" headers, "key = value" lines, full-line or inline ";"/"#" comments).
ConfigEntries parse_ini(const std::string& text);
ConfigEntries read_ini_file(const std::string& path);

/// Apply entries on top of cfg. Unknown keys or malformed values raise Error.
void apply_entries(SystemConfig& cfg, const ConfigEntries& entries);

/// Check every invariant and populate derived fields (noise powers).
/// Throws Error naming the offending field.
SystemConfig validate_config(SystemConfig cfg);

/// Defaults, then file entries, then overrides; validated.
SystemConfig load_config(const ConfigEntries& file_entries, const ConfigEntries& overrides);

/// Canonical INI rendering of every schema field (dBm for powers).
std::string to_ini(const SystemConfig& cfg);
ConfigEntries to_entries(const SystemConfig& cfg);

}  // namespace secee

#endif  // SECEE_CONFIG_HPP
