// SPDX-License-Identifier: Apache-2.0
//
// acoc-sim: air-to-ground cooperative OAM link simulator
// Copyright (C) 2026 The acoc-sim Authors
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

// Flat key-value scenario files:
//
//   # comment
//   scenario.user_count = 4000
//   link.transmit_power_dbm = 30
//
// Keys are dotted "section.name"; unknown keys are rejected. Powers may be given in dBm
// (*_dbm) or watts (*_w) and are converted once at load time.

#pragma once

#include "acoc/sim.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace acoc
{
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    using KeyValues = std::map<std::string, std::string>;

    double dbm_to_watts(double dbm);
    double watts_to_dbm(double watts);

    /// Throws ConfigError on malformed lines or duplicate keys.
    KeyValues parse_key_values(std::istream &in);

    /// Defaults overridden by `kv`. Throws ConfigError on unknown keys, unparsable values or
    /// a configuration that fails validation.
    ScenarioConfig scenario_from_key_values(const KeyValues &kv);

    /// Throws ConfigError if the file cannot be read.
    KeyValues read_key_value_file(const std::filesystem::path &path);

    /// Every effective parameter, keyed like the config file (dBm powers written in watts).
    KeyValues describe(const ScenarioConfig &cfg);

} // namespace acoc
