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

#include "acoc/config.hpp"

#include "acoc/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace acoc
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        double parse_double(const std::string &key, const std::string &value)
        {
            errno = 0;
            char *end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (value.empty() || end != value.c_str() + value.size() || errno == ERANGE || !std::isfinite(v))
                throw ConfigError("config: '" + key + "' expects a number, got '" + value + "'");
            return v;
        }

        std::uint64_t parse_unsigned(const std::string &key, const std::string &value)
        {
            errno = 0;
            char *end = nullptr;
            const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
            if (value.empty() || value[0] == '-' || end != value.c_str() + value.size() || errno == ERANGE)
                throw ConfigError("config: '" + key + "' expects a non-negative integer, got '" + value + "'");
            return v;
        }

        int parse_int(const std::string &key, const std::string &value)
        {
            errno = 0;
            char *end = nullptr;
            const long v = std::strtol(value.c_str(), &end, 10);
            if (value.empty() || end != value.c_str() + value.size() || errno == ERANGE || v < -1000 || v > 1000)
                throw ConfigError("config: '" + key + "' expects an integer, got '" + value + "'");
            return static_cast<int>(v);
        }

        std::array<int, 2> parse_mode_pair(const std::string &key, const std::string &value)
        {
            std::vector<int> modes;
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ','))
                modes.push_back(parse_int(key, trim(item)));
            if (modes.size() != 2)
                throw ConfigError("config: '" + key + "' expects exactly two comma-separated modes");
            return {modes[0], modes[1]};
        }
    } // namespace

    double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

    double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

    KeyValues parse_key_values(std::istream &in)
    {
        KeyValues kv;
        std::string line;
        for (std::size_t line_no = 1; std::getline(in, line); ++line_no)
        {
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
            if (!kv.emplace(key, value).second)
                throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
        return kv;
    }

    KeyValues read_key_value_file(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot read config file '" + path.string() + "'");
        return parse_key_values(in);
    }

    ScenarioConfig scenario_from_key_values(const KeyValues &kv)
    {
        ScenarioConfig cfg;
        std::optional<double> bs_x, bs_y, bs_h, aperture;

        using Setter = std::function<void(const std::string &, const std::string &)>;
        const std::map<std::string, Setter> setters{
            {"scenario.hotspot_side_m", [&](auto &k, auto &v) { cfg.hotspot_side = parse_double(k, v); }},
            {"scenario.user_count", [&](auto &k, auto &v) { cfg.user_count = parse_unsigned(k, v); }},
            {"scenario.fbs_height_m", [&](auto &k, auto &v) { cfg.fbs_height = parse_double(k, v); }},
            {"scenario.ground_bs_x_m", [&](auto &k, auto &v) { bs_x = parse_double(k, v); }},
            {"scenario.ground_bs_y_m", [&](auto &k, auto &v) { bs_y = parse_double(k, v); }},
            {"scenario.ground_bs_height_m", [&](auto &k, auto &v) { bs_h = parse_double(k, v); }},
            {"scenario.trials", [&](auto &k, auto &v) { cfg.trials = parse_unsigned(k, v); }},
            {"scenario.master_seed", [&](auto &k, auto &v) { cfg.master_seed = parse_unsigned(k, v); }},
            {"scenario.threads",
             [&](auto &k, auto &v) { cfg.threads = static_cast<unsigned>(parse_unsigned(k, v)); }},
            {"link.carrier_frequency_hz", [&](auto &k, auto &v) { cfg.link.carrier_frequency = parse_double(k, v); }},
            {"link.transmit_power_dbm",
             [&](auto &k, auto &v) { cfg.link.transmit_power = dbm_to_watts(parse_double(k, v)); }},
            {"link.transmit_power_w", [&](auto &k, auto &v) { cfg.link.transmit_power = parse_double(k, v); }},
            {"link.noise_power_dbm",
             [&](auto &k, auto &v) { cfg.link.noise_power = dbm_to_watts(parse_double(k, v)); }},
            {"link.noise_power_w", [&](auto &k, auto &v) { cfg.link.noise_power = parse_double(k, v); }},
            {"link.mode_set", [&](auto &k, auto &v) { cfg.link.mode_set = parse_mode_pair(k, v); }},
            {"link.ring_mode", [&](auto &k, auto &v) { cfg.link.ring_mode = parse_int(k, v); }},
            {"link.aperture_m2", [&](auto &k, auto &v) { aperture = parse_double(k, v); }},
            {"selection.d_mc_m", [&](auto &k, auto &v) { cfg.selection.max_cu_distance = parse_double(k, v); }},
            {"selection.r_sr_m", [&](auto &k, auto &v) { cfg.selection.service_radius = parse_double(k, v); }},
            {"selection.epsilon", [&](auto &k, auto &v) { cfg.selection.epsilon = parse_double(k, v); }},
        };

        if (kv.contains("link.transmit_power_dbm") && kv.contains("link.transmit_power_w"))
            throw ConfigError("config: give transmit power in dBm or watts, not both");
        if (kv.contains("link.noise_power_dbm") && kv.contains("link.noise_power_w"))
            throw ConfigError("config: give noise power in dBm or watts, not both");

        for (const auto &[key, value] : kv)
        {
            const auto it = setters.find(key);
            if (it == setters.end())
                throw ConfigError("config: unknown key '" + key + "'");
            it->second(key, value);
        }

        // Aperture follows the carrier unless given explicitly.
        cfg.link.aperture = aperture.value_or(isotropic_aperture(cfg.link.wavelength()));
        if (bs_x || bs_y || bs_h)
            cfg.ground_bs_position = Point3{bs_x.value_or(cfg.hotspot_center().x),
                                            bs_y.value_or(cfg.hotspot_center().y), bs_h.value_or(cfg.fbs_height)};

        try
        {
            cfg.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(std::string("config: ") + e.what());
        }
        return cfg;
    }

    KeyValues describe(const ScenarioConfig &cfg)
    {
        const Point3 bs = cfg.ground_bs();
        return {
            {"scenario.hotspot_side_m", format_number(cfg.hotspot_side)},
            {"scenario.user_count", std::to_string(cfg.user_count)},
            {"scenario.fbs_height_m", format_number(cfg.fbs_height)},
            {"scenario.ground_bs_x_m", format_number(bs.x)},
            {"scenario.ground_bs_y_m", format_number(bs.y)},
            {"scenario.ground_bs_height_m", format_number(bs.z)},
            {"scenario.trials", std::to_string(cfg.trials)},
            {"scenario.master_seed", std::to_string(cfg.master_seed)},
            {"link.carrier_frequency_hz", format_number(cfg.link.carrier_frequency)},
            {"link.transmit_power_w", format_number(cfg.link.transmit_power)},
            {"link.noise_power_w", format_number(cfg.link.noise_power)},
            {"link.mode_set", std::to_string(cfg.link.mode_set[0]) + "," + std::to_string(cfg.link.mode_set[1])},
            {"link.ring_mode", std::to_string(cfg.link.ring_mode)},
            {"link.aperture_m2", format_number(cfg.link.aperture)},
            {"link.wavelength_m", format_number(cfg.link.wavelength())},
            {"selection.d_mc_m", format_number(cfg.selection.max_cu_distance)},
            {"selection.r_sr_m", format_number(cfg.selection.service_radius)},
            {"selection.epsilon", format_number(cfg.selection.epsilon)},
        };
    }

} // namespace acoc
