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

// Experiment commands behind the acoc executable. Each returns a process exit code and writes
// its CSV plus a "<out>.manifest.json" describing how to reproduce it.

#pragma once

#include "acoc/config.hpp"
#include "acoc/sim.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace acoc::cli
{
    inline constexpr const char *version = "0.1.0";

    enum ExitCode : int
    {
        exit_ok = 0,
        exit_check_failed = 1,
        exit_config_error = 2,
        exit_infeasible = 3,
    };

    enum class SweepAxis
    {
        height,
        users
    };

    struct CommonOptions
    {
        std::optional<std::filesystem::path> config; // defaults when absent
        std::optional<std::uint64_t> seed;           // overrides scenario.master_seed
        std::optional<std::size_t> trials;           // overrides scenario.trials
    };

    /// Config file (if any) plus command-line overrides. Throws ConfigError.
    ScenarioConfig load_config(const CommonOptions &opts, KeyValues *echo = nullptr);

    /// Header, grid * grid rows (y outer, x inner) with marker 0, then the closed-form optimum with marker 1.
    void write_heatmap_csv(const HeatmapResult &result, std::ostream &out);

    struct SweepRow
    {
        double axis_value = 0.0;
        SchemeSummary summary;
    };

    void write_sweep_csv(const std::vector<SweepRow> &rows, std::ostream &out);

    /// Applies one sweep value to a scenario. Throws ConfigError on a value the axis cannot take.
    ScenarioConfig apply_axis(const ScenarioConfig &base, SweepAxis axis, double value);

    std::vector<SweepRow> run_sweep(const ScenarioConfig &base, SweepAxis axis, const std::vector<double> &values,
                                    const std::vector<Scheme> &schemes);

    int cmd_heatmap(const CommonOptions &opts, std::size_t grid, const std::filesystem::path &out,
                    std::ostream &log);

    int cmd_sweep(const CommonOptions &opts, SweepAxis axis, const std::vector<double> &values,
                  const std::vector<Scheme> &schemes, const std::filesystem::path &out, std::ostream &log);

    /// Fast invariant checks; one PASS/FAIL line each on `report`.
    int cmd_validate(const CommonOptions &opts, std::ostream &report);

    std::filesystem::path manifest_path(const std::filesystem::path &out);

} // namespace acoc::cli
