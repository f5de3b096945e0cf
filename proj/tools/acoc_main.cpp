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

#include "acoc/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace
{
    std::vector<std::string> split_list(const std::string &list)
    {
        std::vector<std::string> items;
        std::stringstream ss(list);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            item.erase(0, item.find_first_not_of(" \t"));
            item.erase(item.find_last_not_of(" \t") + 1);
            if (!item.empty())
                items.push_back(item);
        }
        return items;
    }

    void add_common(CLI::App *cmd, std::string &config, std::optional<std::uint64_t> &seed,
                    std::optional<std::size_t> &trials)
    {
        cmd->add_option("--config", config, "Scenario file (key = value)");
        cmd->add_option("--seed", seed, "Master seed, overrides scenario.master_seed");
        cmd->add_option("--trials", trials, "Monte Carlo trials, overrides scenario.trials");
    }
} // namespace

int main(int argc, char **argv)
{
    using namespace acoc::cli;

    CLI::App app{"Air-to-ground cooperative OAM link simulator"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    std::string config, out, axis = "height", values, schemes = "acoc,suboptimal,random,cow";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::size_t grid = 101;

    auto *heatmap = app.add_subcommand("heatmap", "SE over a grid of transmitter positions for one drop");
    add_common(heatmap, config, seed, trials);
    heatmap->add_option("--grid", grid, "Grid points per side")->capture_default_str();
    heatmap->add_option("--out", out, "Output CSV")->required();

    auto *sweep = app.add_subcommand("sweep", "Mean SE per scheme across heights or user counts");
    add_common(sweep, config, seed, trials);
    sweep->add_option("--axis", axis, "height or users")
        ->check(CLI::IsMember({"height", "users"}))
        ->capture_default_str();
    sweep->add_option("--values", values, "Comma-separated axis values")->required();
    sweep->add_option("--schemes", schemes, "Comma-separated schemes")->capture_default_str();
    sweep->add_option("--out", out, "Output CSV")->required();

    auto *validate = app.add_subcommand("validate", "Run the fast invariant checks");
    add_common(validate, config, seed, trials);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config_error;
    }

    CommonOptions opts;
    if (!config.empty())
        opts.config = config;
    opts.seed = seed;
    opts.trials = trials;

    if (*heatmap)
        return cmd_heatmap(opts, grid, out, std::cerr);

    if (*sweep)
    {
        std::vector<double> parsed_values;
        for (const auto &v : split_list(values))
        {
            try
            {
                std::size_t used = 0;
                parsed_values.push_back(std::stod(v, &used));
                if (used != v.size())
                    throw std::invalid_argument(v);
            }
            catch (const std::exception &)
            {
                std::cerr << "error: bad sweep value '" << v << "'\n";
                return exit_config_error;
            }
        }
        std::vector<acoc::Scheme> parsed_schemes;
        for (const auto &s : split_list(schemes))
        {
            const auto scheme = acoc::parse_scheme(s);
            if (!scheme)
            {
                std::cerr << "error: unknown scheme '" << s << "'\n";
                return exit_config_error;
            }
            parsed_schemes.push_back(*scheme);
        }
        return cmd_sweep(opts, axis == "height" ? SweepAxis::height : SweepAxis::users, parsed_values,
                         parsed_schemes, out, std::cerr);
    }

    return cmd_validate(opts, std::cout);
}
