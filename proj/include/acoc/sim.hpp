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

#pragma once

#include "acoc/geometry.hpp"
#include "acoc/link.hpp"
#include "acoc/selection.hpp"
#include "acoc/user_drop.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace acoc
{
    /// Transmitter placement strategies compared in the Monte Carlo runs.
    enum class Scheme
    {
        acoc,       // bisector intersection at H_m: both CUGs aligned
        suboptimal, // above CUG 1's midpoint: only CUG 1 aligned
        random,     // uniform over the hotspot at H_m
        cow,        // fixed ground base station
    };

    std::string_view scheme_name(Scheme s);
    std::optional<Scheme> parse_scheme(std::string_view name);
    inline constexpr std::array all_schemes{Scheme::acoc, Scheme::suboptimal, Scheme::random, Scheme::cow};

    struct ScenarioConfig
    {
        double hotspot_side = 100.0; // m, users live in [0, side]^2
        std::size_t user_count = 4000;
        double fbs_height = 50.0;    // H_m, m
        std::optional<Point3> ground_bs_position; // default: hotspot centre at fbs_height
        LinkConfig link;
        SelectionConfig selection;   // min_height is taken from fbs_height
        std::size_t trials = 200;
        std::uint64_t master_seed = 1;
        unsigned threads = 0;        // 0: one per hardware thread

        void validate() const;
        SelectionConfig effective_selection() const;
        Point3 ground_bs() const;
        GroundPoint hotspot_center() const { return {0.5 * hotspot_side, 0.5 * hotspot_side}; }
    };

    /// SplitMix64 finalizer.
    std::uint64_t mix64(std::uint64_t x);

    /// Per-trial seed; stable across platforms and independent of the scheme.
    std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

    /// Seed for scheme-specific randomness within a trial.
    std::uint64_t scheme_seed(std::uint64_t trial_seed, Scheme scheme);

    /// mt19937_64 with a portable mapping to doubles (std distributions are implementation-defined).
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        /// Uniform on [0, 1) with 53 random bits.
        double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    private:
        std::mt19937_64 engine_;
    };

    /// i.i.d. uniform users over the hotspot square. Throws std::out_of_range if trial_index >= trials.
    UserDrop drop_users(const ScenarioConfig &cfg, std::size_t trial_index);

    /// Bisector intersection at H_m.
    Placement place_acoc(const CugSelection &sel, const UserDrop &users, double height);

    /// Directly above CUG 1's chord midpoint at H_m.
    Placement place_suboptimal(const CugSelection &sel, const UserDrop &users, double height);

    /// Uniform over [0, side]^2 at H_m, drawn from `seed`.
    Placement place_random(const CugSelection &sel, const UserDrop &users, double side, double height,
                           std::uint64_t seed);

    /// The configured ground base station.
    Placement place_cow(const ScenarioConfig &cfg, const CugSelection &sel, const UserDrop &users);

    Placement place_scheme(Scheme scheme, const ScenarioConfig &cfg, const CugSelection &sel, const UserDrop &users,
                           std::uint64_t trial_seed);

    /// Chord bounds at the placement's true transmission distances.
    ConstraintCheck verify_placement(const Placement &placement, const CugSelection &sel, const ScenarioConfig &cfg);

    struct TrialResult
    {
        std::size_t trial = 0;
        Scheme scheme = Scheme::acoc;
        std::optional<CugSelection> selection;
        std::optional<Placement> placement;
        LinkReport link;
        double total_se = 0.0;
        bool no_selection = false;
        bool infeasible = false;
        bool inseparable = false;

        bool flagged() const { return no_selection || infeasible || inseparable; }
    };

    struct SchemeSummary
    {
        Scheme scheme = Scheme::acoc;
        double mean_se = 0.0;
        double ci95_half_width = 0.0; // 1.96 * sample std / sqrt(n)
        std::size_t trials = 0;
        double flag_rate = 0.0;
    };

    struct ExperimentResult
    {
        std::vector<TrialResult> trials; // ordered by trial, then by requested scheme
        std::vector<SchemeSummary> summaries;
    };

    /// Runs every trial once: drop, greedy selection, then each scheme on that same drop and
    /// selection. Trials without a selection count as zero SE with the no_selection flag.
    /// Trials may run concurrently; the output does not depend on scheduling.
    ExperimentResult run_experiment(const ScenarioConfig &cfg, const std::vector<Scheme> &schemes);

    /// One trial (exposed for tests and the heatmap).
    std::vector<TrialResult> run_trial(const ScenarioConfig &cfg, const std::vector<Scheme> &schemes,
                                       std::size_t trial_index);

    SchemeSummary summarize(Scheme scheme, const std::vector<double> &se, std::size_t flagged);

    class InfeasibleScenarioError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct HeatmapResult
    {
        std::size_t grid = 0;
        std::vector<GroundPoint> positions; // row-major, y outer
        std::vector<double> se;
        GroundPoint optimum;                // closed-form ACOC position
        double optimum_se = 0.0;
        CugSelection selection;
        UserDrop users;

        /// Index of the largest SE (first one on ties).
        std::size_t argmax() const;
        double spacing() const;
    };

    /// SE over a grid x grid lattice covering the hotspot square at H_m, for the drop and
    /// selection of `trial_index`. Throws InfeasibleScenarioError when that drop has no selection.
    HeatmapResult heatmap(const ScenarioConfig &cfg, std::size_t grid, std::size_t trial_index = 0);

} // namespace acoc
