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

#include "acoc/sim.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

using namespace acoc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    ScenarioConfig small_config(std::size_t trials = 8)
    {
        ScenarioConfig cfg;
        cfg.user_count = 1500;
        cfg.trials = trials;
        cfg.master_seed = 42;
        return cfg;
    }
} // namespace

TEST_CASE("Scheme names")
{
    for (Scheme s : all_schemes)
        CHECK(parse_scheme(scheme_name(s)) == s);
    CHECK(scheme_name(Scheme::acoc) == "acoc");
    CHECK(scheme_name(Scheme::cow) == "cow");
    CHECK_FALSE(parse_scheme("ACOC").has_value());
    CHECK_FALSE(parse_scheme("").has_value());
}

TEST_CASE("Seed mixing reference values")
{
    // First SplitMix64 output for state 0.
    CHECK(mix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
    std::set<std::uint64_t> seeds;
    for (Scheme s : all_schemes)
        seeds.insert(scheme_seed(trial_seed(7, 3), s));
    CHECK(seeds.size() == all_schemes.size());
}

TEST_CASE("Rng maps the engine output to 53-bit doubles")
{
    // First mt19937_64 output for its default seed 5489.
    Rng rng(5489);
    CHECK(rng.uniform() == static_cast<double>(14514284786278117030ULL >> 11) * 0x1.0p-53);
    Rng r2(1);
    for (int i = 0; i < 10000; ++i)
    {
        const double u = r2.uniform(2.0, 5.0);
        CHECK(u >= 2.0);
        CHECK(u < 5.0);
    }
}

TEST_CASE("Scenario validation")
{
    ScenarioConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.effective_selection().min_height == cfg.fbs_height);
    cfg.user_count = 3;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.fbs_height = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.selection.max_cu_distance = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("User drops")
{
    ScenarioConfig cfg;
    cfg.master_seed = 42;
    const UserDrop a = drop_users(cfg, 0), b = drop_users(cfg, 0), c = drop_users(cfg, 1);
    CHECK(a.positions == b.positions);
    CHECK(a.positions != c.positions);
    CHECK(a.size() == cfg.user_count);
    CHECK(a.hotspot_center == GroundPoint{50, 50});

    cfg.user_count = 4;
    CHECK(drop_users(cfg, 0).size() == 4);
    CHECK_THROWS_AS(drop_users(cfg, cfg.trials), std::out_of_range);
}

TEST_CASE("User drop moments")
{
    ScenarioConfig cfg;
    cfg.user_count = 100000;
    cfg.hotspot_side = 80.0;
    const UserDrop d = drop_users(cfg, 0);
    double mx = 0.0, my = 0.0;
    for (const auto &p : d.positions)
    {
        CHECK((p.x >= 0.0 && p.x < 80.0 && p.y >= 0.0 && p.y < 80.0));
        mx += p.x;
        my += p.y;
    }
    mx /= d.size();
    my /= d.size();
    const double bound = 3.0 * 80.0 / std::sqrt(12.0 * 1e5);
    CHECK_THAT(mx, WithinAbs(40.0, bound));
    CHECK_THAT(my, WithinAbs(40.0, bound));
}

TEST_CASE("Placements")
{
    ScenarioConfig cfg;
    UserDrop users;
    users.positions = {{40, 40}, {46, 40}, {46, 46}, {40, 46}};
    users.hotspot_center = {50, 50};
    CugSelection sel;
    sel.cug1 = {0, 1};
    sel.cug2 = {2, 3};

    // Opposite sides of a square share a bisector: the centre is the ACOC point.
    const Placement acoc = place_acoc(sel, users, 50.0);
    CHECK_THAT(acoc.position.x, WithinAbs(43.0, 1e-12));
    CHECK_THAT(acoc.position.y, WithinAbs(43.0, 1e-12));
    CHECK(acoc.position.z == 50.0);

    const Placement sub = place_suboptimal(sel, users, 50.0);
    CHECK(sub.position == Point3{43, 40, 50});
    CHECK(sub.distances[0] == 50.0);

    const Placement cow = place_cow(cfg, sel, users);
    CHECK(cow.position == Point3{50, 50, 50});
    cfg.ground_bs_position = Point3{12, 34, 30};
    CHECK(place_cow(cfg, sel, users).position == Point3{12, 34, 30});

    for (std::uint64_t s = 0; s < 10000; ++s)
    {
        const Placement r = place_random(sel, users, 100.0, 50.0, s);
        CHECK((r.position.x >= 0.0 && r.position.x < 100.0 && r.position.y >= 0.0 && r.position.y < 100.0));
        CHECK(r.position.z == 50.0);
    }
    CHECK(place_random(sel, users, 100.0, 50.0, 5).position == place_random(sel, users, 100.0, 50.0, 5).position);
}

TEST_CASE("Random placement mean is near the square centre")
{
    UserDrop users;
    users.positions = {{40, 40}, {46, 40}, {46, 46}, {40, 46}};
    CugSelection sel;
    sel.cug1 = {0, 1};
    sel.cug2 = {2, 3};
    double mx = 0.0, my = 0.0;
    const int n = 20000;
    for (int s = 0; s < n; ++s)
    {
        const Placement r = place_random(sel, users, 100.0, 50.0, mix64(s));
        mx += r.position.x / n;
        my += r.position.y / n;
    }
    const double bound = 3.0 * 100.0 / std::sqrt(12.0 * n);
    CHECK_THAT(mx, WithinAbs(50.0, bound));
    CHECK_THAT(my, WithinAbs(50.0, bound));
}

TEST_CASE("Summary statistics")
{
    const SchemeSummary s = summarize(Scheme::random, {1.0, 2.0, 3.0, 4.0}, 1);
    CHECK(s.mean_se == 2.5);
    CHECK_THAT(s.ci95_half_width, WithinRel(1.96 * std::sqrt(5.0 / 3.0) / 2.0, 1e-15));
    CHECK(s.trials == 4);
    CHECK(s.flag_rate == 0.25);
    CHECK(summarize(Scheme::acoc, {7.0}, 0).ci95_half_width == 0.0);
}

TEST_CASE("Trials are reproducible")
{
    const ScenarioConfig cfg = small_config();
    const auto a = run_trial(cfg, {Scheme::acoc}, 0);
    const auto b = run_trial(cfg, {Scheme::acoc}, 0);
    REQUIRE(a.size() == 1);
    CHECK(a[0].total_se == b[0].total_se);
    CHECK(a[0].selection.has_value() == b[0].selection.has_value());
    if (a[0].selection)
        CHECK(a[0].selection->indices() == b[0].selection->indices());
}

TEST_CASE("Experiment output does not depend on the thread count")
{
    ScenarioConfig cfg = small_config(12);
    const std::vector<Scheme> schemes{Scheme::acoc, Scheme::suboptimal, Scheme::random, Scheme::cow};
    cfg.threads = 1;
    const ExperimentResult one = run_experiment(cfg, schemes);
    cfg.threads = 4;
    const ExperimentResult four = run_experiment(cfg, schemes);
    REQUIRE(one.trials.size() == 12 * schemes.size());
    for (std::size_t i = 0; i < one.trials.size(); ++i)
    {
        CHECK(one.trials[i].total_se == four.trials[i].total_se);
        CHECK(one.trials[i].scheme == schemes[i % schemes.size()]);
        CHECK(one.trials[i].trial == i / schemes.size());
    }
    for (std::size_t s = 0; s < schemes.size(); ++s)
    {
        CHECK(one.summaries[s].mean_se == four.summaries[s].mean_se);
        CHECK(one.summaries[s].ci95_half_width == four.summaries[s].ci95_half_width);
    }
}

TEST_CASE("Schemes share the drop and selection of a trial")
{
    const ScenarioConfig cfg = small_config();
    const auto r = run_trial(cfg, {Scheme::acoc, Scheme::suboptimal, Scheme::random, Scheme::cow}, 1);
    for (const auto &t : r)
    {
        CHECK(t.selection.has_value() == r[0].selection.has_value());
        if (t.selection)
            CHECK(t.selection->indices() == r[0].selection->indices());
    }
    if (r[0].selection)
    {
        // The aligned transmitter is never beaten on the same selection by the overhead-of-CUG-1 one by much.
        CHECK(r[0].placement->position.z == cfg.fbs_height);
        CHECK(r[1].placement->position.x == 0.5 * (drop_users(cfg, 1)[r[0].selection->cug1[0]].x +
                                                    drop_users(cfg, 1)[r[0].selection->cug1[1]].x));
    }
}

TEST_CASE("No selection yields zero SE with a flag")
{
    ScenarioConfig cfg;
    cfg.user_count = 4;
    cfg.hotspot_side = 10000.0;
    cfg.trials = 3;
    const ExperimentResult r = run_experiment(cfg, {Scheme::acoc});
    for (const auto &t : r.trials)
    {
        CHECK(t.no_selection);
        CHECK(t.total_se == 0.0);
        CHECK(t.flagged());
    }
    CHECK(r.summaries[0].flag_rate == 1.0);
    CHECK(r.summaries[0].mean_se == 0.0);
}

TEST_CASE("Heatmap layout")
{
    ScenarioConfig cfg = small_config(1);
    const HeatmapResult h = heatmap(cfg, 2);
    REQUIRE(h.positions.size() == 4);
    CHECK(h.positions[0] == GroundPoint{0, 0});
    CHECK(h.positions[1] == GroundPoint{100, 0});
    CHECK(h.positions[2] == GroundPoint{0, 100});
    CHECK(h.spacing() == 100.0);
    CHECK_THROWS_AS(heatmap(cfg, 1), std::invalid_argument);

    cfg.user_count = 4;
    cfg.hotspot_side = 10000.0;
    CHECK_THROWS_AS(heatmap(cfg, 3), InfeasibleScenarioError);
}

TEST_CASE("Closed-form optimum dominates the heatmap")
{
    ScenarioConfig cfg = small_config(30);
    int checked = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t)
    {
        HeatmapResult h;
        try
        {
            h = heatmap(cfg, 41, t);
        }
        catch (const InfeasibleScenarioError &)
        {
            continue;
        }
        ++checked;
        CHECK(h.optimum_se >= h.se[h.argmax()]);
    }
    CHECK(checked > 20);
}
