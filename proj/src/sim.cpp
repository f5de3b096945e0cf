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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace acoc
{
    std::string_view scheme_name(Scheme s)
    {
        switch (s)
        {
        case Scheme::acoc:
            return "acoc";
        case Scheme::suboptimal:
            return "suboptimal";
        case Scheme::random:
            return "random";
        case Scheme::cow:
            return "cow";
        }
        return "unknown";
    }

    std::optional<Scheme> parse_scheme(std::string_view name)
    {
        for (const Scheme s : all_schemes)
            if (scheme_name(s) == name)
                return s;
        return std::nullopt;
    }

    void ScenarioConfig::validate() const
    {
        if (!(hotspot_side > 0.0) || !std::isfinite(hotspot_side))
            throw std::invalid_argument("scenario: hotspot side must be positive");
        if (user_count < 4)
            throw std::invalid_argument("scenario: at least 4 users are required");
        if (!(fbs_height > 0.0) || !std::isfinite(fbs_height))
            throw std::invalid_argument("scenario: FBS height must be positive");
        if (trials < 1)
            throw std::invalid_argument("scenario: at least one trial is required");
        if (ground_bs_position && !(ground_bs_position->z > 0.0))
            throw std::invalid_argument("scenario: ground BS height must be positive");
        link.validate();
        effective_selection().validate();
    }

    SelectionConfig ScenarioConfig::effective_selection() const
    {
        SelectionConfig s = selection;
        s.min_height = fbs_height;
        return s;
    }

    Point3 ScenarioConfig::ground_bs() const
    {
        return ground_bs_position.value_or(at_height(hotspot_center(), fbs_height));
    }

    std::uint64_t mix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index)
    {
        return mix64(mix64(master_seed) ^ trial_index);
    }

    std::uint64_t scheme_seed(std::uint64_t seed, Scheme scheme)
    {
        return mix64(seed ^ (0xa5a5a5a5ULL + static_cast<std::uint64_t>(scheme)));
    }

    UserDrop drop_users(const ScenarioConfig &cfg, std::size_t trial_index)
    {
        if (trial_index >= cfg.trials)
            throw std::out_of_range("trial index beyond configured trial count");
        UserDrop drop;
        drop.drop_seed = trial_seed(cfg.master_seed, trial_index);
        drop.hotspot_center = cfg.hotspot_center();
        drop.positions.reserve(cfg.user_count);
        Rng rng(drop.drop_seed);
        for (std::size_t i = 0; i < cfg.user_count; ++i)
        {
            const double x = rng.uniform(0.0, cfg.hotspot_side);
            const double y = rng.uniform(0.0, cfg.hotspot_side);
            drop.positions.push_back({x, y});
        }
        return drop;
    }

    namespace
    {
        Placement place_at(const GroundPoint &ground, double height, const CugSelection &sel, const UserDrop &users)
        {
            return make_placement(at_height(ground, height), chord_midpoint(users[sel.cug1[0]], users[sel.cug1[1]]),
                                  chord_midpoint(users[sel.cug2[0]], users[sel.cug2[1]]));
        }
    } // namespace

    Placement place_acoc(const CugSelection &sel, const UserDrop &users, double height)
    {
        return aligned_placement(sel.indices(), users, height);
    }

    Placement place_suboptimal(const CugSelection &sel, const UserDrop &users, double height)
    {
        return place_at(chord_midpoint(users[sel.cug1[0]], users[sel.cug1[1]]), height, sel, users);
    }

    Placement place_random(const CugSelection &sel, const UserDrop &users, double side, double height,
                           std::uint64_t seed)
    {
        Rng rng(seed);
        const double x = rng.uniform(0.0, side);
        const double y = rng.uniform(0.0, side);
        return place_at({x, y}, height, sel, users);
    }

    Placement place_cow(const ScenarioConfig &cfg, const CugSelection &sel, const UserDrop &users)
    {
        const Point3 bs = cfg.ground_bs();
        return place_at({bs.x, bs.y}, bs.z, sel, users);
    }

    Placement place_scheme(Scheme scheme, const ScenarioConfig &cfg, const CugSelection &sel, const UserDrop &users,
                           std::uint64_t seed)
    {
        switch (scheme)
        {
        case Scheme::acoc:
            return place_acoc(sel, users, cfg.fbs_height);
        case Scheme::suboptimal:
            return place_suboptimal(sel, users, cfg.fbs_height);
        case Scheme::random:
            return place_random(sel, users, cfg.hotspot_side, cfg.fbs_height, scheme_seed(seed, scheme));
        case Scheme::cow:
            return place_cow(cfg, sel, users);
        }
        throw std::invalid_argument("unknown scheme");
    }

    ConstraintCheck verify_placement(const Placement &placement, const CugSelection &sel, const ScenarioConfig &cfg)
    {
        return check_chords(sel.chord1, placement.distances[0], sel.chord2, placement.distances[1],
                            cfg.effective_selection(), cfg.link.wavelength(), cfg.link.ring_mode);
    }

    std::vector<TrialResult> run_trial(const ScenarioConfig &cfg, const std::vector<Scheme> &schemes,
                                       std::size_t trial_index)
    {
        const UserDrop users = drop_users(cfg, trial_index);
        const GreedyResult greedy =
            greedy_select(users, cfg.effective_selection(), cfg.link.wavelength(), cfg.link.ring_mode);

        std::vector<TrialResult> out;
        out.reserve(schemes.size());
        for (const Scheme scheme : schemes)
        {
            TrialResult r;
            r.trial = trial_index;
            r.scheme = scheme;
            r.selection = greedy.selection;
            if (!greedy.selection)
            {
                r.no_selection = true;
                out.push_back(std::move(r));
                continue;
            }
            r.placement = place_scheme(scheme, cfg, *greedy.selection, users, users.drop_seed);
            r.link = evaluate_link(cfg.link, *r.placement, *greedy.selection, users);
            r.total_se = r.link.total_se;
            for (const auto &c : r.link.cugs)
            {
                r.infeasible = r.infeasible || c.infeasible;
                r.inseparable = r.inseparable || c.inseparable;
            }
            out.push_back(std::move(r));
        }
        return out;
    }

    SchemeSummary summarize(Scheme scheme, const std::vector<double> &se, std::size_t flagged)
    {
        SchemeSummary s;
        s.scheme = scheme;
        s.trials = se.size();
        if (se.empty())
            return s;
        double sum = 0.0;
        for (const double v : se)
            sum += v;
        s.mean_se = sum / static_cast<double>(se.size());
        if (se.size() > 1)
        {
            double ss = 0.0;
            for (const double v : se)
                ss += (v - s.mean_se) * (v - s.mean_se);
            const double sd = std::sqrt(ss / static_cast<double>(se.size() - 1));
            s.ci95_half_width = 1.96 * sd / std::sqrt(static_cast<double>(se.size()));
        }
        s.flag_rate = static_cast<double>(flagged) / static_cast<double>(se.size());
        return s;
    }

    ExperimentResult run_experiment(const ScenarioConfig &cfg, const std::vector<Scheme> &schemes)
    {
        cfg.validate();
        if (schemes.empty())
            throw std::invalid_argument("no schemes requested");

        const std::size_t n = cfg.trials;
        std::vector<std::vector<TrialResult>> per_trial(n);

        unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        const auto work = [&] {
            for (std::size_t t = next.fetch_add(1); t < n; t = next.fetch_add(1))
            {
                try
                {
                    per_trial[t] = run_trial(cfg, schemes, t);
                }
                catch (...)
                {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        };
        if (workers <= 1)
            work();
        else
        {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work);
            for (auto &th : pool)
                th.join();
        }
        if (failure)
            std::rethrow_exception(failure);

        ExperimentResult result;
        result.trials.reserve(n * schemes.size());
        for (auto &t : per_trial)
            for (auto &r : t)
                result.trials.push_back(std::move(r));

        for (std::size_t s = 0; s < schemes.size(); ++s)
        {
            std::vector<double> se;
            std::size_t flagged = 0;
            for (std::size_t t = 0; t < n; ++t)
            {
                const TrialResult &r = result.trials[t * schemes.size() + s];
                se.push_back(r.total_se);
                flagged += r.flagged() ? 1 : 0;
            }
            result.summaries.push_back(summarize(schemes[s], se, flagged));
        }
        return result;
    }

    std::size_t HeatmapResult::argmax() const
    {
        return static_cast<std::size_t>(std::max_element(se.begin(), se.end()) - se.begin());
    }

    double HeatmapResult::spacing() const
    {
        return grid > 1 ? (positions.back().x - positions.front().x) / static_cast<double>(grid - 1) : 0.0;
    }

    HeatmapResult heatmap(const ScenarioConfig &cfg, std::size_t grid, std::size_t trial_index)
    {
        cfg.validate();
        if (grid < 2)
            throw std::invalid_argument("heatmap grid must have at least 2 points per side");

        HeatmapResult out;
        out.grid = grid;
        out.users = drop_users(cfg, trial_index);
        const GreedyResult greedy =
            greedy_select(out.users, cfg.effective_selection(), cfg.link.wavelength(), cfg.link.ring_mode);
        if (!greedy.selection)
            throw InfeasibleScenarioError("no cooperative user groups satisfy the selection constraints");
        out.selection = *greedy.selection;

        const Placement opt = place_acoc(out.selection, out.users, cfg.fbs_height);
        out.optimum = {opt.position.x, opt.position.y};
        out.optimum_se = evaluate_link(cfg.link, opt, out.selection, out.users).total_se;

        const double step = cfg.hotspot_side / static_cast<double>(grid - 1);
        out.positions.reserve(grid * grid);
        out.se.reserve(grid * grid);
        for (std::size_t j = 0; j < grid; ++j)
            for (std::size_t i = 0; i < grid; ++i)
            {
                const GroundPoint p{step * static_cast<double>(i), step * static_cast<double>(j)};
                out.positions.push_back(p);
                out.se.push_back(evaluate_link(cfg.link, at_height(p, cfg.fbs_height), out.selection, out.users)
                                     .total_se);
            }
        return out;
    }

} // namespace acoc
