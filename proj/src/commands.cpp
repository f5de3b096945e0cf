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

#include "acoc/beam.hpp"
#include "acoc/csv.hpp"
#include "acoc/geometry.hpp"
#include "acoc/kernels.hpp"
#include "acoc/link.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace acoc::cli
{
    namespace
    {
        using nlohmann::ordered_json;

        const char *axis_name(SweepAxis axis) { return axis == SweepAxis::height ? "height" : "users"; }

        // Written to a string first so a failed run leaves no partial file behind.
        bool write_file(const std::filesystem::path &path, const std::string &content, std::ostream &log)
        {
            std::ofstream out(path, std::ios::binary);
            out << content;
            out.close();
            if (!out)
            {
                log << "error: cannot write '" << path.string() << "'\n";
                return false;
            }
            return true;
        }

        ordered_json manifest_base(const char *command, const CommonOptions &opts, const KeyValues &echo,
                                   const ScenarioConfig &cfg)
        {
            ordered_json m;
            m["command"] = command;
            m["version"] = version;
            m["master_seed"] = cfg.master_seed;
            m["config_file"] = opts.config ? opts.config->string() : std::string();
            m["config_echo"] = ordered_json::object();
            for (const auto &[k, v] : echo)
                m["config_echo"][k] = v;
            m["resolved"] = ordered_json::object();
            for (const auto &[k, v] : describe(cfg))
                m["resolved"][k] = v;
            m["kernel_isa"] = std::string(kernels::isa_name(kernels::active_isa()));
            return m;
        }
    } // namespace

    std::filesystem::path manifest_path(const std::filesystem::path &out)
    {
        return std::filesystem::path(out.string() + ".manifest.json");
    }

    ScenarioConfig load_config(const CommonOptions &opts, KeyValues *echo)
    {
        KeyValues kv;
        if (opts.config)
            kv = read_key_value_file(*opts.config);
        if (echo)
            *echo = kv;
        if (opts.seed)
            kv["scenario.master_seed"] = std::to_string(*opts.seed);
        if (opts.trials)
            kv["scenario.trials"] = std::to_string(*opts.trials);
        return scenario_from_key_values(kv);
    }

    void write_heatmap_csv(const HeatmapResult &result, std::ostream &out)
    {
        out << "x_m,y_m,se_bps_hz,is_closed_form_opt\n";
        for (std::size_t i = 0; i < result.positions.size(); ++i)
            out << format_number(result.positions[i].x) << ',' << format_number(result.positions[i].y) << ','
                << format_number(result.se[i]) << ",0\n";
        out << format_number(result.optimum.x) << ',' << format_number(result.optimum.y) << ','
            << format_number(result.optimum_se) << ",1\n";
    }

    void write_sweep_csv(const std::vector<SweepRow> &rows, std::ostream &out)
    {
        out << "axis_value,scheme,mean_se_bps_hz,ci95_half_width,trials,flag_rate\n";
        for (const auto &row : rows)
            out << format_number(row.axis_value) << ',' << scheme_name(row.summary.scheme) << ','
                << format_number(row.summary.mean_se) << ',' << format_number(row.summary.ci95_half_width) << ','
                << row.summary.trials << ',' << format_number(row.summary.flag_rate) << '\n';
    }

    ScenarioConfig apply_axis(const ScenarioConfig &base, SweepAxis axis, double value)
    {
        ScenarioConfig cfg = base;
        if (axis == SweepAxis::height)
            cfg.fbs_height = value;
        else
        {
            if (!(value >= 0.0) || value != std::floor(value) || value > 1e9)
                throw ConfigError("sweep: user count must be a non-negative integer");
            cfg.user_count = static_cast<std::size_t>(value);
        }
        try
        {
            cfg.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(std::string("sweep: ") + e.what());
        }
        return cfg;
    }

    std::vector<SweepRow> run_sweep(const ScenarioConfig &base, SweepAxis axis, const std::vector<double> &values,
                                    const std::vector<Scheme> &schemes)
    {
        std::vector<SweepRow> rows;
        for (double value : values)
        {
            const ExperimentResult result = run_experiment(apply_axis(base, axis, value), schemes);
            for (const auto &summary : result.summaries)
                rows.push_back({value, summary});
        }
        return rows;
    }

    int cmd_heatmap(const CommonOptions &opts, std::size_t grid, const std::filesystem::path &out, std::ostream &log)
    {
        if (grid < 2)
        {
            log << "error: grid size must be at least 2\n";
            return exit_config_error;
        }
        KeyValues echo;
        ScenarioConfig cfg;
        try
        {
            cfg = load_config(opts, &echo);
        }
        catch (const ConfigError &e)
        {
            log << "error: " << e.what() << '\n';
            return exit_config_error;
        }

        HeatmapResult result;
        try
        {
            result = heatmap(cfg, grid);
        }
        catch (const InfeasibleScenarioError &e)
        {
            log << "error: " << e.what() << '\n';
            return exit_infeasible;
        }

        std::ostringstream csv;
        write_heatmap_csv(result, csv);

        ordered_json m = manifest_base("heatmap", opts, echo, cfg);
        m["arguments"] = {{"grid", grid}, {"trial_index", 0}};
        m["selection"] = {{"cug1", {result.selection.cug1[0], result.selection.cug1[1]}},
                          {"cug2", {result.selection.cug2[0], result.selection.cug2[1]}},
                          {"psi_bar", format_number(result.selection.psi_bar)}};
        m["outputs"] = {out.string()};

        if (!write_file(out, csv.str(), log) || !write_file(manifest_path(out), m.dump(2) + "\n", log))
            return exit_config_error;
        return exit_ok;
    }

    int cmd_sweep(const CommonOptions &opts, SweepAxis axis, const std::vector<double> &values,
                  const std::vector<Scheme> &schemes, const std::filesystem::path &out, std::ostream &log)
    {
        if (values.empty())
        {
            log << "error: sweep needs at least one value\n";
            return exit_config_error;
        }
        if (schemes.empty())
        {
            log << "error: sweep needs at least one scheme\n";
            return exit_config_error;
        }
        KeyValues echo;
        std::vector<SweepRow> rows;
        ScenarioConfig cfg;
        try
        {
            cfg = load_config(opts, &echo);
            for (double v : values)
                apply_axis(cfg, axis, v);
            rows = run_sweep(cfg, axis, values, schemes);
        }
        catch (const ConfigError &e)
        {
            log << "error: " << e.what() << '\n';
            return exit_config_error;
        }

        std::ostringstream csv;
        write_sweep_csv(rows, csv);

        ordered_json m = manifest_base("sweep", opts, echo, cfg);
        ordered_json value_list = ordered_json::array();
        for (double v : values)
            value_list.push_back(format_number(v));
        ordered_json scheme_list = ordered_json::array();
        for (Scheme s : schemes)
            scheme_list.push_back(std::string(scheme_name(s)));
        m["arguments"] = {{"axis", axis_name(axis)}, {"values", value_list}, {"schemes", scheme_list}};
        m["outputs"] = {out.string()};

        if (!write_file(out, csv.str(), log) || !write_file(manifest_path(out), m.dump(2) + "\n", log))
            return exit_config_error;
        return exit_ok;
    }

    // ------------------------------------------------------------------------------------------
    // validate

    namespace
    {
        struct Check
        {
            bool pass;
            std::string detail;
        };

        std::string fmt(const char *f, double a, double b = 0.0)
        {
            char buf[160];
            std::snprintf(buf, sizeof buf, f, a, b);
            return buf;
        }

        Check check_waist_roundtrip(const ScenarioConfig &cfg)
        {
            const double lambda = cfg.link.wavelength();
            const int mode = cfg.link.ring_mode;
            Rng rng(0x7a11);
            double worst = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                const double z = rng.uniform(1.0, 500.0);
                const double r = feasible_ring_radius(lambda, mode, z) * rng.uniform(1.0, 5.0);
                const double w0 = waist_solve({r, z}, lambda, mode);
                const double back = optimal_ring_radius(BeamSpec(lambda, mode, w0), z);
                worst = std::max(worst, std::abs(back - r) / r);
            }
            return {worst <= 1e-9, fmt("max relative error %.3g over 200 targets", worst)};
        }

        Check check_normalization(const ScenarioConfig &cfg)
        {
            double worst = 0.0;
            for (int mode : {cfg.link.mode_set[0], cfg.link.mode_set[1], cfg.link.ring_mode})
                worst = std::max(worst, std::abs(enclosed_power(mode, 1.0, 20.0, 20000) - 1.0));
            return {worst <= 1e-6, fmt("max |power - 1| = %.3g", worst)};
        }

        Check check_feasibility_boundary(const ScenarioConfig &cfg)
        {
            const double lambda = cfg.link.wavelength();
            const int mode = cfg.link.ring_mode;
            double worst = 0.0;
            for (double z : {1.0, 10.0, 50.0, 250.0, 1000.0})
            {
                const WaistRoots roots = waist_roots({feasible_ring_radius(lambda, mode, z), z}, lambda, mode);
                const double scale = std::pow(z * lambda / pi, 2);
                worst = std::max(worst, std::abs(roots.discriminant) / scale);
            }
            return {worst <= 1e-9, fmt("max relative discriminant %.3g", worst)};
        }

        Check check_bisectors()
        {
            Rng rng(0xb15);
            double worst = 0.0;
            int solved = 0;
            for (int i = 0; i < 200; ++i)
            {
                std::array<GroundPoint, 4> u;
                for (auto &p : u)
                    p = {rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
                GroundPoint x;
                try
                {
                    x = bisector_intersection(u[0], u[1], u[2], u[3]);
                }
                catch (const GeometryError &)
                {
                    continue;
                }
                ++solved;
                const double scale = std::max({distance(u[0], x), distance(u[2], x), 1.0});
                worst = std::max({worst, std::abs(distance(u[0], x) - distance(u[1], x)) / scale,
                                  std::abs(distance(u[2], x) - distance(u[3], x)) / scale});
            }
            return {worst <= 1e-9 && solved > 0,
                    fmt("max equidistance error %.3g (scaled) on %.0f instances", worst, solved)};
        }

        Check check_angle_sum()
        {
            Rng rng(0xa9);
            double worst = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                std::array<double, 4> t;
                for (auto &a : t)
                    a = rng.uniform(0.0, 2.0 * pi);
                std::sort(t.begin(), t.end());
                std::array<GroundPoint, 4> u;
                for (int k = 0; k < 4; ++k)
                    u[k] = {10.0 * std::cos(t[k]), 10.0 * std::sin(t[k])};
                try
                {
                    const QuadAngles q = quad_inner_angles(u[0], u[1], u[2], u[3]);
                    const double sum = q.angles[0] + q.angles[1] + q.angles[2] + q.angles[3];
                    worst = std::max(worst, std::abs(sum - 2.0 * pi));
                }
                catch (const GeometryError &)
                {
                }
            }
            return {worst <= 1e-9, fmt("max |sum - 2 pi| = %.3g", worst)};
        }

        Check check_orthogonality(const ScenarioConfig &cfg, std::ostream &report)
        {
            const LinkConfig &link = cfg.link;
            const bool separable = mode_set_separable(link.mode_set);
            if (!separable)
                report << "WARNING mode set {" << link.mode_set[0] << "," << link.mode_set[1]
                       << "} has an even mode difference: aligned antipodal CUs cannot separate the streams\n";
            Rng rng(0x0a7);
            double worst = 0.0;
            int flagged = 0;
            const int trials = 100;
            for (int i = 0; i < trials; ++i)
            {
                const double heading = rng.uniform(0.0, 2.0 * pi);
                const GroundPoint mid{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
                const Point3 fbs = at_height(mid, cfg.fbs_height);
                const double z = transmission_distance(fbs, mid);
                const double half = feasible_ring_radius(link.wavelength(), link.ring_mode, z) * rng.uniform(1.0, 3.0);
                const GroundPoint a{mid.x + half * std::cos(heading), mid.y + half * std::sin(heading)};
                const GroundPoint b{mid.x - half * std::cos(heading), mid.y - half * std::sin(heading)};
                const double w0 = waist_solve({half, z}, link.wavelength(), link.ring_mode);
                const ChannelMatrix h =
                    cug_channel(link, w0, {beam_frame_coords(fbs, mid, a), beam_frame_coords(fbs, mid, b)});
                const std::complex<double> inner = std::conj(h[0][0]) * h[0][1] + std::conj(h[1][0]) * h[1][1];
                const double n0 = std::hypot(std::abs(h[0][0]), std::abs(h[1][0]));
                const double n1 = std::hypot(std::abs(h[0][1]), std::abs(h[1][1]));
                worst = std::max(worst, std::abs(inner) / (n0 * n1));
                flagged += zf_sinr(h, link.noise_power).inseparable ? 1 : 0;
            }
            if (separable)
                return {worst < 1e-12 && flagged == 0, fmt("max normalized inner product %.3g", worst)};
            return {flagged == trials, fmt("%.0f of %.0f aligned geometries flagged inseparable", flagged, trials)};
        }

        Check check_kernels()
        {
            Rng rng(0x51d);
            std::vector<double> xs(1003), ys(1003), r(1003);
            for (std::size_t i = 0; i < xs.size(); ++i)
            {
                xs[i] = rng.uniform(0.0, 100.0);
                ys[i] = rng.uniform(0.0, 100.0);
                r[i] = rng.uniform(0.0, 10.0);
            }
            std::vector<double> d_ref(xs.size()), d(xs.size()), i_ref(xs.size()), i_out(xs.size());
            kernels::scalar::squared_distances(37.0, 61.0, xs, ys, d_ref);
            kernels::scalar::lg_intensity(2, 0.3, 0.08, r, i_ref);
            kernels::squared_distances(37.0, 61.0, xs, ys, d);
            kernels::lg_intensity(2, 0.3, 0.08, r, i_out);
            double worst = 0.0;
            bool exact = d == d_ref;
            for (std::size_t i = 0; i < xs.size(); ++i)
                if (i_ref[i] != 0.0)
                    worst = std::max(worst, std::abs(i_out[i] - i_ref[i]) / std::abs(i_ref[i]));
            const std::string detail = std::string(kernels::isa_name(kernels::active_isa())) + ": distances " +
                                       (exact ? "bit-identical" : "differ") +
                                       fmt(", intensity max relative deviation %.3g", worst);
            return {exact && worst <= 1e-14, detail};
        }

        Check check_drop_determinism(const ScenarioConfig &cfg)
        {
            ScenarioConfig small = cfg;
            small.trials = std::max<std::size_t>(small.trials, 1);
            const UserDrop a = drop_users(small, 0);
            const UserDrop b = drop_users(small, 0);
            return {a.positions == b.positions && a.drop_seed == b.drop_seed,
                    fmt("%.0f users reproduced", static_cast<double>(a.size()))};
        }
    } // namespace

    int cmd_validate(const CommonOptions &opts, std::ostream &report)
    {
        ScenarioConfig cfg;
        try
        {
            cfg = load_config(opts);
        }
        catch (const ConfigError &e)
        {
            report << "FAIL config: " << e.what() << '\n';
            return exit_config_error;
        }
        report << "PASS config: valid\n";

        const std::vector<std::pair<const char *, std::function<Check()>>> checks{
            {"waist roundtrip", [&] { return check_waist_roundtrip(cfg); }},
            {"beam normalization", [&] { return check_normalization(cfg); }},
            {"feasibility boundary", [&] { return check_feasibility_boundary(cfg); }},
            {"bisector equidistance", [] { return check_bisectors(); }},
            {"quadrilateral angle sum", [] { return check_angle_sum(); }},
            {"aligned channel orthogonality", [&] { return check_orthogonality(cfg, report); }},
            {"kernel equivalence", [] { return check_kernels(); }},
            {"user drop determinism", [&] { return check_drop_determinism(cfg); }},
        };

        bool all = true;
        for (const auto &[name, run] : checks)
        {
            Check c;
            try
            {
                c = run();
            }
            catch (const std::exception &e)
            {
                c = {false, std::string("exception: ") + e.what()};
            }
            report << (c.pass ? "PASS " : "FAIL ") << name << ": " << c.detail << '\n';
            all = all && c.pass;
        }
        return all ? exit_ok : exit_check_failed;
    }

} // namespace acoc::cli
