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

#include "acoc/selection.hpp"

#include "acoc/beam.hpp"
#include "acoc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace acoc
{
    namespace
    {
        constexpr double infinity = std::numeric_limits<double>::infinity();

        void validate_candidate(const std::array<std::size_t, 4> &c, std::size_t user_count)
        {
            for (std::size_t i = 0; i < 4; ++i)
            {
                if (c[i] >= user_count)
                    throw std::invalid_argument("candidate user index out of range");
                for (std::size_t j = i + 1; j < 4; ++j)
                    if (c[i] == c[j])
                        throw std::invalid_argument("candidate user indices must be distinct");
            }
        }

        ConstraintCheck chord_bound(double chord, double z, Constraint which, const SelectionConfig &cfg,
                                    double wavelength, int mode)
        {
            const double lower = 2.0 * feasible_ring_radius(wavelength, mode, z);
            if (chord < lower)
                return {false, which, lower - chord};
            if (chord > cfg.max_cu_distance)
                return {false, which, chord - cfg.max_cu_distance};
            return {};
        }

        CugSelection describe(const std::array<std::size_t, 4> &c, const UserDrop &users, double psi_bar)
        {
            CugSelection s;
            s.cug1 = {c[0], c[1]};
            s.cug2 = {c[2], c[3]};
            s.chord1 = distance(users[c[0]], users[c[1]]);
            s.chord2 = distance(users[c[2]], users[c[3]]);
            s.diag1 = distance(users[c[0]], users[c[2]]);
            s.diag2 = distance(users[c[1]], users[c[3]]);
            s.psi_bar = psi_bar;
            return s;
        }

        // Evaluated on a canonical labelling (rotation and direction fixed by the smallest index) so
        // every labelling of one quadrilateral gives bit-identical values.
        std::optional<double> cycle_psi(const std::array<std::size_t, 4> &c, const UserDrop &users)
        {
            const std::size_t start = static_cast<std::size_t>(std::min_element(c.begin(), c.end()) - c.begin());
            const bool reverse = c[(start + 3) % 4] < c[(start + 1) % 4];
            std::array<std::size_t, 4> k;
            for (std::size_t i = 0; i < 4; ++i)
                k[i] = c[(start + (reverse ? 4 - i : i)) % 4];
            const auto &a = users[k[0]], &b = users[k[1]], &p = users[k[2]], &q = users[k[3]];
            if (!is_simple_quadrilateral(a, b, p, q))
                return std::nullopt;
            return angle_square_difference(quad_inner_angles(a, b, p, q));
        }

        // Chord bounds re-checked at the true distances of the aligned placement.
        bool holds_after_placement(const std::array<std::size_t, 4> &c, const UserDrop &users,
                                   const SelectionConfig &cfg, double wavelength, int mode)
        {
            Placement placement;
            try
            {
                placement = aligned_placement(c, users, cfg.min_height);
            }
            catch (const GeometryError &)
            {
                return false;
            }
            const double chord1 = distance(users[c[0]], users[c[1]]);
            const double chord2 = distance(users[c[2]], users[c[3]]);
            return check_chords(chord1, placement.distances[0], chord2, placement.distances[1], cfg, wavelength,
                                mode)
                .pass;
        }

        // Indices of the three smallest entries; ties resolved towards the lower index.
        std::array<std::size_t, 3> three_smallest(const std::vector<double> &d)
        {
            std::array<std::size_t, 3> idx{0, 0, 0};
            std::array<double, 3> val{infinity, infinity, infinity};
            for (std::size_t i = 0; i < d.size(); ++i)
            {
                const double v = d[i];
                if (!(v < val[2]))
                    continue;
                if (v < val[0])
                {
                    val = {v, val[0], val[1]};
                    idx = {i, idx[0], idx[1]};
                }
                else if (v < val[1])
                {
                    val = {val[0], v, val[1]};
                    idx = {idx[0], i, idx[1]};
                }
                else
                {
                    val[2] = v;
                    idx[2] = i;
                }
            }
            return idx;
        }
    } // namespace

    void SelectionConfig::validate() const
    {
        const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
        if (!positive(max_cu_distance))
            throw std::invalid_argument("selection: max CU distance must be positive");
        if (!positive(service_radius))
            throw std::invalid_argument("selection: service radius must be positive");
        if (!positive(epsilon))
            throw std::invalid_argument("selection: epsilon must be positive");
        if (!positive(min_height))
            throw std::invalid_argument("selection: minimum flying height must be positive");
    }

    std::string ConstraintCheck::reason() const
    {
        switch (violated)
        {
        case Constraint::none:
            return "ok";
        case Constraint::service_radius:
            return "diagonal exceeds the service diameter by " + std::to_string(excess) + " m";
        case Constraint::chord1:
            return "CUG 1 chord outside [2 r_fea, d_mc] by " + std::to_string(excess) + " m";
        case Constraint::chord2:
            return "CUG 2 chord outside [2 r_fea, d_mc] by " + std::to_string(excess) + " m";
        }
        return "unknown";
    }

    double first_pass_distance(double chord, double min_height)
    {
        return std::sqrt(min_height * min_height + 0.25 * chord * chord);
    }

    ConstraintCheck check_chords(double chord1, double z1, double chord2, double z2, const SelectionConfig &cfg,
                                 double wavelength, int mode)
    {
        if (auto c = chord_bound(chord1, z1, Constraint::chord1, cfg, wavelength, mode); !c.pass)
            return c;
        return chord_bound(chord2, z2, Constraint::chord2, cfg, wavelength, mode);
    }

    ConstraintCheck check_constraints(const std::array<std::size_t, 4> &c, const UserDrop &users,
                                      const SelectionConfig &cfg, double wavelength, int mode)
    {
        validate_candidate(c, users.size());
        const double chord1 = distance(users[c[0]], users[c[1]]);
        const double chord2 = distance(users[c[2]], users[c[3]]);
        const auto chords = check_chords(chord1, first_pass_distance(chord1, cfg.min_height), chord2,
                                         first_pass_distance(chord2, cfg.min_height), cfg, wavelength, mode);
        if (!chords.pass)
            return chords;

        const double diag = std::max(distance(users[c[0]], users[c[2]]), distance(users[c[1]], users[c[3]]));
        if (diag > 2.0 * cfg.service_radius)
            return {false, Constraint::service_radius, diag - 2.0 * cfg.service_radius};
        return {};
    }

    Placement aligned_placement(const std::array<std::size_t, 4> &c, const UserDrop &users, double height)
    {
        validate_candidate(c, users.size());
        const GroundPoint f = alignment_point(users[c[0]], users[c[1]], users[c[2]], users[c[3]]);
        return make_placement(at_height(f, height), chord_midpoint(users[c[0]], users[c[1]]),
                              chord_midpoint(users[c[2]], users[c[3]]));
    }

    std::optional<CugSelection> admissible_candidate(const std::array<std::size_t, 4> &c, const UserDrop &users,
                                                     const SelectionConfig &cfg, double wavelength, int mode)
    {
        if (!check_constraints(c, users, cfg, wavelength, mode).pass)
            return std::nullopt;
        const auto psi = cycle_psi(c, users);
        if (!psi || !holds_after_placement(c, users, cfg, wavelength, mode))
            return std::nullopt;
        return describe(c, users, *psi);
    }

    GreedyResult greedy_select(const UserDrop &users, const SelectionConfig &cfg, double wavelength, int mode)
    {
        const std::size_t n = users.size();
        if (n < 4)
            throw std::invalid_argument("insufficient users: greedy selection needs at least 4");
        cfg.validate();

        std::vector<double> xs(n), ys(n), d2(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            xs[i] = users[i].x;
            ys[i] = users[i].y;
        }

        // Boundary user: farthest from the hotspot centre.
        kernels::squared_distances(users.hotspot_center.x, users.hotspot_center.y, xs, ys, d2);
        std::size_t u1 = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (d2[i] > d2[u1])
                u1 = i;

        GreedyResult result;
        double best = infinity;
        std::size_t remaining = n;
        while (best > cfg.epsilon && remaining > 3)
        {
            ++result.iterations;
            // Removed users sit at infinity, so their squared distance is +inf.
            kernels::squared_distances(xs[u1], ys[u1], xs, ys, d2);
            d2[u1] = infinity;
            const auto [u2, u3, u4] = three_smallest(d2);
            // Pairing stays (u1, u2), (u3, u4); CUG 2 may be traversed either way round so that
            // the quadrilateral is simple.
            for (const std::array<std::size_t, 4> c :
                 {std::array<std::size_t, 4>{u1, u2, u3, u4}, std::array<std::size_t, 4>{u1, u2, u4, u3}})
            {
                const auto candidate = admissible_candidate(c, users, cfg, wavelength, mode);
                if (candidate && candidate->psi_bar < best)
                {
                    best = candidate->psi_bar;
                    result.selection = candidate;
                    ++result.improvements;
                }
            }

            xs[u1] = ys[u1] = infinity;
            --remaining;
            u1 = u2;
        }
        return result;
    }

    std::optional<CugSelection> exhaustive_select(const UserDrop &users, const SelectionConfig &cfg,
                                                  double wavelength, int mode)
    {
        const std::size_t n = users.size();
        if (n > exhaustive_user_limit)
            throw std::invalid_argument("instance too large for oracle");
        cfg.validate();

        std::optional<CugSelection> best;
        const auto consider = [&](const std::array<std::size_t, 4> &c) {
            auto cand = admissible_candidate(c, users, cfg, wavelength, mode);
            if (!cand)
                return;
            if (!best || cand->psi_bar < best->psi_bar ||
                (cand->psi_bar == best->psi_bar && cand->indices() < best->indices()))
                best = cand;
        };

        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t d = c + 1; d < n; ++d)
                    {
                        // Three pairings, each with its two distinct cycles.
                        for (const auto &[p, q] : {std::pair{std::array{a, b}, std::array{c, d}},
                                                   std::pair{std::array{a, c}, std::array{b, d}},
                                                   std::pair{std::array{a, d}, std::array{b, c}}})
                        {
                            consider({p[0], p[1], q[0], q[1]});
                            consider({p[0], p[1], q[1], q[0]});
                        }
                    }
        return best;
    }

} // namespace acoc
