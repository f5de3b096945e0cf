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
#include "acoc/user_drop.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>

namespace acoc
{
    struct SelectionConfig
    {
        double max_cu_distance = 10.0; // d_mc, m
        double service_radius = 250.0; // r_sr, m
        double epsilon = 1e-6;         // greedy stops once the angle square difference reaches this
        double min_height = 50.0;      // H_m, m

        /// Throws std::invalid_argument unless every field is strictly positive and finite.
        void validate() const;
    };

    /// Two cooperative user groups (u1, u2) and (u3, u4); the quadrilateral cycle is u1 -> u2 -> u3 -> u4.
    struct CugSelection
    {
        std::array<std::size_t, 2> cug1{};
        std::array<std::size_t, 2> cug2{};
        double chord1 = 0.0; // d(u1, u2)
        double chord2 = 0.0; // d(u3, u4)
        double diag1 = 0.0;  // d(u1, u3)
        double diag2 = 0.0;  // d(u2, u4)
        double psi_bar = 0.0;

        std::array<std::size_t, 4> indices() const { return {cug1[0], cug1[1], cug2[0], cug2[1]}; }
    };

    enum class Constraint
    {
        none,
        service_radius, // diagonals within 2 r_sr
        chord1,         // 2 r_fea(z1) <= d(u1, u2) <= d_mc
        chord2,         // 2 r_fea(z2) <= d(u3, u4) <= d_mc
    };

    struct ConstraintCheck
    {
        bool pass = true;
        Constraint violated = Constraint::none;
        double excess = 0.0; // m by which the violated bound is exceeded

        std::string reason() const;
    };

    /// Transmission distance used before the placement is known: sqrt(H_m^2 + (chord / 2)^2).
    double first_pass_distance(double chord, double min_height);

    /// Chord bounds 2 r_fea(z) <= chord <= d_mc for both groups at the given distances.
    ConstraintCheck check_chords(double chord1, double z1, double chord2, double z2, const SelectionConfig &cfg,
                                 double wavelength, int mode);

    /// Selection constraints for the candidate (u1, u2, u3, u4): chord bounds at the
    /// first-pass distances, then the service-radius bound on the diagonals.
    /// Throws std::invalid_argument for repeated or out-of-range indices.
    ConstraintCheck check_constraints(const std::array<std::size_t, 4> &candidate, const UserDrop &users,
                                      const SelectionConfig &cfg, double wavelength, int mode);

    /// Closed-form transmitter position for a candidate: bisector intersection at height H_m.
    /// Throws GeometryError for parallel chords.
    Placement aligned_placement(const std::array<std::size_t, 4> &candidate, const UserDrop &users,
                                double height);

    /// Full admissibility test shared by the greedy search and the exhaustive oracle:
    /// constraints pass, the cycle is simple, the chords are not parallel, and the chord
    /// bounds still hold at the true distances of the aligned placement.
    std::optional<CugSelection> admissible_candidate(const std::array<std::size_t, 4> &candidate,
                                                     const UserDrop &users, const SelectionConfig &cfg,
                                                     double wavelength, int mode);

    struct GreedyResult
    {
        std::optional<CugSelection> selection;
        std::size_t iterations = 0;
        std::size_t improvements = 0;
    };

    /// Greedy CU selection starting from the boundary user (farthest from the hotspot centre).
    ///
    /// Each iteration takes the three users nearest to u1 as u2, u3, u4, keeps the candidate
    /// if it is admissible and lowers the angle square difference, then drops u1 from the
    /// pool and continues from u2. CUG 2 is tried in both orders, (u3, u4) then (u4, u3), since
    /// only one of them usually closes a simple quadrilateral. Stops when the incumbent reaches cfg.epsilon or fewer
    /// than four users remain. Ties go to the lowest user index.
    /// Throws std::invalid_argument with fewer than four users.
    GreedyResult greedy_select(const UserDrop &users, const SelectionConfig &cfg, double wavelength, int mode);

    inline constexpr std::size_t exhaustive_user_limit = 30;

    /// Global minimum of the angle square difference over every 4-subset, pairing and
    /// simple cycle orientation that is admissible. Ties go to the lexicographically
    /// smallest (u1, u2, u3, u4). Throws std::invalid_argument above exhaustive_user_limit users.
    std::optional<CugSelection> exhaustive_select(const UserDrop &users, const SelectionConfig &cfg,
                                                  double wavelength, int mode);

} // namespace acoc
