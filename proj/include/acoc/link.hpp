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

#include "acoc/beam.hpp"
#include "acoc/geometry.hpp"
#include "acoc/selection.hpp"
#include "acoc/user_drop.hpp"

#include <array>
#include <complex>

namespace acoc
{
    inline constexpr double speed_of_light = 299792458.0; // m/s

    /// Effective area of an isotropic antenna, lambda^2 / (4 pi).
    double isotropic_aperture(double wavelength);

    /// Two modes are separable by two antipodal receivers iff their orders differ by an odd number.
    bool mode_set_separable(const std::array<int, 2> &modes);

    struct LinkConfig
    {
        double carrier_frequency = 1e9;     // Hz
        double transmit_power = 1.0;        // W
        double noise_power = 1e-12;         // W
        std::array<int, 2> mode_set{1, 2};  // multiplexed OAM modes, one stream each
        int ring_mode = 1;                  // mode whose intensity ring is steered onto the CUs
        double aperture = isotropic_aperture(speed_of_light / 1e9); // m^2

        double wavelength() const { return speed_of_light / carrier_frequency; }

        /// Throws std::invalid_argument on non-positive quantities, repeated modes,
        /// out-of-range orders, or a zero ring mode.
        void validate() const;
    };

    /// Rows: receiving CU; columns: transmitted mode. Units sqrt(W).
    using ChannelMatrix = std::array<std::array<std::complex<double>, 2>, 2>;

    /// sqrt(I(rho, z)) * exp(i l phi). Requires rho >= 0 and z > 0.
    std::complex<double> mode_field(const BeamSpec &spec, double rho, double phi, double z);

    /// Entry (i, m) = sqrt(P_tx * A_e) * mode_field(mode m, rho_i, phi_i, axial_i), using the
    /// same waist for both modes.
    ChannelMatrix cug_channel(const LinkConfig &cfg, double waist, const std::array<BeamFrameCoords, 2> &coords);

    /// Condition number of H^H H above which the two streams count as inseparable.
    inline constexpr double max_gram_condition = 1e12;

    struct ZfResult
    {
        std::array<double, 2> sinr{};
        double condition = 1.0; // of H^H H
        bool inseparable = false;
    };

    /// Zero-forcing receiver: SINR_m = 1 / (N [(H^H H)^-1]_mm). Ill-conditioned channels
    /// return zero SINR with the inseparable flag set.
    ZfResult zf_sinr(const ChannelMatrix &channel, double noise_power);

    struct CugLink
    {
        std::array<double, 2> sinr{};
        std::array<double, 2> se{}; // bit/s/Hz per mode
        double se_total = 0.0;
        double waist = 0.0;         // m, 0 when infeasible
        double distance = 0.0;      // m, transmitter to chord midpoint
        double condition = 1.0;
        bool infeasible = false;    // no waist puts the ring on the chord at this distance
        bool inseparable = false;
    };

    struct LinkReport
    {
        std::array<CugLink, 2> cugs{};
        double total_se = 0.0;

        bool any_flag() const;
    };

    /// Spectrum efficiency of both CUGs served from `transmitter`. Each CUG gets its own beam
    /// aimed at its chord midpoint, with the waist re-tuned so the ring mode peaks at half the
    /// chord length; the two CUGs use orthogonal resources.
    LinkReport evaluate_link(const LinkConfig &cfg, const Point3 &transmitter, const CugSelection &selection,
                             const UserDrop &users);

    /// Convenience overload taking the placement's position.
    LinkReport evaluate_link(const LinkConfig &cfg, const Placement &placement, const CugSelection &selection,
                             const UserDrop &users);

} // namespace acoc
