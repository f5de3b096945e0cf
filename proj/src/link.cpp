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

#include "acoc/link.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace acoc
{
    double isotropic_aperture(double wavelength) { return wavelength * wavelength / (4.0 * pi); }

    bool mode_set_separable(const std::array<int, 2> &modes) { return std::abs(modes[1] - modes[0]) % 2 == 1; }

    void LinkConfig::validate() const
    {
        const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
        if (!positive(carrier_frequency))
            throw std::invalid_argument("link: carrier frequency must be positive");
        if (!positive(transmit_power))
            throw std::invalid_argument("link: transmit power must be positive");
        if (!positive(noise_power))
            throw std::invalid_argument("link: noise power must be positive");
        if (!positive(aperture))
            throw std::invalid_argument("link: aperture must be positive");
        if (mode_set[0] == mode_set[1])
            throw std::invalid_argument("link: mode set entries must be distinct");
        for (const int m : mode_set)
            if (std::abs(m) > max_mode_order)
                throw std::invalid_argument("link: OAM mode order out of modeled range");
        if (ring_mode == 0 || std::abs(ring_mode) > max_mode_order)
            throw std::invalid_argument("link: ring mode must be a non-zero order within range");
    }

    std::complex<double> mode_field(const BeamSpec &spec, double rho, double phi, double z)
    {
        return std::polar(std::sqrt(intensity(spec, rho, z)), spec.mode * phi);
    }

    ChannelMatrix cug_channel(const LinkConfig &cfg, double waist, const std::array<BeamFrameCoords, 2> &coords)
    {
        const double gain = std::sqrt(cfg.transmit_power * cfg.aperture);
        ChannelMatrix h{};
        for (std::size_t m = 0; m < 2; ++m)
        {
            const BeamSpec beam(cfg.wavelength(), cfg.mode_set[m], waist);
            for (std::size_t i = 0; i < 2; ++i)
                h[i][m] = gain * mode_field(beam, coords[i].rho, coords[i].phi, coords[i].axial);
        }
        return h;
    }

    ZfResult zf_sinr(const ChannelMatrix &h, double noise_power)
    {
        // Gram matrix G = H^H H.
        const double g11 = std::norm(h[0][0]) + std::norm(h[1][0]);
        const double g22 = std::norm(h[0][1]) + std::norm(h[1][1]);
        const std::complex<double> g12 = std::conj(h[0][0]) * h[0][1] + std::conj(h[1][0]) * h[1][1];

        ZfResult out;
        const double half_gap = 0.5 * (g11 - g22);
        const double lambda_max = 0.5 * (g11 + g22) + std::sqrt(half_gap * half_gap + std::norm(g12));
        const double det = g11 * g22 - std::norm(g12);
        const double lambda_min = lambda_max > 0.0 ? det / lambda_max : 0.0;
        out.condition = lambda_min > 0.0 ? lambda_max / lambda_min : std::numeric_limits<double>::infinity();
        if (!(out.condition <= max_gram_condition))
        {
            out.inseparable = true;
            return out;
        }
        // [G^-1]_11 = g22 / det, [G^-1]_22 = g11 / det.
        out.sinr = {det / (noise_power * g22), det / (noise_power * g11)};
        return out;
    }

    bool LinkReport::any_flag() const
    {
        for (const auto &c : cugs)
            if (c.infeasible || c.inseparable)
                return true;
        return false;
    }

    LinkReport evaluate_link(const LinkConfig &cfg, const Point3 &transmitter, const CugSelection &selection,
                             const UserDrop &users)
    {
        const double wavelength = cfg.wavelength();
        LinkReport report;
        for (std::size_t g = 0; g < 2; ++g)
        {
            const auto &pair = g == 0 ? selection.cug1 : selection.cug2;
            const GroundPoint &a = users[pair[0]];
            const GroundPoint &b = users[pair[1]];
            const GroundPoint mid = chord_midpoint(a, b);
            CugLink &link = report.cugs[g];
            link.distance = transmission_distance(transmitter, mid);

            try
            {
                link.waist = waist_solve({0.5 * distance(a, b), link.distance}, wavelength, cfg.ring_mode);
            }
            catch (const WaistInfeasibleError &)
            {
                link.infeasible = true;
                link.waist = 0.0;
                continue;
            }

            const std::array<BeamFrameCoords, 2> coords{beam_frame_coords(transmitter, mid, a),
                                                        beam_frame_coords(transmitter, mid, b)};
            const ZfResult zf = zf_sinr(cug_channel(cfg, link.waist, coords), cfg.noise_power);
            link.condition = zf.condition;
            link.inseparable = zf.inseparable;
            link.sinr = zf.sinr;
            for (std::size_t m = 0; m < 2; ++m)
            {
                link.se[m] = std::log2(1.0 + link.sinr[m]);
                link.se_total += link.se[m];
            }
            report.total_se += link.se_total;
        }
        return report;
    }

    LinkReport evaluate_link(const LinkConfig &cfg, const Placement &placement, const CugSelection &selection,
                             const UserDrop &users)
    {
        return evaluate_link(cfg, placement.position, selection, users);
    }

} // namespace acoc
