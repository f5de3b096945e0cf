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

#include "acoc/beam.hpp"
#include "acoc/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace acoc
{
    namespace
    {
        constexpr std::array<std::uint64_t, max_mode_order + 1> factorials = [] {
            std::array<std::uint64_t, max_mode_order + 1> f{};
            f[0] = 1;
            for (int k = 1; k <= max_mode_order; ++k)
                f[k] = f[k - 1] * static_cast<std::uint64_t>(k);
            return f;
        }();

        void require_nonnegative(double v, const char *what)
        {
            if (!(v >= 0.0))
                throw std::invalid_argument(std::string(what) + " must be non-negative");
        }

        void require_ring_mode(int mode)
        {
            if (mode == 0)
                throw NoRingError();
            if (std::abs(mode) > max_mode_order)
                throw std::invalid_argument("OAM mode order out of modeled range");
        }

        // Prefactor 2 / (pi w^2 |l|!) and radial scale 2 / w^2 of the p = 0 profile.
        struct ProfileTerms
        {
            double prefactor;
            double scale;
        };

        ProfileTerms profile_terms(int mode, double w)
        {
            const double w2 = w * w;
            return {2.0 / (pi * w2 * mode_factorial(mode)), 2.0 / w2};
        }
    } // namespace

    BeamSpec::BeamSpec(double wavelength_m, int mode_order, double waist_m)
        : wavelength(wavelength_m), mode(mode_order), waist(waist_m)
    {
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            throw std::invalid_argument("BeamSpec: wavelength must be positive");
        if (!(waist > 0.0) || !std::isfinite(waist))
            throw std::invalid_argument("BeamSpec: waist must be positive");
        if (std::abs(mode) > max_mode_order)
            throw std::invalid_argument("BeamSpec: OAM mode order out of modeled range");
    }

    double BeamSpec::rayleigh_range() const { return pi * waist * waist / wavelength; }

    WaistInfeasibleError::WaistInfeasibleError(double deficit)
        : std::domain_error("waist does not exist: ring radius is " + std::to_string(deficit) +
                            " m below the feasible radius"),
          deficit_(deficit)
    {
    }

    double mode_factorial(int mode)
    {
        const int order = std::abs(mode);
        if (order > max_mode_order)
            throw std::invalid_argument("OAM mode order out of modeled range");
        return static_cast<double>(factorials[static_cast<std::size_t>(order)]);
    }

    double beam_radius(const BeamSpec &spec, double z)
    {
        require_nonnegative(z, "axial distance");
        const double q = z / spec.rayleigh_range();
        return spec.waist * std::sqrt(1.0 + q * q);
    }

    double intensity(const BeamSpec &spec, double r, double z)
    {
        require_nonnegative(r, "radial distance");
        const auto [prefactor, scale] = profile_terms(spec.mode, beam_radius(spec, z));
        return kernels::detail::lg_term(static_cast<unsigned>(std::abs(spec.mode)), prefactor, scale, r);
    }

    void intensity_profile(int mode, double beam_radius_m, std::span<const double> r, std::span<double> out)
    {
        if (!(beam_radius_m > 0.0))
            throw std::invalid_argument("beam radius must be positive");
        const auto [prefactor, scale] = profile_terms(mode, beam_radius_m);
        kernels::lg_intensity(static_cast<unsigned>(std::abs(mode)), prefactor, scale, r, out);
    }

    double enclosed_power(int mode, double beam_radius_m, double r_max, std::size_t intervals)
    {
        if (!(r_max >= 0.0))
            throw std::invalid_argument("radius must be non-negative");
        const std::size_t n = std::max<std::size_t>(2, intervals + (intervals % 2));
        const double h = r_max / static_cast<double>(n);
        std::vector<double> r(n + 1), profile(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            r[i] = h * static_cast<double>(i);
        intensity_profile(mode, beam_radius_m, r, profile);
        double sum = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
        {
            const double weight = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            sum += weight * profile[i] * r[i];
        }
        return 2.0 * pi * sum * h / 3.0;
    }

    double optimal_ring_radius(const BeamSpec &spec, double z)
    {
        require_ring_mode(spec.mode);
        return std::sqrt(std::abs(spec.mode) / 2.0) * beam_radius(spec, z);
    }

    double feasible_ring_radius(double wavelength, int mode, double z)
    {
        require_ring_mode(mode);
        require_nonnegative(z, "axial distance");
        if (!(wavelength > 0.0))
            throw std::invalid_argument("wavelength must be positive");
        return std::sqrt(z * wavelength * std::abs(mode) / pi);
    }

    WaistRoots waist_roots(const RingTarget &target, double wavelength, int mode)
    {
        require_ring_mode(mode);
        if (!(target.ring_radius > 0.0) || !(target.axial_distance > 0.0))
            throw std::invalid_argument("ring target radius and distance must be positive");
        if (!(wavelength > 0.0))
            throw std::invalid_argument("wavelength must be positive");

        const double order = std::abs(mode);
        const double half_sum = target.ring_radius * target.ring_radius / order; // r^2 / |l|
        const double root_product = target.axial_distance * wavelength / pi;     // z lambda / pi

        // Factored form keeps the discriminant accurate near the feasibility boundary.
        double discriminant = (half_sum - root_product) * (half_sum + root_product);
        if (discriminant < 0.0)
        {
            // Tolerate rounding when the target sits exactly on the boundary.
            if (root_product - half_sum > 1e-12 * root_product)
            {
                const double r_fea = feasible_ring_radius(wavelength, mode, target.axial_distance);
                throw WaistInfeasibleError(r_fea - target.ring_radius);
            }
            discriminant = 0.0;
        }

        // x_small * x_large = root_product^2; the product form avoids cancellation.
        const double larger = half_sum + std::sqrt(discriminant);
        const double smaller = std::min(root_product * root_product / larger, larger);
        return {std::sqrt(smaller), std::sqrt(larger), discriminant};
    }

    double waist_solve(const RingTarget &target, double wavelength, int mode)
    {
        return waist_roots(target, wavelength, mode).smaller_waist;
    }

} // namespace acoc
