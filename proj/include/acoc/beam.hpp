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

#include <cstddef>
#include <span>
#include <stdexcept>

namespace acoc
{
    /// Largest |mode| with an exactly tabulated factorial.
    inline constexpr int max_mode_order = 20;

    inline constexpr double pi = 3.14159265358979323846;

    /// Laguerre-Gaussian beam with radial index p = 0.
    ///
    /// The intensity profile is unit-normalized: integrating intensity * 2*pi*r over the
    /// cross-section gives 1 at every propagation distance. Transmit power is applied by
    /// the link model.
    struct BeamSpec
    {
        double wavelength; // m
        int mode;          // signed OAM order
        double waist;      // m, beam radius at z = 0

        /// Throws std::invalid_argument on non-positive wavelength or waist, or |mode| > max_mode_order.
        BeamSpec(double wavelength, int mode, double waist);

        double rayleigh_range() const;
    };

    /// Desired peak-intensity ring radius at a given axial distance.
    struct RingTarget
    {
        double ring_radius;     // m
        double axial_distance;  // m
    };

    /// Raised by ring-radius operations on the Gaussian (mode 0) beam, which peaks on axis.
    class NoRingError : public std::domain_error
    {
    public:
        NoRingError() : std::domain_error("no off-axis ring: mode 0 peaks on the beam axis") {}
    };

    /// Raised when the requested ring is narrower than the feasible radius at that distance.
    class WaistInfeasibleError : public std::domain_error
    {
    public:
        explicit WaistInfeasibleError(double deficit);

        /// r_fea - r_max, strictly positive.
        double deficit() const noexcept { return deficit_; }

    private:
        double deficit_;
    };

    /// Exact |mode|! as a double; throws std::invalid_argument beyond max_mode_order.
    double mode_factorial(int mode);

    /// w(z) = w0 * sqrt(1 + (z / z_R)^2). Requires z >= 0.
    double beam_radius(const BeamSpec &spec, double z);

    /// Unit-normalized intensity I(r, z) in 1/m^2. Requires r >= 0, z >= 0.
    double intensity(const BeamSpec &spec, double r, double z);

    /// Same profile evaluated at a given beam radius w, for many radii at once.
    /// Uses the runtime-selected SIMD kernel.
    void intensity_profile(int mode, double beam_radius_m, std::span<const double> r, std::span<double> out);

    /// Power inside radius r_max (composite Simpson, `intervals` rounded up to even).
    /// Tends to 1 as r_max grows.
    double enclosed_power(int mode, double beam_radius_m, double r_max, std::size_t intervals);

    /// Radius of peak intensity, sqrt(|l| / 2) * w(z).
    double optimal_ring_radius(const BeamSpec &spec, double z);

    /// Smallest ring radius reachable at distance z: sqrt(z * lambda * |l| / pi).
    double feasible_ring_radius(double wavelength, int mode, double z);

    /// Both roots of the waist quadratic x^2 - (2 r^2 / |l|) x + (z lambda / pi)^2 = 0 in x = w0^2.
    struct WaistRoots
    {
        double smaller_waist; // m
        double larger_waist;  // m
        double discriminant;  // (r^2/|l|)^2 - (z lambda / pi)^2, clamped at zero on the boundary
    };

    WaistRoots waist_roots(const RingTarget &target, double wavelength, int mode);

    /// Smaller waist placing the intensity peak of `mode` on target.ring_radius at target.axial_distance.
    /// Throws WaistInfeasibleError when the target ring is below feasible_ring_radius.
    double waist_solve(const RingTarget &target, double wavelength, int mode);

} // namespace acoc
