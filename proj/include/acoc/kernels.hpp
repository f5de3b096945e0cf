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

// Data-parallel inner loops with a scalar reference and SIMD variants.
//
// The public entry points in namespace acoc::kernels dispatch at runtime to the best
// instruction set the CPU supports. Every variant is also reachable directly so the
// test suite can check it against the scalar reference:
//
//  - squared_distances: bit-identical across variants (no fused multiply-add).
//  - lg_intensity:      equal to the scalar reference within a few ulp (vector exp).

#pragma once

#include <cmath>
#include <span>
#include <string_view>

namespace acoc::kernels
{
    enum class Isa
    {
        scalar,
        avx2,
        neon
    };

    std::string_view isa_name(Isa isa);

    /// True if this build contains the variant and the running CPU supports it.
    bool isa_available(Isa isa);

    /// Best available instruction set.
    Isa detected_isa();

    /// Instruction set used by the dispatching entry points.
    Isa active_isa();

    /// Pin the dispatching entry points to one variant. Throws std::invalid_argument
    /// if the variant is not available.
    void force_isa(Isa isa);

    /// Undo force_isa.
    void reset_isa();

    /// out[i] = (xs[i] - px)^2 + (ys[i] - py)^2. Spans must have equal length.
    void squared_distances(double px, double py, std::span<const double> xs, std::span<const double> ys,
                           std::span<double> out);

    /// out[i] = prefactor * t^order * exp(-t) with t = scale * r[i]^2.
    void lg_intensity(unsigned order, double prefactor, double scale, std::span<const double> r,
                      std::span<double> out);

    namespace detail
    {
        inline double lg_term(unsigned order, double prefactor, double scale, double r)
        {
            const double t = scale * (r * r);
            double power = 1.0;
            for (unsigned k = 0; k < order; ++k)
                power *= t;
            return prefactor * power * std::exp(-t);
        }
    } // namespace detail

    namespace scalar
    {
        void squared_distances(double px, double py, std::span<const double> xs, std::span<const double> ys,
                               std::span<double> out);
        void lg_intensity(unsigned order, double prefactor, double scale, std::span<const double> r,
                          std::span<double> out);
    } // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
    namespace avx2
    {
        void squared_distances(double px, double py, std::span<const double> xs, std::span<const double> ys,
                               std::span<double> out);
        void lg_intensity(unsigned order, double prefactor, double scale, std::span<const double> r,
                          std::span<double> out);
    } // namespace avx2
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
    namespace neon
    {
        void squared_distances(double px, double py, std::span<const double> xs, std::span<const double> ys,
                               std::span<double> out);
        void lg_intensity(unsigned order, double prefactor, double scale, std::span<const double> r,
                          std::span<double> out);
    } // namespace neon
#endif

} // namespace acoc::kernels
