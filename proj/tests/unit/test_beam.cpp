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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace acoc;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    // Independent reading of the profile: direct formula, no shared helpers.
    double reference_intensity(int mode, double w, double r)
    {
        const int l = std::abs(mode);
        const double t = 2.0 * r * r / (w * w);
        return 2.0 / (pi * w * w * std::tgamma(l + 1.0)) * std::pow(t, l) * std::exp(-t);
    }

    // Regularized lower incomplete gamma P(l + 1, t): power inside a circle of radius R with t = 2 R^2 / w^2.
    double reference_enclosed(int mode, double w, double radius)
    {
        const double t = 2.0 * radius * radius / (w * w);
        double term = 1.0, sum = 1.0;
        for (int k = 1; k <= std::abs(mode); ++k)
        {
            term *= t / k;
            sum += term;
        }
        return 1.0 - std::exp(-t) * sum;
    }

    // Smaller root of x^2 - b x + c = 0 by bisection on [0, b / 2].
    double bisect_smaller_root(double b, double c)
    {
        const auto f = [&](double x) { return x * x - b * x + c; };
        double lo = 0.0, hi = 0.5 * b;
        for (int i = 0; i < 200; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            (f(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
} // namespace

TEST_CASE("BeamSpec rejects invalid parameters")
{
    CHECK_THROWS_AS(BeamSpec(0.0, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BeamSpec(0.3, 1, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(BeamSpec(0.3, max_mode_order + 1, 1.0), std::invalid_argument);
    CHECK_THAT(BeamSpec(pi, 1, 1.0).rayleigh_range(), WithinRel(1.0, 1e-15));
}

TEST_CASE("Beam radius")
{
    const BeamSpec spec(pi, 1, 1.0);
    CHECK(beam_radius(spec, 0.0) == 1.0);
    CHECK_THAT(beam_radius(spec, 1.0), WithinRel(std::sqrt(2.0), 1e-15));
    CHECK_THROWS(beam_radius(spec, -1.0));
}

TEST_CASE("Intensity at reference points")
{
    CHECK(intensity(BeamSpec(0.3, 1, 1.0), 0.0, 0.0) == 0.0);
    CHECK_THAT(intensity(BeamSpec(0.3, 0, 1.0), 0.0, 0.0), WithinRel(2.0 / pi, 1e-15));
    CHECK_THAT(intensity(BeamSpec(0.3, 1, 1.0), std::sqrt(0.5), 0.0), WithinRel(2.0 / pi * std::exp(-1.0), 1e-14));
    CHECK_THAT(intensity(BeamSpec(0.3, -3, 0.7), 0.9, 12.0),
               WithinRel(intensity(BeamSpec(0.3, 3, 0.7), 0.9, 12.0), 1e-15));
}

TEST_CASE("Intensity profile matches the direct formula")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> radius(0.0, 8.0);
    for (int mode = -6; mode <= 6; ++mode)
    {
        std::vector<double> r(257), out(257);
        for (auto &v : r)
            v = radius(rng);
        intensity_profile(mode, 1.7, r, out);
        for (std::size_t i = 0; i < r.size(); ++i)
            CHECK_THAT(out[i], WithinRel(reference_intensity(mode, 1.7, r[i]), 1e-12) ||
                                   WithinAbs(0.0, 1e-300));
    }
}

TEST_CASE("Profile integrates to unit power")
{
    for (int mode : {0, 1, 2, 3, 5, 10})
    {
        INFO("mode " << mode);
        CHECK_THAT(enclosed_power(mode, 1.3, 20.0 * 1.3, 20000), WithinAbs(1.0, 1e-6));
        for (double radius : {0.5, 1.0, 2.0})
            CHECK_THAT(enclosed_power(mode, 1.3, radius, 4000),
                       WithinAbs(reference_enclosed(mode, 1.3, radius), 1e-10));
    }
}

TEST_CASE("Ring radius")
{
    CHECK_THAT(optimal_ring_radius(BeamSpec(pi, 1, 2.0), 0.0), WithinRel(std::sqrt(2.0), 1e-15));
    CHECK_THAT(optimal_ring_radius(BeamSpec(pi, 2, 2.0), 0.0), WithinRel(2.0, 1e-15));
    CHECK_THROWS_AS(optimal_ring_radius(BeamSpec(pi, 0, 2.0), 0.0), NoRingError);
}

TEST_CASE("Ring radius agrees with a grid scan of the intensity")
{
    const BeamSpec spec(0.3, 1, 1.0);
    const double z = 50.0;
    const double w = beam_radius(spec, z);
    const std::size_t n = 1000000;
    const double step = 5.0 * w / n;
    double best_r = 0.0, best = -1.0;
    for (std::size_t i = 0; i <= n; ++i)
    {
        const double r = step * i;
        const double v = intensity(spec, r, z);
        if (v > best)
        {
            best = v;
            best_r = r;
        }
    }
    CHECK(std::abs(optimal_ring_radius(spec, z) - best_r) <= step);
}

TEST_CASE("Feasible ring radius")
{
    const double expected = 3.09019361618551664;
    CHECK_THAT(feasible_ring_radius(0.3, 1, 100.0), WithinRel(expected, 1e-15));
    CHECK_THAT(feasible_ring_radius(0.3, 4, 25.0), WithinRel(expected, 1e-15));
    CHECK(feasible_ring_radius(0.3, 1, 0.0) == 0.0);
    CHECK(feasible_ring_radius(0.3, 1, 1e-30) < 1e-15);
    CHECK_THROWS_AS(feasible_ring_radius(0.3, 0, 1.0), NoRingError);
}

TEST_CASE("Waist solve at the reference target")
{
    const double w0 = waist_solve({5.0, 100.0}, 0.3, 1);
    CHECK_THAT(w0, WithinAbs(1.377, 5e-4));
    CHECK_THAT(optimal_ring_radius(BeamSpec(0.3, 1, w0), 100.0), WithinRel(5.0, 1e-12));

    const double c = std::pow(100.0 * 0.3 / pi, 2);
    CHECK_THAT(w0 * w0, WithinRel(bisect_smaller_root(2.0 * 25.0, c), 1e-12));
}

TEST_CASE("Waist solve on the feasibility boundary")
{
    const double z = 80.0, lambda = 0.3;
    for (int mode : {1, 2, 5})
    {
        const double r = feasible_ring_radius(lambda, mode, z);
        const WaistRoots roots = waist_roots({r, z}, lambda, mode);
        CHECK(std::abs(roots.discriminant) <= 1e-9 * std::pow(z * lambda / pi, 2));
        CHECK_THAT(roots.smaller_waist, WithinRel(r / std::sqrt(std::abs(mode)), 1e-7));
        CHECK(roots.smaller_waist <= roots.larger_waist);
    }
}

TEST_CASE("Waist solve below the feasible radius fails")
{
    const double r = 0.9 * feasible_ring_radius(0.3, 1, 100.0);
    CHECK_THROWS_WITH(waist_solve({r, 100.0}, 0.3, 1), ContainsSubstring("waist does not exist"));
    try
    {
        waist_solve({r, 100.0}, 0.3, 1);
    }
    catch (const WaistInfeasibleError &e)
    {
        CHECK_THAT(e.deficit(), WithinRel(feasible_ring_radius(0.3, 1, 100.0) - r, 1e-12));
    }
    CHECK_THROWS_AS(waist_solve({r, 100.0}, 0.3, 0), NoRingError);
}

TEST_CASE("Waist roundtrip over random feasible targets")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
        const double lambda = 0.01 + 0.5 * unit(rng);
        const int mode = 1 + static_cast<int>(unit(rng) * 8);
        const double z = 1.0 + 500.0 * unit(rng);
        const double r = feasible_ring_radius(lambda, mode, z) * (1.0 + 10.0 * unit(rng));
        const double w0 = waist_solve({r, z}, lambda, mode);
        worst = std::max(worst, std::abs(optimal_ring_radius(BeamSpec(lambda, mode, w0), z) - r) / r);

        // The smaller waist is the one with the larger divergence: its Rayleigh range is below z.
        CHECK(BeamSpec(lambda, mode, w0).rayleigh_range() <= z * (1.0 + 1e-12));
    }
    CHECK(worst <= 1e-9);
}
