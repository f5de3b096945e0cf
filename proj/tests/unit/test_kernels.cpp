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

#include "acoc/kernels.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cfloat>
#include <cmath>
#include <random>
#include <vector>

using namespace acoc::kernels;

namespace
{
    std::vector<Isa> simd_variants()
    {
        std::vector<Isa> out;
        for (Isa isa : {Isa::avx2, Isa::neon})
            if (isa_available(isa))
                out.push_back(isa);
        return out;
    }

    void run_distances(Isa isa, double px, double py, std::span<const double> xs, std::span<const double> ys,
                       std::span<double> out)
    {
        force_isa(isa);
        squared_distances(px, py, xs, ys, out);
        reset_isa();
    }

    void run_intensity(Isa isa, unsigned order, double pre, double scale, std::span<const double> r,
                       std::span<double> out)
    {
        force_isa(isa);
        lg_intensity(order, pre, scale, r, out);
        reset_isa();
    }

    // Distance in units in the last place between two finite doubles of equal sign.
    double ulps(double a, double b)
    {
        if (a == b)
            return 0.0;
        return std::abs(a - b) / (std::nextafter(std::max(std::abs(a), std::abs(b)), INFINITY) -
                                   std::max(std::abs(a), std::abs(b)));
    }
} // namespace

TEST_CASE("Instruction set bookkeeping")
{
    CHECK(isa_available(Isa::scalar));
    CHECK(isa_name(Isa::scalar) == "scalar");
    CHECK(isa_name(Isa::avx2) == "avx2");
    CHECK(isa_name(Isa::neon) == "neon");
    CHECK(isa_available(detected_isa()));
    CHECK(active_isa() == detected_isa());
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    reset_isa();
    CHECK(active_isa() == detected_isa());
    for (Isa isa : {Isa::avx2, Isa::neon})
        if (!isa_available(isa))
            CHECK_THROWS_AS(force_isa(isa), std::invalid_argument);
}

TEST_CASE("Dispatch rejects mismatched spans")
{
    std::vector<double> a(4), b(5), c(4);
    CHECK_THROWS_AS(squared_distances(0, 0, a, b, c), std::invalid_argument);
    CHECK_THROWS_AS(lg_intensity(1, 1, 1, a, b), std::invalid_argument);
}

TEST_CASE("Scalar kernels match the direct formulas")
{
    const std::vector<double> xs{0, 3, -1.5}, ys{0, 4, 2};
    std::vector<double> d(3);
    scalar::squared_distances(0, 0, xs, ys, d);
    CHECK(d == std::vector<double>{0, 25, 6.25});

    const std::vector<double> r{0.0, 1.0, 2.0};
    std::vector<double> v(3);
    scalar::lg_intensity(2, 3.0, 0.5, r, v);
    CHECK(v[0] == 0.0);
    CHECK(v[1] == 3.0 * 0.25 * std::exp(-0.5));
    CHECK(v[2] == 3.0 * 4.0 * std::exp(-2.0));
}

TEST_CASE("SIMD squared distances are bit-identical to scalar")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    for (Isa isa : simd_variants())
        for (std::size_t n = 0; n < 70; ++n)
        {
            std::vector<double> xs(n), ys(n), ref(n), got(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                xs[i] = u(rng);
                ys[i] = u(rng);
            }
            if (n > 3)
                xs[2] = INFINITY; // removed users sit at infinity
            const double px = u(rng), py = u(rng);
            scalar::squared_distances(px, py, xs, ys, ref);
            run_distances(isa, px, py, xs, ys, got);
            CHECK(got == ref);
        }
}

TEST_CASE("SIMD intensity stays within a few ulp of scalar")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> radius(0.0, 12.0);
    for (Isa isa : simd_variants())
        for (unsigned order : {0u, 1u, 2u, 5u, 10u, 20u})
            for (std::size_t n : {0ul, 1ul, 3ul, 4ul, 7ul, 64ul, 1001ul})
            {
                std::vector<double> r(n), ref(n), got(n);
                for (auto &v : r)
                    v = radius(rng);
                const double scale = 2.0 / (1.7 * 1.7);
                scalar::lg_intensity(order, 0.2, scale, r, ref);
                run_intensity(isa, order, 0.2, scale, r, got);
                for (std::size_t i = 0; i < n; ++i)
                {
                    INFO("order " << order << " r " << r[i]);
                    if (ref[i] < DBL_MIN)
                        CHECK(got[i] < DBL_MIN);
                    else
                        CHECK(ulps(got[i], ref[i]) <= 4.0);
                }
            }
}

TEST_CASE("SIMD intensity far in the tail")
{
    // t beyond the vector exp range, where a high power of t keeps the product normal.
    std::vector<double> r(8), ref(8), got(8);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = std::sqrt(700.0 + 10.0 * static_cast<double>(i));
    for (Isa isa : simd_variants())
    {
        scalar::lg_intensity(20, 1.0, 1.0, r, ref);
        run_intensity(isa, 20, 1.0, 1.0, r, got);
        for (std::size_t i = 0; i < r.size(); ++i)
        {
            INFO("t = " << r[i] * r[i]);
            if (ref[i] < DBL_MIN)
                CHECK(got[i] < DBL_MIN);
            else
                CHECK(ulps(got[i], ref[i]) <= 4.0);
        }
    }
}
