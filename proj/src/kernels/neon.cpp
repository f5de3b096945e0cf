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

#include <arm_neon.h>

#include <cassert>
#include <cmath>

namespace acoc::kernels::neon
{
    void squared_distances(double px, double py, std::span<const double> xs, std::span<const double> ys,
                           std::span<double> out)
    {
        assert(xs.size() == ys.size() && xs.size() == out.size());
        const std::size_t n = xs.size();
        const float64x2_t vx = vdupq_n_f64(px);
        const float64x2_t vy = vdupq_n_f64(py);
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
        {
            const float64x2_t dx = vsubq_f64(vld1q_f64(xs.data() + i), vx);
            const float64x2_t dy = vsubq_f64(vld1q_f64(ys.data() + i), vy);
            // Separate multiply and add keep results identical to the scalar reference.
            vst1q_f64(out.data() + i, vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)));
        }
        for (; i < n; ++i)
        {
            const double dx = xs[i] - px;
            const double dy = ys[i] - py;
            out[i] = dx * dx + dy * dy;
        }
    }

    namespace
    {
        // Same reduction and polynomial as the AVX2 variant; caller keeps x in [-708, 0].
        float64x2_t exp_nonpositive(float64x2_t x)
        {
            const float64x2_t n = vrndnq_f64(vmulq_f64(x, vdupq_n_f64(1.4426950408889634074)));
            float64x2_t r = vsubq_f64(x, vmulq_f64(n, vdupq_n_f64(6.93145751953125e-1)));
            r = vsubq_f64(r, vmulq_f64(n, vdupq_n_f64(1.42860682030941723212e-6)));

            static constexpr double inv_fact[] = {
                1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0,
                1.0 / 40320.0,      1.0 / 5040.0,      1.0 / 720.0,      1.0 / 120.0,     1.0 / 24.0,
                1.0 / 6.0,          0.5,               1.0,              1.0};
            float64x2_t p = vdupq_n_f64(inv_fact[0]);
            for (std::size_t k = 1; k < sizeof inv_fact / sizeof inv_fact[0]; ++k)
                p = vaddq_f64(vmulq_f64(p, r), vdupq_n_f64(inv_fact[k]));

            int64x2_t bits = vaddq_s64(vcvtq_s64_f64(n), vdupq_n_s64(1023));
            bits = vshlq_n_s64(bits, 52);
            return vmulq_f64(p, vreinterpretq_f64_s64(bits));
        }

        double tail_term(unsigned order, double prefactor, double scale, double r)
        {
            const double t = scale * (r * r);
            double power = 1.0;
            for (unsigned k = 0; k < order; ++k)
                power *= t;
            return prefactor * power * std::exp(-t);
        }
    } // namespace

    void lg_intensity(unsigned order, double prefactor, double scale, std::span<const double> r,
                      std::span<double> out)
    {
        assert(r.size() == out.size());
        const std::size_t n = r.size();
        const float64x2_t vscale = vdupq_n_f64(scale);
        const float64x2_t vpre = vdupq_n_f64(prefactor);
        const float64x2_t limit = vdupq_n_f64(708.0);
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
        {
            const float64x2_t rv = vld1q_f64(r.data() + i);
            const float64x2_t t = vmulq_f64(vscale, vmulq_f64(rv, rv));
            // Outside the vector exp range (or NaN): scalar path.
            const uint64x2_t in_range = vcleq_f64(t, limit);
            if (vminvq_u32(vreinterpretq_u32_u64(in_range)) == 0)
            {
                out[i] = tail_term(order, prefactor, scale, r[i]);
                out[i + 1] = tail_term(order, prefactor, scale, r[i + 1]);
                continue;
            }
            float64x2_t power = vdupq_n_f64(1.0);
            for (unsigned k = 0; k < order; ++k)
                power = vmulq_f64(power, t);
            const float64x2_t e = exp_nonpositive(vnegq_f64(t));
            vst1q_f64(out.data() + i, vmulq_f64(vmulq_f64(vpre, power), e));
        }
        for (; i < n; ++i)
            out[i] = tail_term(order, prefactor, scale, r[i]);
    }
} // namespace acoc::kernels::neon
