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

// Compiled with -mavx2. Only reached after a runtime CPU check.

#include "acoc/kernels.hpp"

#include <immintrin.h>

#include <cassert>
#include <cmath>
#include <iterator>

namespace acoc::kernels::avx2
{
    namespace
    {
        // exp(x) for x <= 0. Cody-Waite reduction to |r| <= ln2/2, then a degree-13 Taylor
        // polynomial (truncation error below 1e-17) and an exponent-field scale by 2^n.
        // Arguments below -708 flush to zero.
        __m256d exp_nonpositive(__m256d x)
        {
            const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
            const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
            const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
            const __m256d lower = _mm256_set1_pd(-708.0);

            const __m256d underflow = _mm256_cmp_pd(x, lower, _CMP_LT_OQ);
            x = _mm256_max_pd(x, lower);

            const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
            __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(n, ln2_hi));
            r = _mm256_sub_pd(r, _mm256_mul_pd(n, ln2_lo));

            static constexpr double inv_fact[] = {
                1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0,
                1.0 / 40320.0,      1.0 / 5040.0,      1.0 / 720.0,      1.0 / 120.0,     1.0 / 24.0,
                1.0 / 6.0,          0.5,               1.0,              1.0};
            __m256d p = _mm256_set1_pd(inv_fact[0]);
            for (std::size_t k = 1; k < std::size(inv_fact); ++k)
                p = _mm256_add_pd(_mm256_mul_pd(p, r), _mm256_set1_pd(inv_fact[k]));

            const __m128i n32 = _mm256_cvtpd_epi32(n);
            __m256i bits = _mm256_cvtepi32_epi64(n32);
            bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
            bits = _mm256_slli_epi64(bits, 52);
            const __m256d scale = _mm256_castsi256_pd(bits);

            return _mm256_andnot_pd(underflow, _mm256_mul_pd(p, scale));
        }

        // Local copy of the scalar tail: inline functions from headers must not be
        // instantiated in this -mavx2 translation unit.
        double tail_term(unsigned order, double prefactor, double scale, double r)
        {
            const double t = scale * (r * r);
            double power = 1.0;
            for (unsigned k = 0; k < order; ++k)
                power *= t;
            return prefactor * power * std::exp(-t);
        }
    } // namespace

    void squared_distances(double px, double py, std::span<const double> xs, std::span<const double> ys,
                           std::span<double> out)
    {
        assert(xs.size() == ys.size() && xs.size() == out.size());
        const std::size_t n = xs.size();
        const __m256d vx = _mm256_set1_pd(px);
        const __m256d vy = _mm256_set1_pd(py);
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4)
        {
            const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs.data() + i), vx);
            const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys.data() + i), vy);
            _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
        }
        for (; i < n; ++i)
        {
            const double dx = xs[i] - px;
            const double dy = ys[i] - py;
            out[i] = dx * dx + dy * dy;
        }
    }

    void lg_intensity(unsigned order, double prefactor, double scale, std::span<const double> r,
                      std::span<double> out)
    {
        assert(r.size() == out.size());
        const std::size_t n = r.size();
        const __m256d vscale = _mm256_set1_pd(scale);
        const __m256d vpre = _mm256_set1_pd(prefactor);
        const __m256d zero = _mm256_setzero_pd();
        const __m256d limit = _mm256_set1_pd(708.0);
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4)
        {
            const __m256d rv = _mm256_loadu_pd(r.data() + i);
            const __m256d t = _mm256_mul_pd(vscale, _mm256_mul_pd(rv, rv));
            // Past the vector exp range t^order can still keep the product normal.
            if (_mm256_movemask_pd(_mm256_cmp_pd(t, limit, _CMP_NLE_UQ)) != 0)
            {
                for (std::size_t j = i; j < i + 4; ++j)
                    out[j] = tail_term(order, prefactor, scale, r[j]);
                continue;
            }
            __m256d power = _mm256_set1_pd(1.0);
            for (unsigned k = 0; k < order; ++k)
                power = _mm256_mul_pd(power, t);
            const __m256d e = exp_nonpositive(_mm256_sub_pd(zero, t));
            _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(_mm256_mul_pd(vpre, power), e));
        }
        for (; i < n; ++i)
            out[i] = tail_term(order, prefactor, scale, r[i]);
    }
} // namespace acoc::kernels::avx2
