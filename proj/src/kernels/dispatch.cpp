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

#include <atomic>
#include <stdexcept>
#include <string>

namespace acoc::kernels
{
    namespace
    {
        constexpr int not_forced = -1;
        std::atomic<int> forced{not_forced};
    } // namespace

    std::string_view isa_name(Isa isa)
    {
        switch (isa)
        {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
        }
        return "unknown";
    }

    bool isa_available(Isa isa)
    {
        switch (isa)
        {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__) || defined(_M_ARM64)
            return true;
#else
            return false;
#endif
        }
        return false;
    }

    Isa detected_isa()
    {
        static const Isa best = [] {
            if (isa_available(Isa::avx2))
                return Isa::avx2;
            if (isa_available(Isa::neon))
                return Isa::neon;
            return Isa::scalar;
        }();
        return best;
    }

    Isa active_isa()
    {
        const int f = forced.load(std::memory_order_relaxed);
        return f == not_forced ? detected_isa() : static_cast<Isa>(f);
    }

    void force_isa(Isa isa)
    {
        if (!isa_available(isa))
            throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
        forced.store(static_cast<int>(isa), std::memory_order_relaxed);
    }

    void reset_isa() { forced.store(not_forced, std::memory_order_relaxed); }

    void squared_distances(double px, double py, std::span<const double> xs, std::span<const double> ys,
                           std::span<double> out)
    {
        if (xs.size() != ys.size() || xs.size() != out.size())
            throw std::invalid_argument("squared_distances: span sizes differ");
        switch (active_isa())
        {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2:
            return avx2::squared_distances(px, py, xs, ys, out);
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
        case Isa::neon:
            return neon::squared_distances(px, py, xs, ys, out);
#endif
        default:
            return scalar::squared_distances(px, py, xs, ys, out);
        }
    }

    void lg_intensity(unsigned order, double prefactor, double scale, std::span<const double> r,
                      std::span<double> out)
    {
        if (r.size() != out.size())
            throw std::invalid_argument("lg_intensity: span sizes differ");
        switch (active_isa())
        {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2:
            return avx2::lg_intensity(order, prefactor, scale, r, out);
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
        case Isa::neon:
            return neon::lg_intensity(order, prefactor, scale, r, out);
#endif
        default:
            return scalar::lg_intensity(order, prefactor, scale, r, out);
        }
    }
} // namespace acoc::kernels
