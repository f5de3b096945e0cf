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

#include <cassert>

namespace acoc::kernels::scalar
{
    void squared_distances(double px, double py, std::span<const double> xs, std::span<const double> ys,
                           std::span<double> out)
    {
        assert(xs.size() == ys.size() && xs.size() == out.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
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
        for (std::size_t i = 0; i < r.size(); ++i)
            out[i] = detail::lg_term(order, prefactor, scale, r[i]);
    }
} // namespace acoc::kernels::scalar
