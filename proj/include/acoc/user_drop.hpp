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

#include "acoc/geometry.hpp"

#include <cstdint>
#include <vector>

namespace acoc
{
    /// Ground users of one Monte Carlo trial. A user's identity is its index in `positions`.
    struct UserDrop
    {
        std::vector<GroundPoint> positions;
        GroundPoint hotspot_center;
        std::uint64_t drop_seed = 0;

        std::size_t size() const { return positions.size(); }
        const GroundPoint &operator[](std::size_t i) const { return positions[i]; }
    };
} // namespace acoc
