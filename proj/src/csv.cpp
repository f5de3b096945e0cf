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

#include "acoc/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace acoc
{
    std::string format_number(double value)
    {
        if (std::isnan(value))
            return "nan";
        if (std::isinf(value))
            return value > 0 ? "inf" : "-inf";
        if (value == 0.0)
            return "0";
        const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
        const int decimals = std::clamp(8 - exponent, 0, 340);
        char buf[400];
        std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
        return buf;
    }
} // namespace acoc
