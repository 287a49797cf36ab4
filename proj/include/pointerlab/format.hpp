// Copyright 2026 The pointerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pointerlab/trotter_model.hpp"

namespace pointerlab {

/// printf("%.17g"): round-trips every double.
inline std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Seeded uniform draws in [lo, hi). Uses the raw mt19937_64 stream rather
/// than std::uniform_real_distribution so sequences match across standard
/// libraries.
class SeededUniform {
  public:
    explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}

    double operator()(double lo, double hi) {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1p-53;
        return lo + (hi - lo) * unit;
    }

  private:
    std::mt19937_64 engine_;
};

/// `count` probe points uniform in [-half_width, half_width]^2.
inline std::vector<Vec2> probe_points(std::size_t count, double half_width, std::uint64_t seed) {
    SeededUniform draw(seed);
    std::vector<Vec2> out(count);
    for (auto& p : out) {
        p.z = draw(-half_width, half_width);
        p.x = draw(-half_width, half_width);
    }
    return out;
}

}  // namespace pointerlab
