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

// Cross-model checks shared by the CLI and the acceptance suite.

#include <cstdint>
#include <span>
#include <vector>

#include "pointerlab/measurement.hpp"
#include "pointerlab/trotter_model.hpp"

namespace pointerlab {

struct OraclePoint {
    double z;
    double x;
    double theta_i;
    double rel_err;
};

struct OracleReport {
    double weakness = 0.0;
    std::vector<OraclePoint> points;
    OraclePoint worst{};
};

/// Amplitude floor for relative comparisons: 1e-3 of the pointer peak
/// amplitude (2 pi spread^2)^(-1/2). Below it errors are measured against
/// the floor instead of the (vanishing) local amplitude.
double oracle_amplitude_floor(const MeasurementConfig& cfg);

/// post_state vs momentum_oracle_state at `count` seeded points with
/// |z|, |x| <= coupling + 4 spread and seeded input angles.
OracleReport oracle_check(std::size_t count, std::uint64_t seed, double weakness);

struct TrotterDeviation {
    int trotter_depth;
    double max_deviation;
};

/// max over probes of |P_trotter90(n) - P_continuous| for each n.
std::vector<TrotterDeviation> trotter_deviation(std::span<const int> depths, double weakness,
                                                const QubitState& psi, std::span<const Vec2> probes);

/// Probe window half-width used by trotter_deviation callers: coupling + 2 spread.
double trotter_probe_half_width(double weakness);

}  // namespace pointerlab
