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

#include "pointerlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pointerlab/continuous_model.hpp"
#include "pointerlab/format.hpp"
#include "pointerlab/pointer_density.hpp"

namespace pointerlab {

double oracle_amplitude_floor(const MeasurementConfig& cfg) {
    return 1e-3 / (std::sqrt(2.0 * std::numbers::pi) * cfg.spread);
}

OracleReport oracle_check(std::size_t count, std::uint64_t seed, double weakness) {
    const MeasurementConfig cfg = MeasurementConfig::from_weakness(weakness);
    const double half = cfg.coupling + 4.0 * cfg.spread;
    const double floor = oracle_amplitude_floor(cfg);
    SeededUniform draw(seed);

    OracleReport report;
    report.weakness = weakness;
    report.points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double z = draw(-half, half);
        const double x = draw(-half, half);
        const QubitState psi(draw(0.0, 2.0 * std::numbers::pi));
        const UnnormalizedQubit a = post_state(z, x, psi, cfg);
        const ComplexQubit b = momentum_oracle_state(z, x, psi, cfg);
        const double diff = std::hypot(std::abs(a.c0 - b.c0), std::abs(a.c1 - b.c1));
        const double scale = std::max(std::hypot(std::abs(b.c0), std::abs(b.c1)), floor);
        report.points.push_back({z, x, psi.theta(), diff / scale});
    }
    if (!report.points.empty()) {
        report.worst = *std::max_element(report.points.begin(), report.points.end(),
                                         [](const OraclePoint& l, const OraclePoint& r) { return l.rel_err < r.rel_err; });
    }
    return report;
}

std::vector<TrotterDeviation> trotter_deviation(std::span<const int> depths, double weakness,
                                                const QubitState& psi, std::span<const Vec2> probes) {
    const MeasurementConfig continuous = MeasurementConfig::from_weakness(weakness);
    std::vector<double> reference;
    reference.reserve(probes.size());
    for (const Vec2& p : probes) {
        reference.push_back(prob_density(p.z, p.x, psi, continuous));
    }
    std::vector<TrotterDeviation> out;
    for (int n : depths) {
        const PointerDensity trotter(psi, MeasurementConfig::from_weakness(weakness, Geometry::Orthogonal90, n));
        double worst = 0.0;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            worst = std::max(worst, std::abs(trotter(probes[i].z, probes[i].x) - reference[i]));
        }
        out.push_back({n, worst});
    }
    return out;
}

double trotter_probe_half_width(double weakness) { return 1.0 + 2.0 * weakness; }

}  // namespace pointerlab
