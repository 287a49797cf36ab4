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

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "pointerlab/measurement.hpp"
#include "pointerlab/pointer_density.hpp"
#include "pointerlab/quadrature.hpp"

namespace pointerlab {

struct DensityMapMeta {
    Geometry geometry = Geometry::Continuous;
    double theta_i = 0.0;
    double weakness = 0.0;
    int trotter_depth = 0;
};

/// P(z, x) sampled at cell centers of an nz x nx grid. values[iz * nx + ix].
struct DensityMap {
    std::size_t nz = 0;
    std::size_t nx = 0;
    PlaneWindow window{};
    std::vector<double> values;
    DensityMapMeta meta;

    double z_at(std::size_t iz) const;
    double x_at(std::size_t ix) const;
    double cell_area() const;
    double at(std::size_t iz, std::size_t ix) const { return values[iz * nx + ix]; }
    double max_value() const;
    /// Midpoint-rule total probability.
    double riemann_mass() const;
};

/// Default rendering window: +/-(coupling + 5 spread), widened for the
/// 45 degree geometry whose beams reach further along z.
PlaneWindow default_map_window(const QubitState& psi, const MeasurementConfig& cfg);

/// OpenMP over grid rows.
DensityMap render_density_map(const PointerDensity& density, const PlaneWindow& window, std::size_t nz,
                              std::size_t nx);

/// Serial reference; bit-identical to render_density_map.
DensityMap render_density_map_serial(const PointerDensity& density, const PlaneWindow& window, std::size_t nz,
                                     std::size_t nx);

/// `z,x,density` rows in storage order, 17 significant digits.
void write_density_csv(const DensityMap& map, std::ostream& out);

/// Binary 16-bit PGM, +x up and +z right, scaled by the map maximum. A
/// `# pointerlab meta:` comment records the run parameters and the scale.
void write_density_pgm(const DensityMap& map, std::ostream& out);

}  // namespace pointerlab
