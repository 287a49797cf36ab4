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

#include "pointerlab/density_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pointerlab/format.hpp"
#include "pointerlab/trotter_model.hpp"

namespace pointerlab {

double DensityMap::z_at(std::size_t iz) const {
    return window.z_min + (static_cast<double>(iz) + 0.5) * (window.z_max - window.z_min) / static_cast<double>(nz);
}

double DensityMap::x_at(std::size_t ix) const {
    return window.x_min + (static_cast<double>(ix) + 0.5) * (window.x_max - window.x_min) / static_cast<double>(nx);
}

double DensityMap::cell_area() const {
    return (window.z_max - window.z_min) / static_cast<double>(nz) * (window.x_max - window.x_min) /
           static_cast<double>(nx);
}

double DensityMap::max_value() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double DensityMap::riemann_mass() const {
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum * cell_area();
}

PlaneWindow default_map_window(const QubitState& psi, const MeasurementConfig& cfg) {
    cfg.validate();
    double reach = cfg.coupling;
    if (cfg.geometry == Geometry::Diagonal45) {
        for (const BeamSite& s : evolve(psi, cfg).sites()) {
            reach = std::max({reach, std::abs(s.z0), std::abs(s.x0)});
        }
    }
    return PlaneWindow::square(reach + 5.0 * cfg.spread);
}

namespace {

DensityMap blank_map(const PointerDensity& density, const PlaneWindow& window, std::size_t nz, std::size_t nx) {
    if (nz == 0 || nx == 0) {
        throw std::invalid_argument("density map resolution must be positive");
    }
    if (!(window.z_max > window.z_min) || !(window.x_max > window.x_min)) {
        throw std::invalid_argument("density map window is empty");
    }
    DensityMap map;
    map.nz = nz;
    map.nx = nx;
    map.window = window;
    map.values.assign(nz * nx, 0.0);
    const auto& cfg = density.config();
    map.meta = {cfg.geometry, density.state().theta(), cfg.weakness(),
                cfg.geometry == Geometry::Continuous ? 0 : cfg.trotter_depth};
    return map;
}

void render_row(const PointerDensity& density, DensityMap& map, std::size_t iz) {
    const double z = map.z_at(iz);
    for (std::size_t ix = 0; ix < map.nx; ++ix) {
        map.values[iz * map.nx + ix] = density(z, map.x_at(ix));
    }
}

}  // namespace

DensityMap render_density_map(const PointerDensity& density, const PlaneWindow& window, std::size_t nz,
                              std::size_t nx) {
    DensityMap map = blank_map(density, window, nz, nx);
    const auto rows = static_cast<std::ptrdiff_t>(nz);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t iz = 0; iz < rows; ++iz) {
        render_row(density, map, static_cast<std::size_t>(iz));
    }
    return map;
}

DensityMap render_density_map_serial(const PointerDensity& density, const PlaneWindow& window, std::size_t nz,
                                     std::size_t nx) {
    DensityMap map = blank_map(density, window, nz, nx);
    for (std::size_t iz = 0; iz < nz; ++iz) {
        render_row(density, map, iz);
    }
    return map;
}

void write_density_csv(const DensityMap& map, std::ostream& out) {
    out << "z,x,density\n";
    for (std::size_t iz = 0; iz < map.nz; ++iz) {
        const std::string z = format_g17(map.z_at(iz));
        for (std::size_t ix = 0; ix < map.nx; ++ix) {
            out << z << ',' << format_g17(map.x_at(ix)) << ',' << format_g17(map.at(iz, ix)) << '\n';
        }
    }
}

void write_density_pgm(const DensityMap& map, std::ostream& out) {
    const double peak = map.max_value();
    out << "P5\n";
    out << "# pointerlab meta: model=" << to_string(map.meta.geometry) << " theta_i=" << format_g17(map.meta.theta_i)
        << " weakness=" << format_g17(map.meta.weakness) << " n=" << map.meta.trotter_depth
        << " z=[" << format_g17(map.window.z_min) << ',' << format_g17(map.window.z_max) << "]"
        << " x=[" << format_g17(map.window.x_min) << ',' << format_g17(map.window.x_max) << "]"
        << " scale=per-image max=" << format_g17(peak) << '\n';
    out << map.nz << ' ' << map.nx << '\n' << "65535\n";
    std::string row(2 * map.nz, '\0');
    for (std::size_t r = 0; r < map.nx; ++r) {
        const std::size_t ix = map.nx - 1 - r;
        for (std::size_t iz = 0; iz < map.nz; ++iz) {
            const double v = peak > 0.0 ? map.at(iz, ix) / peak : 0.0;
            const auto level = static_cast<std::uint16_t>(std::lround(std::clamp(v, 0.0, 1.0) * 65535.0));
            row[2 * iz] = static_cast<char>(level >> 8);
            row[2 * iz + 1] = static_cast<char>(level & 0xff);
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

}  // namespace pointerlab
