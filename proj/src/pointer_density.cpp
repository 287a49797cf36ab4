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

#include "pointerlab/pointer_density.hpp"

#include "pointerlab/continuous_model.hpp"

namespace pointerlab {

PointerDensity::PointerDensity(const QubitState& psi, const MeasurementConfig& cfg)
    : psi_(psi), cfg_(cfg), window_(continuous_window(cfg)) {
    cfg_.validate();
    if (cfg_.geometry != Geometry::Continuous) {
        const BeamGrid grid = evolve(psi_, cfg_);
        beams_ = grid.sites();
        window_ = grid_window(grid);
    }
}

double PointerDensity::operator()(double z, double x) const {
    if (cfg_.geometry == Geometry::Continuous) {
        return prob_density(z, x, psi_, cfg_);
    }
    return density_at(beams_, cfg_.spread, z, x);
}

}  // namespace pointerlab
