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

#include <vector>

#include "pointerlab/measurement.hpp"
#include "pointerlab/quadrature.hpp"
#include "pointerlab/trotter_model.hpp"

namespace pointerlab {

/// Outcome density P(z, x | psi) for any geometry. Trotter grids are evolved
/// once at construction.
class PointerDensity {
  public:
    PointerDensity(const QubitState& psi, const MeasurementConfig& cfg);

    double operator()(double z, double x) const;

    /// Plane window holding all but a negligible tail of the mass.
    const PlaneWindow& window() const { return window_; }

    const QubitState& state() const { return psi_; }
    const MeasurementConfig& config() const { return cfg_; }

  private:
    QubitState psi_;
    MeasurementConfig cfg_;
    std::vector<BeamSite> beams_;
    PlaneWindow window_;
};

}  // namespace pointerlab
