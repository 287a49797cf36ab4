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

// State guessing from a pointer reading and the fidelity functionals built
// on it. The guess reads the pointer pair (z, x) as one 2D pointer and
// takes its direction: <sigma_z>_g = cos theta_g, <sigma_x>_g = sin theta_g.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pointerlab/measurement.hpp"
#include "pointerlab/quadrature.hpp"

namespace pointerlab {

struct Guess {
    double theta_g = 0.0;
    double sigma_z_g = 1.0;
    double sigma_x_g = 0.0;
};

/// theta_g = atan2(x, z) in [0, 2 pi). The origin maps to theta_g = 0.
Guess guess_from_point(double z, double x);

struct ObliqueCoords {
    double u;
    double v;
};

/// Coordinates (u, v) of r = u e_z + v w with w = sign (e_z + e_x)/sqrt(2):
/// (z - x, sqrt(2) x) for sign = +1.
ObliqueCoords diag_to_orth(double z, double x, int sign = 1);

/// |<psi_g|psi_i>|^2 = cos^2((theta_i - theta_g) / 2).
double pointwise_fidelity(double theta_i, double theta_g);

/// Where the guess reads its angle: raw pointer coordinates, or the oblique
/// frame of the 45 degree crystal mapped back to orthogonal axes.
enum class GuessFrame { Raw, Oblique };

struct FidelityOptions {
    double abs_tol = 1e-5;
    /// Unset: Oblique for Diagonal45, Raw otherwise.
    std::optional<GuessFrame> frame;
    Execution exec = Execution::Parallel;
    /// Outer panel-split budget of the plane quadrature.
    int max_refinements = 2000;
};

/// Plane integral of P(z, x | psi) * pointwise fidelity over the model's
/// window. Returns the raw quadrature result.
QuadResult avg_fidelity_quad(const QubitState& psi, const MeasurementConfig& cfg, const FidelityOptions& opts = {});

/// As avg_fidelity_quad, throwing QuadratureFailure on non-convergence.
double avg_fidelity(const QubitState& psi, const MeasurementConfig& cfg, const FidelityOptions& opts = {});

/// Continuous model only: pi * integral r (I1^2 + K^2 + I1 K) dr, the same
/// quantity via the radial profile. Independent of psi.
double avg_fidelity_polar(const MeasurementConfig& cfg, double abs_tol = 1e-9);

/// Continuous model only: 2 pi * integral r (I1^2 + K^2) dr.
double total_probability_polar(const MeasurementConfig& cfg, double abs_tol = 1e-9);

struct FidelitySample {
    double weakness;
    double f_avg;
};

struct FidelityCurve {
    Geometry model = Geometry::Continuous;
    double theta_i = 0.0;
    std::vector<FidelitySample> samples;
};

class FidelityCurveError : public std::runtime_error {
  public:
    FidelityCurveError(double weakness, const std::string& cause)
        : std::runtime_error("fidelity curve failed at weakness " + std::to_string(weakness) + ": " + cause),
          weakness_(weakness) {}
    double weakness() const { return weakness_; }

  private:
    double weakness_;
};

/// avg_fidelity at spread = weakness * cfg_base.coupling for each grid
/// value. The grid must be strictly increasing and positive. Points are
/// evaluated concurrently; output order follows the grid.
FidelityCurve fidelity_curve(const QubitState& psi, const MeasurementConfig& cfg_base,
                             std::span<const double> weakness_grid, const FidelityOptions& opts = {});

/// `count` log-spaced values from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

/// Highest interior local maximum preceded by an interior local minimum,
/// paired with the lowest such minimum before it.
struct SecondWind {
    std::size_t min_index;
    std::size_t max_index;
    FidelitySample minimum;
    FidelitySample maximum;
};
std::optional<SecondWind> find_second_wind(const FidelityCurve& curve);

}  // namespace pointerlab
