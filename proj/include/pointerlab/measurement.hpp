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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pointerlab {

/// Normalizes an angle to [0, 2 pi).
inline double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) {
        t += two_pi;
    }
    return t >= two_pi ? 0.0 : t;
}

/// Pure qubit state cos(theta/2)|0> + sin(theta/2)|1> in the x-z plane of
/// the Bloch sphere. |0> and |1> are identified with |H> and |V>.
class QubitState {
  public:
    explicit QubitState(double theta) : theta_(wrap_angle(theta)) {}

    static QubitState H() { return QubitState(0.0); }
    static QubitState V() { return QubitState(std::numbers::pi); }
    static QubitState D() { return QubitState(0.5 * std::numbers::pi); }
    /// (|0> - |1>)/sqrt(2), up to a global sign.
    static QubitState A() { return QubitState(1.5 * std::numbers::pi); }

    double theta() const { return theta_; }
    double alpha() const { return std::cos(0.5 * theta_); }
    double beta() const { return std::sin(0.5 * theta_); }
    double sigma_z() const { return std::cos(theta_); }
    double sigma_x() const { return std::sin(theta_); }

  private:
    double theta_;
};

enum class Geometry { Continuous, Orthogonal90, Diagonal45 };

std::string_view to_string(Geometry g);

/// Pointer spread, total coupling, and how the coupling is realized.
struct MeasurementConfig {
    double spread = 1.0;
    double coupling = 1.0;
    Geometry geometry = Geometry::Continuous;
    int trotter_depth = 1;
    /// Direction taken by the sigma_x = +1 branch of the 45 degree crystal:
    /// +1 is the positive diagonal, -1 the negative one.
    int diagonal_sign = 1;

    /// Config in units where the coupling is 1.
    static MeasurementConfig from_weakness(double weakness, Geometry geometry = Geometry::Continuous,
                                           int trotter_depth = 1) {
        MeasurementConfig cfg;
        cfg.spread = weakness;
        cfg.coupling = 1.0;
        cfg.geometry = geometry;
        cfg.trotter_depth = trotter_depth;
        cfg.validate();
        return cfg;
    }

    double weakness() const { return spread / coupling; }

    /// Displacement of each eigen-branch per Trotter step, coupling / n.
    double step_displacement() const { return coupling / trotter_depth; }

    /// Relative displacement between the two branches of one crystal, 2 coupling / n.
    double crystal_displacement() const { return 2.0 * coupling / trotter_depth; }

    void validate() const {
        if (!(spread > 0.0) || !std::isfinite(spread)) {
            throw std::invalid_argument("MeasurementConfig: spread must be positive and finite");
        }
        if (!(coupling > 0.0) || !std::isfinite(coupling)) {
            throw std::invalid_argument("MeasurementConfig: coupling must be positive and finite");
        }
        if (geometry != Geometry::Continuous && trotter_depth < 1) {
            throw std::invalid_argument("MeasurementConfig: trotter depth must be at least 1");
        }
        if (diagonal_sign != 1 && diagonal_sign != -1) {
            throw std::invalid_argument("MeasurementConfig: diagonal_sign must be +1 or -1");
        }
    }
};

/// Real, unnormalized qubit amplitudes. The squared norm of a post-measurement
/// state is the outcome density at the conditioning point.
struct UnnormalizedQubit {
    double c0 = 0.0;
    double c1 = 0.0;

    double norm2() const { return c0 * c0 + c1 * c1; }
};

/// Raised when an adaptive integral misses its tolerance within the budget.
class QuadratureFailure : public std::runtime_error {
  public:
    QuadratureFailure(const std::string& what, double value, double err_est)
        : std::runtime_error(what + " (value " + std::to_string(value) + ", error estimate " +
                             std::to_string(err_est) + ")"),
          value_(value),
          err_est_(err_est) {}

    double value() const { return value_; }
    double err_est() const { return err_est_; }

  private:
    double value_;
    double err_est_;
};

}  // namespace pointerlab
