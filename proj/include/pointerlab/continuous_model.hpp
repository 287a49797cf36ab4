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

// Exact joint sigma_z / sigma_x pointer measurement.
//
// After the interaction exp(-i coupling (sigma_z p_z + sigma_x p_x)) and a
// pointer reading (z, x), the system is left in
//
//     (I1 + I2 sigma_z + I3 sigma_x) |psi>,
//
// where I1..I3 are angular integrals of Dawson-function kernels over
// a(phi) = z cos phi + x sin phi. An eigenvalue +1 moves its pointer
// towards the positive axis, so |0> lands at z > 0 and |+> at x > 0.

#include <complex>

#include "pointerlab/measurement.hpp"
#include "pointerlab/quadrature.hpp"

namespace pointerlab {

struct IIntegrals {
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;
    double err_est = 0.0;
};

/// Angular quadrature settings used for (z, x): absolute 1e-9, relative
/// 1e-8 on the I's, with a starting resolution fine enough to see kernel
/// features of width ~spread.
QuadSpec angular_spec(double z, double x, const MeasurementConfig& cfg);

/// Throws std::invalid_argument for non-continuous geometries and
/// QuadratureFailure when the angular rule does not converge.
IIntegrals i_integrals(double z, double x, const MeasurementConfig& cfg);
IIntegrals i_integrals(double z, double x, const MeasurementConfig& cfg, const QuadSpec& spec);

UnnormalizedQubit post_state(double z, double x, const QubitState& psi, const MeasurementConfig& cfg);

/// P(z, x | psi) = I1^2 + I2^2 + I3^2 + 2 I1 I2 <sigma_z> + 2 I1 I3 <sigma_x>.
double prob_density(double z, double x, const QubitState& psi, const MeasurementConfig& cfg);

/// Density from precomputed integrals.
double prob_density(const IIntegrals& in, const QubitState& psi);

/// Radial profile used by the polar route: I1(r) and K(r), where
/// I2 = K cos(theta) and I3 = K sin(theta) at (r cos theta, r sin theta).
struct RadialProfile {
    double i1 = 0.0;
    double k = 0.0;
};
RadialProfile radial_profile(double r, const MeasurementConfig& cfg);

struct ComplexQubit {
    std::complex<double> c0;
    std::complex<double> c1;
    double err_est = 0.0;

    UnnormalizedQubit real_part() const { return {c0.real(), c1.real()}; }
    double max_imag() const { return std::max(std::abs(c0.imag()), std::abs(c1.imag())); }
};

/// Post-measurement state from the raw momentum-space double integral,
/// evaluated by a truncated tensor trapezoid rule with step halving. No
/// Dawson functions are involved; this is the reference for post_state.
/// `rel_tol` is relative to the pointer peak amplitude (2 pi spread^2)^(-1/2).
ComplexQubit momentum_oracle_state(double z, double x, const QubitState& psi, const MeasurementConfig& cfg,
                                   double rel_tol = 1e-12);

/// Standard plane window |z|, |x| <= coupling + 8 spread.
PlaneWindow continuous_window(const MeasurementConfig& cfg);

}  // namespace pointerlab
