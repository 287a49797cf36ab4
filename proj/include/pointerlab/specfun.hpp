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

namespace pointerlab {

/// Dawson's integral F(x) = exp(-x^2) * integral_0^x exp(y^2) dy.
///
/// Piecewise evaluation: Maclaurin series for |x| < 1, Rybicki's
/// exponential sum for 1 <= |x| < 6, asymptotic series beyond. Absolute
/// error is below 1e-12 on |x| <= 50 and the result is exactly odd.
double dawson(double x);

/// L2-normalized Gaussian pointer amplitude (2 pi s^2)^(-1/4) exp(-u^2 / (4 s^2)).
/// Throws std::invalid_argument for spread <= 0.
double gaussian_amp(double u, double spread);

/// Momentum-space counterpart of gaussian_amp: (2 s^2 / pi)^(1/4) exp(-s^2 p^2).
double gaussian_amp_momentum(double p, double spread);

}  // namespace pointerlab
