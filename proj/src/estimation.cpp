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

#include "pointerlab/estimation.hpp"

#include <cmath>
#include <exception>
#include <numbers>

#include "pointerlab/continuous_model.hpp"
#include "pointerlab/pointer_density.hpp"

namespace pointerlab {

Guess guess_from_point(double z, double x) {
    if (z == 0.0 && x == 0.0) {
        return {};
    }
    const double theta = wrap_angle(std::atan2(x, z));
    return {theta, std::cos(theta), std::sin(theta)};
}

ObliqueCoords diag_to_orth(double z, double x, int sign) {
    const double s = sign < 0 ? -1.0 : 1.0;
    return {z - x, s * std::numbers::sqrt2 * x};
}

double pointwise_fidelity(double theta_i, double theta_g) {
    const double c = std::cos(0.5 * (theta_i - theta_g));
    return c * c;
}

QuadResult avg_fidelity_quad(const QubitState& psi, const MeasurementConfig& cfg, const FidelityOptions& opts) {
    const PointerDensity density(psi, cfg);
    const GuessFrame frame =
        opts.frame.value_or(cfg.geometry == Geometry::Diagonal45 ? GuessFrame::Oblique : GuessFrame::Raw);
    const double cos_i = psi.sigma_z();
    const double sin_i = psi.sigma_x();

    // cos^2((theta_i - theta_g)/2) = (1 + cos(theta_i - theta_g)) / 2, with
    // cos(theta_i - theta_g) taken directly from the guess direction.
    auto integrand = [&](double z, double x) {
        double gz = z;
        double gx = x;
        if (frame == GuessFrame::Oblique) {
            const ObliqueCoords o = diag_to_orth(z, x, cfg.diagonal_sign);
            gz = o.u;
            gx = o.v;
        }
        const double r = std::hypot(gz, gx);
        const double overlap = r > 0.0 ? (gz * cos_i + gx * sin_i) / r : cos_i;
        return density(z, x) * 0.5 * (1.0 + overlap);
    };
    QuadSpec spec;
    spec.abs_tol = opts.abs_tol;
    spec.rel_tol = 1e-12;
    spec.max_refinements = opts.max_refinements;
    return integrate_plane(integrand, density.window(), spec, opts.exec);
}

double avg_fidelity(const QubitState& psi, const MeasurementConfig& cfg, const FidelityOptions& opts) {
    const QuadResult r = avg_fidelity_quad(psi, cfg, opts);
    if (!r.converged) {
        throw QuadratureFailure("avg_fidelity: plane quadrature did not converge", r.value, r.err_est);
    }
    return r.value;
}

namespace {

template <class F>
double radial_integral(const MeasurementConfig& cfg, double abs_tol, F&& weight) {
    if (cfg.geometry != Geometry::Continuous) {
        throw std::invalid_argument("polar route requires the continuous geometry");
    }
    QuadSpec spec;
    spec.abs_tol = abs_tol;
    spec.rel_tol = 1e-12;
    const double reach = cfg.coupling + 12.0 * cfg.spread;
    const QuadResult r = integrate_interval(
        [&](double rho) {
            const RadialProfile p = radial_profile(rho, cfg);
            return rho * weight(p);
        },
        0.0, reach, spec);
    if (!r.converged) {
        throw QuadratureFailure("radial integral did not converge", r.value, r.err_est);
    }
    return r.value;
}

}  // namespace

double avg_fidelity_polar(const MeasurementConfig& cfg, double abs_tol) {
    return std::numbers::pi *
           radial_integral(cfg, abs_tol / std::numbers::pi,
                           [](const RadialProfile& p) { return p.i1 * p.i1 + p.k * p.k + p.i1 * p.k; });
}

double total_probability_polar(const MeasurementConfig& cfg, double abs_tol) {
    return 2.0 * std::numbers::pi *
           radial_integral(cfg, abs_tol / (2.0 * std::numbers::pi),
                           [](const RadialProfile& p) { return p.i1 * p.i1 + p.k * p.k; });
}

FidelityCurve fidelity_curve(const QubitState& psi, const MeasurementConfig& cfg_base,
                             std::span<const double> weakness_grid, const FidelityOptions& opts) {
    cfg_base.validate();
    for (std::size_t i = 0; i < weakness_grid.size(); ++i) {
        if (!(weakness_grid[i] > 0.0) || (i > 0 && !(weakness_grid[i] > weakness_grid[i - 1]))) {
            throw std::invalid_argument("fidelity_curve: weakness grid must be positive and strictly increasing");
        }
    }
    FidelityCurve curve;
    curve.model = cfg_base.geometry;
    curve.theta_i = psi.theta();
    curve.samples.resize(weakness_grid.size());

    std::vector<std::exception_ptr> errors(weakness_grid.size());
    FidelityOptions point_opts = opts;
    point_opts.exec = Execution::Serial;
    auto one = [&](std::ptrdiff_t i) {
        const std::size_t k = static_cast<std::size_t>(i);
        try {
            MeasurementConfig cfg = cfg_base;
            cfg.spread = weakness_grid[k] * cfg_base.coupling;
            curve.samples[k] = {weakness_grid[k], avg_fidelity(psi, cfg, point_opts)};
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };
    const auto count = static_cast<std::ptrdiff_t>(weakness_grid.size());
    if (opts.exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            one(i);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            one(i);
        }
    }
    for (std::size_t k = 0; k < errors.size(); ++k) {
        if (errors[k]) {
            try {
                std::rethrow_exception(errors[k]);
            } catch (const std::exception& e) {
                throw FidelityCurveError(weakness_grid[k], e.what());
            }
        }
    }
    return curve;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) {
        throw std::invalid_argument("log_spaced: need 0 < lo < hi and count >= 2");
    }
    std::vector<double> out(count);
    const double step = std::log(hi / lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = lo * std::exp(step * static_cast<double>(i));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::optional<SecondWind> find_second_wind(const FidelityCurve& curve) {
    const auto& s = curve.samples;
    std::optional<SecondWind> best;
    std::optional<std::size_t> lowest_min;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double f = s[i].f_avg;
        if (f < s[i - 1].f_avg && f <= s[i + 1].f_avg) {
            if (!lowest_min || f < s[*lowest_min].f_avg) {
                lowest_min = i;
            }
        } else if (lowest_min && f > s[i - 1].f_avg && f >= s[i + 1].f_avg) {
            if (!best || f > best->maximum.f_avg) {
                best = SecondWind{*lowest_min, i, s[*lowest_min], s[i]};
            }
        }
    }
    return best;
}

}  // namespace pointerlab
