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

#include "pointerlab/continuous_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pointerlab/specfun.hpp"

namespace pointerlab {
namespace {

void require_continuous(const MeasurementConfig& cfg, const char* who) {
    cfg.validate();
    if (cfg.geometry != Geometry::Continuous) {
        throw std::invalid_argument(std::string(who) + ": requires the continuous geometry");
    }
}

// (1 / (2 pi spread^2))^(1/2): the constant part of I1.
double i1_constant(double spread) { return 1.0 / (std::sqrt(2.0 * std::numbers::pi) * spread); }

// 1 / (2^(5/2) pi^(3/2) spread^2): prefactor of the angular Dawson integrals.
double kernel_prefactor(double spread) {
    return 1.0 / (std::pow(2.0, 2.5) * std::pow(std::numbers::pi, 1.5) * spread * spread);
}

}  // namespace

QuadSpec angular_spec(double z, double x, const MeasurementConfig& cfg) {
    QuadSpec spec;
    spec.abs_tol = 1e-9;
    spec.rel_tol = 1e-8;
    const double reach = std::hypot(z, x) + cfg.coupling;
    const double wanted = std::numbers::pi * reach / cfg.spread;
    spec.initial_nodes = std::min<std::size_t>(
        detail::kCircleNodes / 2, std::max<std::size_t>(32, static_cast<std::size_t>(std::ceil(wanted))));
    spec.max_refinements = static_cast<int>(detail::kCircleLevels);
    return spec;
}

IIntegrals i_integrals(double z, double x, const MeasurementConfig& cfg) {
    return i_integrals(z, x, cfg, angular_spec(z, x, cfg));
}

IIntegrals i_integrals(double z, double x, const MeasurementConfig& cfg, const QuadSpec& spec) {
    require_continuous(cfg, "i_integrals");
    const double spread = cfg.spread;
    const double delta = cfg.coupling;
    const double inv_two_spread = 0.5 / spread;
    const double c0 = i1_constant(spread);
    const double pref = kernel_prefactor(spread);

    // The angular integrals are formed in raw units; scale the tolerance so
    // it applies to the I's.
    QuadSpec raw = spec;
    raw.abs_tol = spec.abs_tol / pref;

    auto kernel = [&](double cphi, double sphi) {
        const double a = z * cphi + x * sphi;
        const double am = a - delta;
        const double ap = a + delta;
        const double gm = am * dawson(am * inv_two_spread);
        const double gp = ap * dawson(ap * inv_two_spread);
        const double odd = gp - gm;
        return std::array<double, 3>{gm + gp, odd * cphi, odd * sphi};
    };
    const auto r = integrate_periodic_circle<3>(kernel, raw);
    IIntegrals out;
    out.i1 = c0 - pref * r.value[0];
    out.i2 = pref * r.value[1];
    out.i3 = pref * r.value[2];
    out.err_est = pref * r.err_est;
    if (!r.converged) {
        throw QuadratureFailure("i_integrals: angular quadrature did not converge", out.i1, out.err_est);
    }
    return out;
}

UnnormalizedQubit post_state(double z, double x, const QubitState& psi, const MeasurementConfig& cfg) {
    const IIntegrals in = i_integrals(z, x, cfg);
    const double a = psi.alpha();
    const double b = psi.beta();
    return {(in.i1 + in.i2) * a + in.i3 * b, in.i3 * a + (in.i1 - in.i2) * b};
}

double prob_density(const IIntegrals& in, const QubitState& psi) {
    const double p = in.i1 * in.i1 + in.i2 * in.i2 + in.i3 * in.i3 +
                     2.0 * in.i1 * (in.i2 * psi.sigma_z() + in.i3 * psi.sigma_x());
    return std::max(p, 0.0);
}

double prob_density(double z, double x, const QubitState& psi, const MeasurementConfig& cfg) {
    return prob_density(i_integrals(z, x, cfg), psi);
}

RadialProfile radial_profile(double r, const MeasurementConfig& cfg) {
    const IIntegrals in = i_integrals(r, 0.0, cfg);
    return {in.i1, in.i2};
}

PlaneWindow continuous_window(const MeasurementConfig& cfg) {
    return PlaneWindow::square(cfg.coupling + 8.0 * cfg.spread);
}

namespace {

struct OracleSum {
    std::complex<double> c0;
    std::complex<double> c1;
};

// Tensor trapezoid over p in [-cutoff, cutoff]^2 with step h.
OracleSum momentum_sum(double z, double x, double alpha, double beta, const MeasurementConfig& cfg, double h,
                       double cutoff) {
    const double spread = cfg.spread;
    const double delta = cfg.coupling;
    const long half = static_cast<long>(std::ceil(cutoff / h));
    const std::size_t count = static_cast<std::size_t>(2 * half + 1);

    std::vector<double> p(count);
    std::vector<double> g(count);
    std::vector<std::complex<double>> phase_z(count);
    std::vector<std::complex<double>> phase_x(count);
    for (std::size_t k = 0; k < count; ++k) {
        p[k] = h * (static_cast<double>(k) - static_cast<double>(half));
        g[k] = gaussian_amp_momentum(p[k], spread);
        phase_z[k] = std::polar(1.0, z * p[k]);
        phase_x[k] = std::polar(1.0, x * p[k]);
    }
    const std::complex<double> i_unit(0.0, 1.0);
    std::complex<double> s0 = 0.0;
    std::complex<double> s1 = 0.0;
    for (std::size_t iz = 0; iz < count; ++iz) {
        const double pz = p[iz];
        std::complex<double> r0 = 0.0;
        std::complex<double> r1 = 0.0;
        for (std::size_t ix = 0; ix < count; ++ix) {
            const double px = p[ix];
            const double pm = std::hypot(pz, px);
            const double cosine = std::cos(delta * pm);
            // sin(delta p) / p, continuous at p = 0.
            const double sinc = pm > 0.0 ? std::sin(delta * pm) / pm : delta;
            const std::complex<double> w = g[ix] * phase_x[ix];
            // (cos I - i sinc (pz sigma_z + px sigma_x)) (alpha, beta)
            const std::complex<double> m0 = cosine * alpha - i_unit * (sinc * (pz * alpha + px * beta));
            const std::complex<double> m1 = cosine * beta - i_unit * (sinc * (px * alpha - pz * beta));
            r0 += w * m0;
            r1 += w * m1;
        }
        const std::complex<double> wz = g[iz] * phase_z[iz];
        s0 += wz * r0;
        s1 += wz * r1;
    }
    const double scale = h * h / (2.0 * std::numbers::pi);
    return {s0 * scale, s1 * scale};
}

}  // namespace

ComplexQubit momentum_oracle_state(double z, double x, const QubitState& psi, const MeasurementConfig& cfg,
                                   double rel_tol) {
    require_continuous(cfg, "momentum_oracle_state");
    const double spread = cfg.spread;
    // exp(-spread^2 p^2) < 1e-19 beyond the cutoff.
    const double cutoff = std::sqrt(44.0) / spread;
    // Aliasing of the trapezoid rule is negligible once 2 pi / h exceeds the
    // integrand's spectral reach |z| + |x| + coupling by ~14 spreads.
    double h = 2.0 * std::numbers::pi / (std::abs(z) + std::abs(x) + cfg.coupling + 14.0 * spread);
    const double scale = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * spread);

    OracleSum prev = momentum_sum(z, x, psi.alpha(), psi.beta(), cfg, h, cutoff);
    for (int level = 0; level < 4; ++level) {
        h *= 0.5;
        OracleSum next = momentum_sum(z, x, psi.alpha(), psi.beta(), cfg, h, cutoff);
        const double diff = std::max(std::abs(next.c0 - prev.c0), std::abs(next.c1 - prev.c1));
        prev = next;
        if (diff <= rel_tol * scale) {
            return {next.c0, next.c1, diff};
        }
    }
    throw QuadratureFailure("momentum_oracle_state: trapezoid rule did not settle", std::abs(prev.c0), 0.0);
}

}  // namespace pointerlab
