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

// Numerical integration engine.
//
// Periodic integrands on [0, 2 pi) use the uniform trapezoid rule with node
// doubling; the difference between consecutive levels is the error
// estimate. Finite intervals use globally adaptive Gauss-Kronrod (7/15).
// The plane integrator nests the interval rule: the outer z integral
// evaluates inner x integrals at its Kronrod nodes. Failure to converge is
// reported in the result, never thrown.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace pointerlab {

struct QuadSpec {
    double abs_tol = 1e-9;
    double rel_tol = 1e-8;
    /// Periodic rule: allowed node doublings. Interval rule: allowed bisections.
    int max_refinements = 2000;
    /// Periodic rule: nodes in the first level (rounded up to a power of two).
    std::size_t initial_nodes = 16;
    /// Interval rule: number of equal segments in the first pass.
    int initial_segments = 1;

    double target(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    bool converged = false;
    std::size_t evaluations = 0;
};

template <std::size_t N>
struct QuadResultN {
    std::array<double, N> value{};
    double err_est = 0.0;
    bool converged = false;
    std::size_t evaluations = 0;
};

struct PlaneWindow {
    double z_min;
    double z_max;
    double x_min;
    double x_max;

    static PlaneWindow square(double half_width) { return {-half_width, half_width, -half_width, half_width}; }
};

enum class Execution { Serial, Parallel };

namespace detail {

inline constexpr std::size_t kCircleLevels = 17;
inline constexpr std::size_t kCircleNodes = std::size_t{1} << kCircleLevels;

/// cos/sin of 2 pi k / kCircleNodes, k in [0, kCircleNodes).
struct CircleTable {
    std::vector<double> cos;
    std::vector<double> sin;
};
const CircleTable& circle_table();

inline std::size_t round_up_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

// Trapezoid doubling driver. eval(k, n) returns the integrand at node k of
// an n-point uniform grid, as a std::array<double, N>.
template <std::size_t N, class NodeEval>
QuadResultN<N> periodic_doubling(NodeEval&& eval, const QuadSpec& spec, std::size_t max_nodes) {
    QuadResultN<N> out;
    std::size_t n = std::min(round_up_pow2(std::max<std::size_t>(spec.initial_nodes, 2)), max_nodes);
    std::array<double, N> sum{};
    for (std::size_t k = 0; k < n; ++k) {
        auto v = eval(k, n);
        for (std::size_t i = 0; i < N; ++i) {
            sum[i] += v[i];
        }
    }
    out.evaluations = n;
    const double two_pi = 2.0 * std::numbers::pi;
    std::array<double, N> prev;
    for (std::size_t i = 0; i < N; ++i) {
        prev[i] = sum[i] * two_pi / static_cast<double>(n);
    }
    out.value = prev;
    out.err_est = std::numeric_limits<double>::infinity();

    for (int level = 0; level < spec.max_refinements && 2 * n <= max_nodes; ++level) {
        const std::size_t n2 = 2 * n;
        std::array<double, N> mid{};
        for (std::size_t k = 1; k < n2; k += 2) {
            auto v = eval(k, n2);
            for (std::size_t i = 0; i < N; ++i) {
                mid[i] += v[i];
            }
        }
        out.evaluations += n;
        bool done = true;
        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            sum[i] += mid[i];
            out.value[i] = sum[i] * two_pi / static_cast<double>(n2);
            double diff = std::abs(out.value[i] - prev[i]);
            err = std::max(err, diff);
            if (diff > spec.target(out.value[i])) {
                done = false;
            }
        }
        out.err_est = err;
        prev = out.value;
        n = n2;
        if (done) {
            out.converged = true;
            break;
        }
    }
    return out;
}

// 15-point Kronrod abscissae (descending) and weights; Gauss 7-point
// weights apply to the odd-indexed abscissae.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline constexpr std::size_t kPanelNodes = 15;

/// Abscissae of a 15-point panel on [a, b]: centre first, then +/- pairs.
inline std::array<double, kPanelNodes> panel_abscissae(double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::array<double, kPanelNodes> x{};
    x[0] = c;
    for (std::size_t j = 0; j < 7; ++j) {
        x[1 + 2 * j] = c - h * kKronrodNodes[j];
        x[2 + 2 * j] = c + h * kKronrodNodes[j];
    }
    return x;
}

struct Panel {
    double a;
    double b;
    double value;
    double err;
};

/// Combines 15 samples laid out as panel_abscissae into a Kronrod estimate
/// with the QUADPACK error heuristic.
inline Panel reduce_panel(double a, double b, std::span<const double, kPanelNodes> f) {
    const double h = 0.5 * (b - a);
    const double fc = f[0];
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    double abs_sum = std::abs(kronrod);
    for (std::size_t j = 0; j < 7; ++j) {
        const double f1 = f[1 + 2 * j];
        const double f2 = f[2 + 2 * j];
        kronrod += kKronrodWeights[j] * (f1 + f2);
        abs_sum += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * (f1 + f2);
        }
    }
    const double mean = 0.5 * kronrod;
    double asc = kKronrodWeights[7] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 7; ++j) {
        asc += kKronrodWeights[j] * (std::abs(f[1 + 2 * j] - mean) + std::abs(f[2 + 2 * j] - mean));
    }
    const double value = kronrod * h;
    const double resabs = abs_sum * std::abs(h);
    const double resasc = asc * std::abs(h);
    double err = std::abs((kronrod - gauss) * h);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(50.0 * eps * resabs, err);
    }
    return {a, b, value, err};
}

// Globally adaptive driver. sample(xs, out) fills out[i] = f(xs[i]) for a
// batch of abscissae, which lets the caller evaluate a batch in parallel.
template <class BatchSampler>
QuadResult adaptive_kronrod(BatchSampler&& sample, double a, double b, const QuadSpec& spec) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    const int segments = std::max(1, spec.initial_segments);
    std::vector<double> xs;
    std::vector<double> fs;
    xs.reserve(kPanelNodes * static_cast<std::size_t>(segments));
    for (int s = 0; s < segments; ++s) {
        const double lo = a + (b - a) * s / segments;
        const double hi = (s + 1 == segments) ? b : a + (b - a) * (s + 1) / segments;
        auto nodes = panel_abscissae(lo, hi);
        xs.insert(xs.end(), nodes.begin(), nodes.end());
    }
    fs.resize(xs.size());
    sample(std::span<const double>(xs), std::span<double>(fs));
    out.evaluations += xs.size();

    // Panels stay ordered by position so the final sum has a fixed order.
    std::vector<Panel> panels;
    panels.reserve(static_cast<std::size_t>(segments) + 64);
    for (int s = 0; s < segments; ++s) {
        const double lo = a + (b - a) * s / segments;
        const double hi = (s + 1 == segments) ? b : a + (b - a) * (s + 1) / segments;
        panels.push_back(
            reduce_panel(lo, hi, std::span<const double, kPanelNodes>(fs.data() + kPanelNodes * s, kPanelNodes)));
    }
    auto resum = [&](double& total, double& total_err) {
        total = 0.0;
        total_err = 0.0;
        for (const Panel& p : panels) {
            total += p.value;
            total_err += p.err;
        }
    };
    double total = 0.0;
    double total_err = 0.0;
    resum(total, total_err);

    int refinements = 0;
    while (total_err > spec.target(total) && refinements < spec.max_refinements) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i) {
            if (panels[i].err > panels[worst].err) {
                worst = i;
            }
        }
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            break;
        }
        auto left = panel_abscissae(p.a, mid);
        auto right = panel_abscissae(mid, p.b);
        xs.assign(left.begin(), left.end());
        xs.insert(xs.end(), right.begin(), right.end());
        fs.resize(xs.size());
        sample(std::span<const double>(xs), std::span<double>(fs));
        out.evaluations += xs.size();
        panels[worst] = reduce_panel(p.a, mid, std::span<const double, kPanelNodes>(fs.data(), kPanelNodes));
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                      reduce_panel(mid, p.b, std::span<const double, kPanelNodes>(fs.data() + kPanelNodes, kPanelNodes)));
        ++refinements;
        resum(total, total_err);
    }
    out.value = total;
    out.err_est = total_err;
    out.converged = total_err <= spec.target(total);
    return out;
}

/// Trapezoid integral over [a, b] of samples (z, value) at arbitrary interior
/// nodes, extended as constants to the ends.
inline double trapezoid_over_nodes(std::vector<std::pair<double, double>> pts, double a, double b) {
    if (pts.empty()) {
        return 0.0;
    }
    std::sort(pts.begin(), pts.end());
    double sum = pts.front().second * (pts.front().first - a) + pts.back().second * (b - pts.back().first);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        sum += 0.5 * (pts[i].second + pts[i - 1].second) * (pts[i].first - pts[i - 1].first);
    }
    return sum;
}

}  // namespace detail

/// Trapezoid-doubling integral of a 2 pi-periodic f over [0, 2 pi).
template <class F>
QuadResult integrate_periodic(F&& f, const QuadSpec& spec) {
    const double two_pi = 2.0 * std::numbers::pi;
    auto eval = [&](std::size_t k, std::size_t n) {
        return std::array<double, 1>{f(two_pi * static_cast<double>(k) / static_cast<double>(n))};
    };
    auto r = detail::periodic_doubling<1>(eval, spec, std::size_t{1} << 30);
    return {r.value[0], r.err_est, r.converged, r.evaluations};
}

/// Vector-valued periodic integral where the integrand receives (cos phi, sin phi)
/// from a cached table. Resolution is capped at 2^17 nodes.
template <std::size_t N, class F>
QuadResultN<N> integrate_periodic_circle(F&& f, const QuadSpec& spec) {
    const auto& table = detail::circle_table();
    auto eval = [&](std::size_t k, std::size_t n) {
        const std::size_t idx = k * (detail::kCircleNodes / n);
        return f(table.cos[idx], table.sin[idx]);
    };
    return detail::periodic_doubling<N>(eval, spec, detail::kCircleNodes);
}

/// Adaptive Gauss-Kronrod integral of f over [a, b].
template <class F>
QuadResult integrate_interval(F&& f, double a, double b, const QuadSpec& spec) {
    auto sample = [&](std::span<const double> xs, std::span<double> out) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out[i] = f(xs[i]);
        }
    };
    return detail::adaptive_kronrod(sample, a, b, spec);
}

/// Nested adaptive integral of f(z, x) over a rectangle.
///
/// The inner x integrals get a tenth of the tolerance budget, scaled by the
/// z extent. Their error estimates are integrated over z by the trapezoid
/// rule on every sampled node and added to the outer estimate. With Execution::Parallel the inner integrals of one outer batch
/// run under OpenMP; every value lands in a fixed slot, so both policies
/// return bit-identical results.
template <class F>
QuadResult integrate_plane(F&& f, const PlaneWindow& w, const QuadSpec& spec,
                           Execution exec = Execution::Parallel) {
    const double z_width = std::max(w.z_max - w.z_min, std::numeric_limits<double>::min());
    QuadSpec inner = spec;
    inner.abs_tol = 0.1 * spec.abs_tol / z_width;
    inner.rel_tol = 0.1 * spec.rel_tol;

    bool inner_ok = true;
    std::vector<std::pair<double, double>> inner_err;
    std::size_t inner_evals = 0;

    auto sample = [&](std::span<const double> zs, std::span<double> out) {
        const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(zs.size());
        std::vector<QuadResult> results(zs.size());
        auto one = [&](std::ptrdiff_t i) {
            const double z = zs[static_cast<std::size_t>(i)];
            results[static_cast<std::size_t>(i)] =
                integrate_interval([&](double x) { return f(z, x); }, w.x_min, w.x_max, inner);
        };
        if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                one(i);
            }
        } else {
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                one(i);
            }
        }
        for (std::size_t i = 0; i < zs.size(); ++i) {
            out[i] = results[i].value;
            inner_ok = inner_ok && results[i].converged;
            inner_err.emplace_back(zs[i], results[i].err_est);
            inner_evals += results[i].evaluations;
        }
    };
    QuadSpec outer = spec;
    outer.abs_tol = 0.9 * spec.abs_tol;
    outer.rel_tol = 0.9 * spec.rel_tol;
    QuadResult r = detail::adaptive_kronrod(sample, w.z_min, w.z_max, outer);
    r.err_est += detail::trapezoid_over_nodes(std::move(inner_err), w.z_min, w.z_max);
    r.converged = r.converged && inner_ok && r.err_est <= spec.target(r.value);
    r.evaluations = inner_evals;
    return r;
}

}  // namespace pointerlab
