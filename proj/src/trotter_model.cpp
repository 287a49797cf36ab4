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

#include "pointerlab/trotter_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pointerlab {
namespace {

// Branches below this magnitude are exact-zero artifacts of the split.
constexpr double kPrune = 1e-15;

Vec2 direction(double angle) {
    Vec2 u{std::cos(angle), std::sin(angle)};
    // Axis-aligned angles must give exact lattice vectors.
    if (std::abs(u.z) < 1e-15) u.z = 0.0;
    if (std::abs(u.x) < 1e-15) u.x = 0.0;
    return u;
}

void require_positive_step(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw std::invalid_argument("displacement must be positive and finite");
    }
}

// Shared body of the sigma_x steps: split into sigma_x eigenbranches and
// displace them by +/- d u.
BeamGrid step_sigma_x(const BeamGrid& grid, double d, Vec2 u) {
    require_positive_step(d);
    BeamGrid next = grid.cleared();
    const std::size_t g = next.generator({d * u.z, d * u.x});
    for (const auto& [key, amp] : grid.raw_sites()) {
        const double plus = 0.5 * (amp.h + amp.v);
        const double minus = 0.5 * (amp.h - amp.v);
        if (std::abs(plus) >= kPrune) {
            auto k = key;
            k.resize(next.generator_count(), 0);
            ++k[g];
            next.accumulate(std::move(k), {plus, plus});
        }
        if (std::abs(minus) >= kPrune) {
            auto k = key;
            k.resize(next.generator_count(), 0);
            --k[g];
            next.accumulate(std::move(k), {minus, -minus});
        }
    }
    return next;
}

}  // namespace

BeamGrid BeamGrid::single(const QubitState& psi, double spread, Vec2 center) {
    return single(BeamAmplitude{psi.alpha(), psi.beta()}, spread, center);
}

BeamGrid BeamGrid::single(BeamAmplitude amp, double spread, Vec2 center) {
    if (!(spread > 0.0)) {
        throw std::invalid_argument("BeamGrid: spread must be positive");
    }
    BeamGrid grid(spread);
    grid.origin_ = center;
    grid.accumulate({}, amp);
    return grid;
}

BeamGrid BeamGrid::from_sites(std::span<const BeamSite> sites, double spread) {
    if (!(spread > 0.0)) {
        throw std::invalid_argument("BeamGrid: spread must be positive");
    }
    BeamGrid grid(spread);
    for (const BeamSite& s : sites) {
        const std::size_t g = grid.generator({s.z0, s.x0});
        Key key(grid.generator_count(), 0);
        key[g] = 1;
        grid.accumulate(std::move(key), {s.h, s.v});
    }
    return grid;
}

std::size_t BeamGrid::generator(Vec2 u) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == u) {
            return i;
        }
    }
    generators_.push_back(u);
    std::map<Key, BeamAmplitude> rekeyed;
    for (auto& [key, amp] : sites_) {
        Key k = key;
        k.resize(generators_.size(), 0);
        rekeyed.emplace(std::move(k), amp);
    }
    sites_ = std::move(rekeyed);
    return generators_.size() - 1;
}

Vec2 BeamGrid::center(const Key& key) const {
    Vec2 c = origin_;
    for (std::size_t i = 0; i < key.size() && i < generators_.size(); ++i) {
        c.z += key[i] * generators_[i].z;
        c.x += key[i] * generators_[i].x;
    }
    return c;
}

void BeamGrid::accumulate(Key key, BeamAmplitude amp) {
    key.resize(generators_.size(), 0);
    auto [it, inserted] = sites_.try_emplace(std::move(key), amp);
    if (!inserted) {
        it->second.h += amp.h;
        it->second.v += amp.v;
        if (it->second.h == 0.0 && it->second.v == 0.0) {
            sites_.erase(it);
        }
    }
}

BeamGrid BeamGrid::cleared() const {
    BeamGrid out(spread_);
    out.origin_ = origin_;
    out.generators_ = generators_;
    return out;
}

std::vector<BeamSite> BeamGrid::sites() const {
    std::vector<BeamSite> out;
    out.reserve(sites_.size());
    for (const auto& [key, amp] : sites_) {
        const Vec2 c = center(key);
        out.push_back({c.z, c.x, amp.h, amp.v});
    }
    return out;
}

BeamAmplitude BeamGrid::amplitude_at(Vec2 c) const {
    BeamAmplitude sum;
    for (const auto& [key, amp] : sites_) {
        const Vec2 k = center(key);
        if (std::abs(k.z - c.z) <= 1e-12 && std::abs(k.x - c.x) <= 1e-12) {
            sum.h += amp.h;
            sum.v += amp.v;
        }
    }
    return sum;
}

BeamGrid step_z(const BeamGrid& grid, double d) {
    require_positive_step(d);
    BeamGrid next = grid.cleared();
    const std::size_t g = next.generator({d, 0.0});
    for (const auto& [key, amp] : grid.raw_sites()) {
        if (std::abs(amp.h) >= kPrune) {
            auto k = key;
            k.resize(next.generator_count(), 0);
            ++k[g];
            next.accumulate(std::move(k), {amp.h, 0.0});
        }
        if (std::abs(amp.v) >= kPrune) {
            auto k = key;
            k.resize(next.generator_count(), 0);
            --k[g];
            next.accumulate(std::move(k), {0.0, amp.v});
        }
    }
    return next;
}

BeamGrid step_x_orthogonal(const BeamGrid& grid, double d) { return step_sigma_x(grid, d, {0.0, 1.0}); }

BeamGrid step_x_diagonal(const BeamGrid& grid, double d, double angle) {
    return step_sigma_x(grid, d, direction(angle));
}

BeamGrid evolve(const QubitState& psi, const MeasurementConfig& cfg) {
    cfg.validate();
    if (cfg.geometry == Geometry::Continuous) {
        throw std::invalid_argument("evolve: requires a Trotter geometry");
    }
    const double d = cfg.step_displacement();
    const double angle = cfg.diagonal_sign > 0 ? 0.25 * std::numbers::pi : 1.25 * std::numbers::pi;
    BeamGrid grid = BeamGrid::single(psi, cfg.spread);
    for (int round = 0; round < cfg.trotter_depth; ++round) {
        grid = step_z(grid, d);
        grid = cfg.geometry == Geometry::Orthogonal90 ? step_x_orthogonal(grid, d)
                                                       : step_x_diagonal(grid, d, angle);
    }
    return grid;
}

double density_at(std::span<const BeamSite> sites, double spread, double z, double x) {
    // gaussian_amp(z - z0) * gaussian_amp(x - x0), folded into one
    // exponential; `norm` is the square of the joint prefactor.
    const double norm = 1.0 / (2.0 * std::numbers::pi * spread * spread);
    const double inv4s2 = 1.0 / (4.0 * spread * spread);
    double sum_h = 0.0;
    double sum_v = 0.0;
    for (const BeamSite& s : sites) {
        const double dz = z - s.z0;
        const double dx = x - s.x0;
        const double g = std::exp(-(dz * dz + dx * dx) * inv4s2);
        sum_h += s.h * g;
        sum_v += s.v * g;
    }
    return norm * (sum_h * sum_h + sum_v * sum_v);
}

double density_at(const BeamGrid& grid, double z, double x) {
    if (grid.empty()) {
        throw std::invalid_argument("density_at: empty grid");
    }
    const auto sites = grid.sites();
    return density_at(sites, grid.spread(), z, x);
}

double grid_norm(const BeamGrid& grid) {
    const auto sites = grid.sites();
    const double inv8s2 = 1.0 / (8.0 * grid.spread() * grid.spread());
    double total = 0.0;
    for (const BeamSite& a : sites) {
        for (const BeamSite& b : sites) {
            const double dz = a.z0 - b.z0;
            const double dx = a.x0 - b.x0;
            total += (a.h * b.h + a.v * b.v) * std::exp(-(dz * dz + dx * dx) * inv8s2);
        }
    }
    return total;
}

PlaneWindow grid_window(const BeamGrid& grid) {
    double reach = 0.0;
    for (const BeamSite& s : grid.sites()) {
        reach = std::max({reach, std::abs(s.z0), std::abs(s.x0)});
    }
    return PlaneWindow::square(reach + 8.0 * grid.spread());
}

}  // namespace pointerlab
