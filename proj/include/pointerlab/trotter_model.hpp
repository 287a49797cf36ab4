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

// Trotterized pointer measurement as a coherent superposition of displaced
// Gaussian beams.
//
// Each displacement step sends the sigma = +1 branch of a site to
// center + d * u and the sigma = -1 branch to center - d * u. Centers are
// therefore integer combinations of a few displacement vectors
// ("generators"); sites are keyed by those integer counts, so branches that
// meet again are merged exactly.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "pointerlab/measurement.hpp"
#include "pointerlab/quadrature.hpp"

namespace pointerlab {

/// Polarization amplitudes (H, V) carried by one beam.
struct BeamAmplitude {
    double h = 0.0;
    double v = 0.0;
};

struct Vec2 {
    double z = 0.0;
    double x = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Flattened beam for evaluation loops.
struct BeamSite {
    double z0;
    double x0;
    double h;
    double v;
};

class BeamGrid {
  public:
    using Key = std::vector<int>;

    /// One beam at `center` carrying the amplitudes of psi.
    static BeamGrid single(const QubitState& psi, double spread, Vec2 center = {});
    static BeamGrid single(BeamAmplitude amp, double spread, Vec2 center = {});

    /// Arbitrary beams; each center becomes its own generator.
    static BeamGrid from_sites(std::span<const BeamSite> sites, double spread);

    double spread() const { return spread_; }
    std::size_t size() const { return sites_.size(); }
    bool empty() const { return sites_.empty(); }

    /// Index of the generator equal to `u`, registering it if new.
    std::size_t generator(Vec2 u);
    std::size_t generator_count() const { return generators_.size(); }

    Vec2 center(const Key& key) const;

    /// Same spread, origin and generators, no beams.
    BeamGrid cleared() const;

    /// Adds amplitude at `key` (coherent addition; entries that cancel to
    /// exactly zero are removed).
    void accumulate(Key key, BeamAmplitude amp);

    const std::map<Key, BeamAmplitude>& raw_sites() const { return sites_; }

    /// Beams in key order.
    std::vector<BeamSite> sites() const;

    /// Amplitude stored at the beam whose center equals `c` exactly, summed
    /// over all keys mapping there.
    BeamAmplitude amplitude_at(Vec2 c) const;

  private:
    explicit BeamGrid(double spread) : spread_(spread) {}

    double spread_;
    Vec2 origin_{};
    std::vector<Vec2> generators_;
    std::map<Key, BeamAmplitude> sites_;
};

/// exp(-i d sigma_z p_z): H moves by +d along z, V by -d.
BeamGrid step_z(const BeamGrid& grid, double d);

/// exp(-i d sigma_x p_x): the |+> component (a+b)/2 (1, 1) moves by +d along
/// x, the |-> component (a-b)/2 (1, -1) by -d.
BeamGrid step_x_orthogonal(const BeamGrid& grid, double d);

/// As step_x_orthogonal, with the branches displaced by +/- d (cos angle, sin angle).
BeamGrid step_x_diagonal(const BeamGrid& grid, double d, double angle);

/// n rounds of (z step, x step) with per-branch displacement coupling / n.
/// Diagonal45 uses angle pi/4 (or 5 pi/4 when cfg.diagonal_sign is -1).
BeamGrid evolve(const QubitState& psi, const MeasurementConfig& cfg);

/// Coherent density |sum_H|^2 + |sum_V|^2 at (z, x).
double density_at(const BeamGrid& grid, double z, double x);
double density_at(std::span<const BeamSite> sites, double spread, double z, double x);

/// Overlap-weighted norm sum_{s,s'} (h h' + v v') exp(-|c - c'|^2 / (8 spread^2)).
double grid_norm(const BeamGrid& grid);

/// Square window covering every beam center plus 8 spreads.
PlaneWindow grid_window(const BeamGrid& grid);

}  // namespace pointerlab
