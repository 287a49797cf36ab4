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

#include "pointerlab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pointerlab {
namespace {

constexpr double kSeriesLimit = 1.0;
constexpr double kAsymptoticLimit = 6.0;

// Rybicki: F(x) = lim_{h->0} pi^(-1/2) sum_{n odd} exp(-(x - n h)^2) / n.
// The discretization error is O(exp(-(pi / 2h)^2)), ~1e-27 at h = 0.2.
constexpr double kRybickiStep = 0.2;
constexpr int kRybickiTerms = 20;

struct RybickiTable {
    std::array<double, kRybickiTerms> c{};
    RybickiTable() {
        for (int i = 0; i < kRybickiTerms; ++i) {
            double t = (2.0 * i + 1.0) * kRybickiStep;
            c[i] = std::exp(-t * t);
        }
    }
};

double dawson_series(double x) {
    // sum_k (-1)^k 2^k x^(2k+1) / (2k+1)!!
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 40; ++k) {
        term *= -2.0 * x2 / (2.0 * k + 1.0);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

double dawson_rybicki(double x) {
    static const RybickiTable table;
    const double h = kRybickiStep;
    const double n0 = 2.0 * std::nearbyint(0.5 * x / h);
    const double xp = x - n0 * h;
    double e1 = std::exp(2.0 * xp * h);
    const double e2 = e1 * e1;
    double d1 = n0 + 1.0;
    double d2 = d1 - 2.0;
    double sum = 0.0;
    for (int i = 0; i < kRybickiTerms; ++i) {
        sum += table.c[i] * (e1 / d1 + 1.0 / (d2 * e1));
        d1 += 2.0;
        d2 -= 2.0;
        e1 *= e2;
    }
    return std::exp(-xp * xp) * sum / std::sqrt(std::numbers::pi);
}

double dawson_asymptotic(double x) {
    // 1/(2x) * sum_k (2k-1)!! / (2x^2)^k, truncated at the smallest term.
    const double inv2x2 = 0.5 / (x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        double next = term * (2.0 * k - 1.0) * inv2x2;
        if (next >= term) {
            break;
        }
        term = next;
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return sum / (2.0 * x);
}

}  // namespace

double dawson(double x) {
    const double ax = std::abs(x);
    double value;
    if (ax < kSeriesLimit) {
        value = dawson_series(ax);
    } else if (ax < kAsymptoticLimit) {
        value = dawson_rybicki(ax);
    } else if (std::isinf(ax)) {
        value = 0.0;
    } else {
        value = dawson_asymptotic(ax);
    }
    return std::signbit(x) ? -value : value;
}

double gaussian_amp(double u, double spread) {
    if (!(spread > 0.0)) {
        throw std::invalid_argument("gaussian_amp: spread must be positive");
    }
    const double norm = 1.0 / std::sqrt(std::sqrt(2.0 * std::numbers::pi * spread * spread));
    return norm * std::exp(-u * u / (4.0 * spread * spread));
}

double gaussian_amp_momentum(double p, double spread) {
    if (!(spread > 0.0)) {
        throw std::invalid_argument("gaussian_amp_momentum: spread must be positive");
    }
    const double norm = std::sqrt(std::sqrt(2.0 * spread * spread / std::numbers::pi));
    return norm * std::exp(-spread * spread * p * p);
}

}  // namespace pointerlab
