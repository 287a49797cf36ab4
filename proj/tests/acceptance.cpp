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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pointerlab/cli.hpp"
#include "pointerlab/continuous_model.hpp"
#include "pointerlab/diagnostics.hpp"
#include "pointerlab/estimation.hpp"
#include "pointerlab/format.hpp"
#include "pointerlab/pointer_density.hpp"
#include "pointerlab/trotter_model.hpp"

namespace {

using namespace pointerlab;

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

FidelityOptions opts_with_tol(double tol) {
    FidelityOptions o;
    o.abs_tol = tol;
    return o;
}

Outcome strong_coupling() {
    double worst = 0.0;
    std::string values;
    for (double t : {0.0, kPi / 4, kPi / 2}) {
        const auto t0 = std::chrono::steady_clock::now();
        const double f = avg_fidelity(QubitState(t), MeasurementConfig::from_weakness(0.01), opts_with_tol(1e-5));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, std::abs(f - 0.75));
        values += fmt(" F(theta=%.4f)=%.6f [%.1fs]", t, f, secs);
    }
    return {worst <= 0.01, "Delta/delta=0.01:" + values + fmt("; max |F-0.75|=%.2e <= 1e-2", worst)};
}

Outcome weak_coupling() {
    const double f = avg_fidelity(QubitState(0.0), MeasurementConfig::from_weakness(10.0), opts_with_tol(1e-6));
    return {std::abs(f - 0.5) <= 0.01, fmt("F(10)=%.6f; |F-0.5|=%.2e <= 1e-2", f, std::abs(f - 0.5))};
}

Outcome second_wind() {
    const auto grid = log_spaced(0.05, 2.0, 40);
    const FidelityCurve c =
        fidelity_curve(QubitState(0.0), MeasurementConfig::from_weakness(1.0), grid, opts_with_tol(1e-6));
    const auto sw = find_second_wind(c);
    if (!sw) {
        return {false, "no interior local minimum followed by a local maximum"};
    }
    const bool ok = std::abs(sw->maximum.weakness - 0.7) <= 0.15 && sw->maximum.f_avg >= 0.72;
    return {ok, fmt("min F=%.6f at %.4f, max F=%.6f at %.4f; need max at 0.7+-0.15 and F>=0.72",
                    sw->minimum.f_avg, sw->minimum.weakness, sw->maximum.f_avg, sw->maximum.weakness)};
}

Outcome oracle() {
    double worst = 0.0;
    std::string detail;
    for (double w : {0.05, 0.3, 2.0}) {
        const OracleReport r = oracle_check(20, 1, w);
        worst = std::max(worst, r.worst.rel_err);
        detail += fmt(" w=%.2f:%.2e", w, r.worst.rel_err);
    }
    return {worst <= 1e-6, "20 points seed 1, worst rel err" + detail + " <= 1e-6"};
}

Outcome normalization() {
    QuadSpec spec;
    spec.abs_tol = 1e-8;
    spec.rel_tol = 0.0;
    double worst = 0.0;
    std::string where;
    int count = 0;
    for (Geometry g : {Geometry::Continuous, Geometry::Orthogonal90, Geometry::Diagonal45}) {
        for (double t : {0.0, kPi / 4, kPi / 2, kPi, 1.5 * kPi}) {
            for (double w : {0.05, 0.15, 0.3, 0.7, 2.0}) {
                const PointerDensity p(QubitState(t), MeasurementConfig::from_weakness(w, g, 6));
                const double dev = std::abs(integrate_plane(p, p.window(), spec).value - 1.0);
                ++count;
                if (dev >= worst) {
                    worst = dev;
                    where = fmt("%s theta=%.4f w=%.2f", std::string(to_string(g)).c_str(), t, w);
                }
            }
        }
    }
    return {worst <= 1e-6, fmt("%d integrals, max |mass-1|=%.2e (%s) <= 1e-6", count, worst, where.c_str())};
}

Outcome trotter_symmetry() {
    bool ok = true;
    std::string detail;
    for (Geometry g : {Geometry::Orthogonal90, Geometry::Diagonal45}) {
        const auto cfg = MeasurementConfig::from_weakness(0.15, g, 6);
        const auto o = opts_with_tol(1e-8);
        const double h = avg_fidelity(QubitState::H(), cfg, o);
        const double v = avg_fidelity(QubitState::V(), cfg, o);
        const double d = avg_fidelity(QubitState::D(), cfg, o);
        const double a = avg_fidelity(QubitState::A(), cfg, o);
        ok = ok && std::abs(h - v) <= 1e-6 && std::abs(d - a) <= 1e-6 && std::abs(h - d) > 1e-3;
        detail += fmt(" %s: H=%.6f V=%.6f D=%.6f A=%.6f |H-V|=%.1e |D-A|=%.1e |H-D|=%.2e;",
                      std::string(to_string(g)).c_str(), h, v, d, a, std::abs(h - v), std::abs(d - a), std::abs(h - d));
    }
    return {ok, "n=6 Delta/delta=0.15" + detail + " need pairs <= 1e-6 and |H-D| > 1e-3"};
}

Outcome trotter_convergence() {
    const double w = 0.3;
    const std::vector<int> depths = {2, 4, 8, 16, 32, 40};
    const auto probes = probe_points(10, trotter_probe_half_width(w), 1);
    const auto rows = trotter_deviation(depths, w, QubitState::H(), probes);
    bool monotone = true;
    std::string detail;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        detail += fmt(" n=%d:%.3e", rows[i].trotter_depth, rows[i].max_deviation);
        if (i > 0 && rows[i].trotter_depth <= 32 && !(rows[i].max_deviation < rows[i - 1].max_deviation + 1e-4)) {
            monotone = false;
        }
    }
    const double at40 = rows.back().max_deviation;
    return {monotone && at40 <= 2e-3,
            "10 probes seed 1 in |z|,|x|<=1.6, theta=0:" + detail +
                fmt("; decreasing to n=32: %s; n=40 %.3e <= 2e-3", monotone ? "yes" : "no", at40)};
}

Outcome trotter45_plateau() {
    const auto grid = log_spaced(0.02, 3.0, 40);
    const auto base = MeasurementConfig::from_weakness(1.0, Geometry::Diagonal45, 6);
    bool ok = true;
    std::string detail;
    for (const auto& [name, psi] : {std::pair{"H", QubitState::H()}, {"D", QubitState::D()}}) {
        const auto sw = find_second_wind(fidelity_curve(psi, base, grid, opts_with_tol(1e-6)));
        if (!sw) {
            ok = false;
            detail += fmt(" %s: no second wind;", name);
            continue;
        }
        ok = ok && sw->maximum.f_avg >= 0.70;
        detail += fmt(" %s: max F=%.6f at %.4f;", name, sw->maximum.f_avg, sw->maximum.weakness);
    }
    return {ok, "n=6 oblique-frame guesses, 40 points on [0.02, 3]:" + detail + " need >= 0.70"};
}

Outcome rotational_invariance() {
    double worst = 0.0;
    std::string detail;
    for (double w : {0.1, 0.7}) {
        const auto cfg = MeasurementConfig::from_weakness(w);
        const auto o = opts_with_tol(1e-6);
        const double f0 = avg_fidelity(QubitState(0.0), cfg, o);
        double spread = 0.0;
        for (int k = 1; k < 12; ++k) {
            spread = std::max(spread, std::abs(avg_fidelity(QubitState(k * kPi / 6), cfg, o) - f0));
        }
        worst = std::max(worst, spread);
        detail += fmt(" w=%.1f: F(0)=%.6f max dev %.2e;", w, f0, spread);
    }
    return {worst <= 5e-4, "12 angles" + detail + " need <= 5e-4"};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome unitarity_and_determinism() {
    double worst = 0.0;
    int steps = 0;
    for (Geometry g : {Geometry::Orthogonal90, Geometry::Diagonal45}) {
        for (double w : {0.05, 0.15, 0.3, 0.7, 2.0}) {
            for (double t : {0.0, kPi / 4, kPi / 2, kPi, 1.5 * kPi}) {
                for (int n : {6, 40}) {
                    const auto cfg = MeasurementConfig::from_weakness(w, g, n);
                    const double d = cfg.step_displacement();
                    const double angle = g == Geometry::Diagonal45 ? kPi / 4 : kPi / 2;
                    BeamGrid grid = BeamGrid::single(QubitState(t), w);
                    for (int i = 0; i < n; ++i) {
                        grid = step_z(grid, d);
                        worst = std::max(worst, std::abs(grid_norm(grid) - 1.0));
                        grid = step_x_diagonal(grid, d, angle);
                        worst = std::max(worst, std::abs(grid_norm(grid) - 1.0));
                        steps += 2;
                    }
                }
            }
        }
    }

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pointerlab_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::vector<std::vector<std::string>> commands = {
        {"density", "--model", "continuous", "--theta-i", "0.3", "--res", "64", "--out"},
        {"density", "--model", "trotter90", "--theta-i", "0", "--res", "64", "--out"},
        {"density", "--model", "trotter45", "--theta-i", "3pi/2", "--res", "64", "--out"},
        {"curve", "--model", "trotter45", "--theta-i", "0", "--wcount", "3", "--wmin", "0.1", "--wmax", "1", "--out"},
        {"compare", "--n-list", "2,4", "--out"},
        {"oracle-check", "--points", "5"},
    };
    bool identical = true;
    int compared = 0;
    for (std::size_t c = 0; c < commands.size(); ++c) {
        std::vector<std::string> runs[2];
        for (int r = 0; r < 2; ++r) {
            std::vector<std::string> args = {"pointerlab"};
            args.insert(args.end(), commands[c].begin(), commands[c].end());
            const fs::path out = dir / (std::to_string(c) + "_" + std::to_string(r));
            if (args.back() == "--out") {
                args.push_back(out.string() + (commands[c][0] == "density" ? "" : ".csv"));
            }
            std::ostringstream so;
            std::ostringstream se;
            if (cli::run(args, so, se) != cli::kExitOk) {
                identical = false;
            }
            if (commands[c][0] == "density") {
                runs[r] = {slurp(out.string() + ".csv"), slurp(out.string() + ".pgm")};
            } else if (commands[c][0] == "oracle-check") {
                runs[r] = {so.str()};
            } else {
                runs[r] = {slurp(out.string() + ".csv")};
            }
        }
        identical = identical && runs[0] == runs[1] && !runs[0].front().empty();
        compared += static_cast<int>(runs[0].size());
    }
    fs::remove_all(dir);
    return {worst <= 1e-12 && identical,
            fmt("%d steps, max |norm-1|=%.2e <= 1e-12; %d CLI outputs byte-identical across runs: %s", steps, worst,
                compared, identical ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"strong-coupling optimum", strong_coupling},
        {"weak-coupling limit", weak_coupling},
        {"second wind", second_wind},
        {"oracle equivalence", oracle},
        {"normalization", normalization},
        {"trotter symmetry", trotter_symmetry},
        {"trotter convergence", trotter_convergence},
        {"trotter-45 plateau", trotter45_plateau},
        {"rotational invariance", rotational_invariance},
        {"unitarity and determinism", unitarity_and_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
