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

#include "pointerlab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "pointerlab/density_map.hpp"
#include "pointerlab/diagnostics.hpp"
#include "pointerlab/estimation.hpp"
#include "pointerlab/format.hpp"

namespace pointerlab::cli {
namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, Geometry>& model_names() {
    static const std::map<std::string, Geometry> names = {
        {"continuous", Geometry::Continuous},
        {"trotter90", Geometry::Orthogonal90},
        {"trotter45", Geometry::Diagonal45},
    };
    return names;
}

Geometry parse_model(const std::string& name) {
    const auto it = model_names().find(name);
    if (it == model_names().end()) {
        throw UsageError("unknown model '" + name + "'");
    }
    return it->second;
}

// Accepts a plain number or [-][k]pi[/m], e.g. "3pi/2".
double parse_angle(const std::string& text) {
    const auto pi_pos = text.find("pi");
    if (pi_pos == std::string::npos) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse angle '" + text + "'");
        }
        if (used != text.size()) {
            throw UsageError("cannot parse angle '" + text + "'");
        }
        return v;
    }
    std::string head = text.substr(0, pi_pos);
    std::string tail = text.substr(pi_pos + 2);
    double factor = 1.0;
    if (head == "-") {
        factor = -1.0;
    } else if (!head.empty()) {
        factor = parse_angle(head.back() == '*' ? head.substr(0, head.size() - 1) : head);
    }
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/') {
            throw UsageError("cannot parse angle '" + text + "'");
        }
        divisor = parse_angle(tail.substr(1));
        if (divisor == 0.0) {
            throw UsageError("division by zero in angle '" + text + "'");
        }
    }
    return factor * std::numbers::pi / divisor;
}

MeasurementConfig make_config(const std::string& model, double weakness, int n) {
    if (!(weakness > 0.0) || !std::isfinite(weakness)) {
        throw UsageError("--weakness must be positive");
    }
    const Geometry g = parse_model(model);
    if (g != Geometry::Continuous && n < 1) {
        throw UsageError("--n must be at least 1 for Trotter models");
    }
    return MeasurementConfig::from_weakness(weakness, g, g == Geometry::Continuous ? 1 : n);
}

// Writes through a temporary file and renames it into place. The temporary
// is removed if `body` throws.
void write_atomically(const std::filesystem::path& path, bool binary,
                      const std::function<void(std::ostream&)>& body) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    try {
        {
            std::ofstream file(tmp, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
            if (!file) {
                throw std::runtime_error("cannot open " + tmp.string() + " for writing");
            }
            body(file);
            file.flush();
            if (!file) {
                throw std::runtime_error("write to " + tmp.string() + " failed");
            }
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

struct DensityArgs {
    std::string model = "continuous";
    std::string theta = "0";
    double weakness = 0.15;
    int n = 6;
    std::size_t res = 256;
    double half_width = 0.0;
    std::string out;
};

int cmd_density(const DensityArgs& a, std::ostream& out) {
    const MeasurementConfig cfg = make_config(a.model, a.weakness, a.n);
    const QubitState psi(parse_angle(a.theta));
    if (a.res == 0) {
        throw UsageError("--res must be positive");
    }
    const PlaneWindow window = a.half_width > 0.0 ? PlaneWindow::square(a.half_width) : default_map_window(psi, cfg);
    const PointerDensity density(psi, cfg);
    const DensityMap map = render_density_map(density, window, a.res, a.res);
    const std::filesystem::path csv = a.out + ".csv";
    const std::filesystem::path pgm = a.out + ".pgm";
    write_atomically(csv, false, [&](std::ostream& s) { write_density_csv(map, s); });
    try {
        write_atomically(pgm, true, [&](std::ostream& s) { write_density_pgm(map, s); });
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(csv, ec);
        throw;
    }
    out << "wrote " << csv.string() << " and " << pgm.string() << " (mass " << format_g17(map.riemann_mass())
        << ")\n";
    return kExitOk;
}

struct CurveArgs {
    std::string model = "continuous";
    std::vector<std::string> thetas;
    double wmin = 0.02;
    double wmax = 3.0;
    std::size_t wcount = 40;
    int n = 6;
    double tol = 1e-5;
    std::string frame;
    std::string out;
};

int cmd_curve(const CurveArgs& a, std::ostream& out) {
    if (!(a.wmin > 0.0) || !(a.wmax > a.wmin) || a.wcount < 2) {
        throw UsageError("need 0 < --wmin < --wmax and --wcount >= 2");
    }
    const MeasurementConfig base = make_config(a.model, a.wmin, a.n);
    std::vector<double> thetas;
    for (const auto& t : a.thetas.empty() ? std::vector<std::string>{"0"} : a.thetas) {
        thetas.push_back(wrap_angle(parse_angle(t)));
    }
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());

    FidelityOptions opts;
    opts.abs_tol = a.tol;
    if (a.frame == "raw") {
        opts.frame = GuessFrame::Raw;
    } else if (a.frame == "oblique") {
        opts.frame = GuessFrame::Oblique;
    } else if (!a.frame.empty()) {
        throw UsageError("--frame must be raw or oblique");
    }
    const std::vector<double> grid = log_spaced(a.wmin, a.wmax, a.wcount);
    std::vector<FidelityCurve> curves;
    for (double theta : thetas) {
        curves.push_back(fidelity_curve(QubitState(theta), base, grid, opts));
    }
    write_atomically(a.out, false, [&](std::ostream& s) {
        s << "weakness,theta_i,f_avg\n";
        for (const FidelityCurve& c : curves) {
            for (const FidelitySample& p : c.samples) {
                s << format_g17(p.weakness) << ',' << format_g17(c.theta_i) << ',' << format_g17(p.f_avg) << '\n';
            }
        }
    });
    out << "wrote " << a.out << " (" << curves.size() << " curves x " << grid.size() << " points)\n";
    return kExitOk;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v < 1) {
                throw std::invalid_argument(item);
            }
            values.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--n-list entries must be positive integers, got '" + item + "'");
        }
    }
    if (values.empty()) {
        throw UsageError("--n-list is empty");
    }
    return values;
}

struct CompareArgs {
    std::string n_list = "1,2,4,8,16,32";
    double weakness = 0.3;
    std::string theta = "0";
    std::size_t probes = 10;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
    make_config("continuous", a.weakness, 1);
    if (a.probes == 0) {
        throw UsageError("--probe-count must be positive");
    }
    const std::vector<int> depths = parse_int_list(a.n_list);
    const QubitState psi(parse_angle(a.theta));
    const auto probes = probe_points(a.probes, trotter_probe_half_width(a.weakness), a.seed);
    const auto rows = trotter_deviation(depths, a.weakness, psi, probes);
    write_atomically(a.out, false, [&](std::ostream& s) {
        s << "n,weakness,theta_i,max_deviation\n";
        for (const auto& r : rows) {
            s << r.trotter_depth << ',' << format_g17(a.weakness) << ',' << format_g17(psi.theta()) << ','
              << format_g17(r.max_deviation) << '\n';
        }
    });
    out << "wrote " << a.out << '\n';
    return kExitOk;
}

struct OracleArgs {
    std::size_t points = 20;
    std::uint64_t seed = 1;
    double weakness = 0.3;
};

int cmd_oracle_check(const OracleArgs& a, std::ostream& out) {
    make_config("continuous", a.weakness, 1);
    constexpr double kTolerance = 1e-6;
    const OracleReport report = oracle_check(a.points, a.seed, a.weakness);
    char line[256];
    std::snprintf(line, sizeof line, "oracle-check points=%zu seed=%llu weakness=%.17g\n", a.points,
                  static_cast<unsigned long long>(a.seed), a.weakness);
    out << line;
    for (const OraclePoint& p : report.points) {
        std::snprintf(line, sizeof line, "  z=% .6f x=% .6f theta_i=%.6f rel_err=%.3e\n", p.z, p.x, p.theta_i,
                      p.rel_err);
        out << line;
    }
    const bool pass = report.worst.rel_err <= kTolerance;
    std::snprintf(line, sizeof line, "max_rel_err=%.3e at z=%.6f x=%.6f tolerance=%.1e %s\n", report.worst.rel_err,
                  report.worst.z, report.worst.x, kTolerance, pass ? "PASS" : "FAIL");
    out << line;
    return pass ? kExitOk : kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Joint weak measurement of sigma_z and sigma_x with Gaussian pointers"};
    app.name(args.empty() ? "pointerlab" : args[0]);
    app.require_subcommand(1);

    DensityArgs density;
    auto* sub_density = app.add_subcommand("density", "Render P(z, x | psi) as CSV and 16-bit PGM");
    sub_density->add_option("--model", density.model, "continuous | trotter90 | trotter45")->capture_default_str();
    sub_density->add_option("--theta-i", density.theta, "Input angle in radians (accepts e.g. 3pi/2)")
        ->capture_default_str();
    sub_density->add_option("--weakness", density.weakness, "Spread over coupling")->capture_default_str();
    sub_density->add_option("--n", density.n, "Trotter depth")->capture_default_str();
    sub_density->add_option("--res", density.res, "Pixels per side")->capture_default_str();
    sub_density->add_option("--window", density.half_width, "Half-width of the square window (default: model)");
    sub_density->add_option("--out", density.out, "Output prefix; writes <out>.csv and <out>.pgm")->required();

    CurveArgs curve;
    auto* sub_curve = app.add_subcommand("curve", "Average fidelity over a log-spaced weakness sweep");
    sub_curve->add_option("--model", curve.model, "continuous | trotter90 | trotter45")->capture_default_str();
    sub_curve->add_option("--theta-i", curve.thetas, "Input angle (repeatable)");
    sub_curve->add_option("--wmin", curve.wmin)->capture_default_str();
    sub_curve->add_option("--wmax", curve.wmax)->capture_default_str();
    sub_curve->add_option("--wcount", curve.wcount)->capture_default_str();
    sub_curve->add_option("--n", curve.n, "Trotter depth")->capture_default_str();
    sub_curve->add_option("--tol", curve.tol, "Absolute tolerance per fidelity")->capture_default_str();
    sub_curve->add_option("--frame", curve.frame, "Guess frame: raw | oblique (default by model)");
    sub_curve->add_option("--out", curve.out, "Output CSV path")->required();

    CompareArgs compare;
    auto* sub_compare = app.add_subcommand("compare", "Max pointwise density gap, Trotter 90 vs continuous");
    sub_compare->add_option("--n-list", compare.n_list, "Comma-separated Trotter depths")->capture_default_str();
    sub_compare->add_option("--weakness", compare.weakness)->capture_default_str();
    sub_compare->add_option("--theta-i", compare.theta)->capture_default_str();
    sub_compare->add_option("--probe-count", compare.probes)->capture_default_str();
    sub_compare->add_option("--seed", compare.seed)->capture_default_str();
    sub_compare->add_option("--out", compare.out, "Output CSV path")->required();

    OracleArgs oracle;
    auto* sub_oracle = app.add_subcommand("oracle-check", "Dawson closed form vs momentum-space integral");
    sub_oracle->add_option("--points", oracle.points)->capture_default_str();
    sub_oracle->add_option("--seed", oracle.seed)->capture_default_str();
    sub_oracle->add_option("--weakness", oracle.weakness)->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    if (argv.empty()) {
        argv.push_back("pointerlab");
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sub_density->parsed()) {
            return cmd_density(density, out);
        }
        if (sub_curve->parsed()) {
            return cmd_curve(curve, out);
        }
        if (sub_compare->parsed()) {
            return cmd_compare(compare, out);
        }
        return cmd_oracle_check(oracle, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace pointerlab::cli
