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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "pointerlab/cli.hpp"
#include "pointerlab/density_map.hpp"

namespace pointerlab {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("pointerlab_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        args.insert(args.begin(), "pointerlab");
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_);
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST(DensityMap, ParallelMatchesSerialAndIsNormalized) {
    for (Geometry g : {Geometry::Continuous, Geometry::Orthogonal90, Geometry::Diagonal45}) {
        const QubitState psi(0.4);
        const auto cfg = MeasurementConfig::from_weakness(0.3, g, 6);
        const PointerDensity density(psi, cfg);
        const PlaneWindow w = default_map_window(psi, cfg);
        const DensityMap a = render_density_map(density, w, 96, 96);
        const DensityMap b = render_density_map_serial(density, w, 96, 96);
        EXPECT_EQ(a.values, b.values);
        EXPECT_NEAR(a.riemann_mass(), 1.0, 1e-4) << to_string(g);
        EXPECT_EQ(a.meta.geometry, g);
    }
}

TEST(DensityMap, CellCentersAndLayout) {
    const auto cfg = MeasurementConfig::from_weakness(0.3, Geometry::Orthogonal90, 2);
    const PointerDensity density(QubitState::H(), cfg);
    const DensityMap m = render_density_map(density, {-1.0, 1.0, -2.0, 2.0}, 4, 8);
    EXPECT_DOUBLE_EQ(m.z_at(0), -0.75);
    EXPECT_DOUBLE_EQ(m.x_at(7), 1.75);
    EXPECT_DOUBLE_EQ(m.cell_area(), 0.25);
    EXPECT_EQ(m.at(1, 3), density(m.z_at(1), m.x_at(3)));
}

TEST(DensityMap, PgmEncodesRowsTopDown) {
    DensityMap m;
    m.nz = 2;
    m.nx = 2;
    m.window = PlaneWindow::square(1.0);
    m.values = {0.0, 1.0, 0.5, 0.25};  // (z0,x0) (z0,x1) (z1,x0) (z1,x1)
    std::ostringstream s;
    write_density_pgm(m, s);
    const std::string data = s.str();
    ASSERT_EQ(data.rfind("P5\n# pointerlab meta: ", 0), 0u);
    const std::string tail = data.substr(data.size() - 8);
    auto px = [&](int i) { return (static_cast<unsigned char>(tail[2 * i]) << 8) | static_cast<unsigned char>(tail[2 * i + 1]); };
    EXPECT_EQ(px(0), 65535);  // top-left: z0, x1
    EXPECT_EQ(px(1), 16384);  // top-right: z1, x1
    EXPECT_EQ(px(2), 0);
    EXPECT_EQ(px(3), 32768);
    EXPECT_NE(data.find("\n2 2\n65535\n"), std::string::npos);
}

TEST_F(TempDir, DensityOutputsAreByteIdentical) {
    const std::string a = (dir_ / "a").string();
    const std::string b = (dir_ / "b").string();
    for (const auto& out : {a, b}) {
        ASSERT_EQ(run({"density", "--model", "trotter45", "--theta-i", "3pi/2", "--res", "48", "--out", out}),
                  cli::kExitOk)
            << err_.str();
    }
    EXPECT_EQ(slurp(a + ".csv"), slurp(b + ".csv"));
    EXPECT_EQ(slurp(a + ".pgm"), slurp(b + ".pgm"));
    const std::string csv = slurp(a + ".csv");
    EXPECT_EQ(csv.rfind("z,x,density\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 48 * 48 + 1);
    const std::string pgm = slurp(a + ".pgm");
    EXPECT_NE(pgm.find("model=trotter45"), std::string::npos);
    EXPECT_NE(pgm.find("\n48 48\n65535\n"), std::string::npos);
    EXPECT_FALSE(fs::exists(a + ".csv.tmp"));
}

TEST_F(TempDir, CurveCsvSortedByAngleThenWeakness) {
    const std::string out = (dir_ / "curve.csv").string();
    ASSERT_EQ(run({"curve", "--model", "continuous", "--theta-i", "pi", "--theta-i", "0", "--wmin", "0.3", "--wmax",
                   "0.6", "--wcount", "2", "--out", out}),
              cli::kExitOk)
        << err_.str();
    std::istringstream csv(slurp(out));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "weakness,theta_i,f_avg");
    std::vector<std::string> rows;
    while (std::getline(csv, line)) {
        rows.push_back(line.substr(0, line.rfind(',')));
    }
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "0.29999999999999999,0");
    EXPECT_EQ(rows[1], "0.59999999999999998,0");
    EXPECT_EQ(rows[2], "0.29999999999999999,3.1415926535897931");
}

TEST_F(TempDir, CompareWritesOneRowPerDepth) {
    const std::string out = (dir_ / "cmp.csv").string();
    ASSERT_EQ(run({"compare", "--n-list", "2,4", "--out", out}), cli::kExitOk) << err_.str();
    const std::string csv = slurp(out);
    EXPECT_EQ(csv.rfind("n,weakness,theta_i,max_deviation\n2,0.29999999999999999,0,", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST_F(TempDir, OracleCheckReportIsDeterministic) {
    ASSERT_EQ(run({"oracle-check", "--points", "5", "--seed", "4"}), cli::kExitOk);
    const std::string first = out_.str();
    ASSERT_EQ(run({"oracle-check", "--points", "5", "--seed", "4"}), cli::kExitOk);
    EXPECT_EQ(out_.str(), first);
    EXPECT_NE(first.find("PASS"), std::string::npos);
}

TEST_F(TempDir, UsageErrorsExitTwo) {
    const std::string out = (dir_ / "x").string();
    EXPECT_EQ(run({}), cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}), cli::kExitUsage);
    EXPECT_EQ(run({"density"}), cli::kExitUsage);
    EXPECT_EQ(run({"density", "--model", "bogus", "--out", out}), cli::kExitUsage);
    EXPECT_EQ(run({"density", "--weakness", "-1", "--out", out}), cli::kExitUsage);
    EXPECT_EQ(run({"density", "--theta-i", "pie", "--out", out}), cli::kExitUsage);
    EXPECT_EQ(run({"curve", "--frame", "sideways", "--out", out}), cli::kExitUsage);
    EXPECT_EQ(run({"compare", "--n-list", "2,x", "--out", out}), cli::kExitUsage);
    EXPECT_EQ(run({"--help"}), cli::kExitOk);
    EXPECT_TRUE(fs::is_empty(dir_));
}

TEST_F(TempDir, FailedRenameRemovesTemporary) {
    const fs::path blocker = dir_ / "taken";
    fs::create_directories(blocker / "child");
    EXPECT_EQ(run({"compare", "--n-list", "2", "--out", blocker.string()}), cli::kExitNumerical);
    EXPECT_FALSE(fs::exists(blocker.string() + ".tmp"));
    EXPECT_TRUE(fs::is_directory(blocker / "child"));
}

}  // namespace
}  // namespace pointerlab
