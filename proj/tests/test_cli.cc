// Copyright 2026 The GTR Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

namespace gtr::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("gtr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

TEST_F(CliTest, SimulateUniform) {
    const auto r = invoke({"simulate", "--state", "0.2,0.3,0.5", "--density", "uniform", "--samples", "200000",
                           "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "outcome_index,count,p_hat,ci_lo,ci_hi");
    const double expected[] = {0.2, 0.3, 0.5};
    for (int i = 0; i < 3; ++i) {
        std::string row;
        std::getline(lines, row);
        std::vector<std::string> f;
        std::stringstream ss(row);
        for (std::string cell; std::getline(ss, cell, ',');) {
            f.push_back(cell);
        }
        ASSERT_EQ(f.size(), 5u);
        EXPECT_EQ(f[0], std::to_string(i + 1));
        EXPECT_NEAR(std::stod(f[2]), expected[i], 0.005);
    }
    // One summary line per outcome.
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 3);
}

TEST_F(CliTest, UniversalExactJson) {
    const auto r = invoke({"universal-exact", "--cells", "10", "--position", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema_version"], "1.0");
    EXPECT_EQ(j["rows"][0]["average"], "3/10");
    EXPECT_EQ(j["rows"][0]["uniform"], "3/10");
    EXPECT_EQ(j["rows"][0]["equal"], true);
}

TEST_F(CliTest, IdentitiesAllPass) {
    const auto r = invoke({"identities", "--n-max", "40", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 82u);
    EXPECT_EQ(j["summary"]["all_equal"], true);
}

TEST_F(CliTest, RecurrenceReportsIndexConvention) {
    const auto r = invoke({"universal-exact", "--n-max", "6", "--recurrence", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["all_equal"], true);
    for (const auto &c : j["summary"]["checks"]) {
        EXPECT_EQ(c["matching_index"], "n-1");
    }
}

TEST_F(CliTest, ApproximateAndRobustness) {
    auto a = invoke({"approximate", "--target", "ramp", "--m", "8,64", "--x1", "0.5"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_NE(a.out.find("8,8,64,36,0.5,"), std::string::npos);
    auto r = invoke({"robustness", "--state", "0.5,0.5", "--epsilons", "1,0.5", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("epsilon,measured,predicted,ratio,std_error"), std::string::npos);
    auto d = invoke({"dirac-limit", "--state", "0.5,0.5", "--points", "0.2,0.8", "--epsilons", "0.1,0.01", "--seed",
                     "1"});
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_NE(d.out.find("epsilon,tv_distance,p_1,p_2"), std::string::npos);
}

TEST_F(CliTest, DensitySpecs) {
    for (const std::string spec : {"cellular1d:bub", "truncated:simplex:0.5", "truncated:cut2:0.3",
                                   "truncated:balls(0.3,0.7;0.7,0.3):0.2", "dirac:0.2,0.8;0.6,0.4", "grid:4:bbub",
                                   "universal:8", R"({"kind":"cellular_1d","mask":"bbu"})",
                                   R"({"kind":"truncated","geometry":"cut1","epsilon":0.5})"}) {
        const auto r = invoke({"simulate", "--state", "0.4,0.6", "--density", spec, "--samples", "1000", "--seed", "1"});
        EXPECT_EQ(r.code, 0) << spec << ": " << r.err;
    }
}

TEST_F(CliTest, ValidationErrorsExitTwo) {
    EXPECT_EQ(invoke({"simulate", "--state", "0.2,0.3", "--seed", "1"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--state", "0.5,0.5"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--state", "0.5,0.5", "--seed", "1", "--density", "banana"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--state", "0.5,0.5", "--seed", "1", "--density", "{bad json"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"identities", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"universal-exact", "--cells", "30"}).code, 2);
    EXPECT_EQ(invoke({"robustness", "--state", "0.5,0.5", "--seed", "1", "--delta", "0.1,0.1"}).code, 2);
}

TEST_F(CliTest, UnwritableOutputExitsThree) {
    const auto target = (dir_ / "missing" / "out.csv").string();
    EXPECT_EQ(invoke({"identities", "--n-max", "3", "--out", target}).code, 3);
}

TEST_F(CliTest, HelpExitsZero) {
    const auto r = invoke({"simulate", "--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("--state"), std::string::npos);
}

TEST_F(CliTest, OutFileGetsResultsAndStdoutGetsSummary) {
    const auto path = (dir_ / "r.csv").string();
    const auto r = invoke({"simulate", "--state", "0.5,0.5", "--samples", "1000", "--seed", "3", "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(slurp(path).rfind("outcome_index,", 0), 0u);
    EXPECT_EQ(r.out.rfind("outcome 1:", 0), 0u);
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
    const auto cfg = dir_ / "exp.cfg";
    {
        std::ofstream f(cfg);
        f << "# experiment\ncommand = simulate\nstate = 0.3,0.7\nsamples = 5000\nseed = 11\nformat = json\n";
    }
    const auto from_file = invoke({"--config", cfg.string()});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    auto j = nlohmann::json::parse(from_file.out);
    EXPECT_EQ(j["parameters"]["samples"], 5000);
    EXPECT_EQ(j["parameters"]["seed"], 11);

    const auto overridden = invoke({"--config", cfg.string(), "--samples", "7000"});
    ASSERT_EQ(overridden.code, 0) << overridden.err;
    j = nlohmann::json::parse(overridden.out);
    EXPECT_EQ(j["parameters"]["samples"], 7000);
    EXPECT_EQ(j["parameters"]["seed"], 11);

    std::ofstream(dir_ / "bad.cfg") << "command = simulate\nnot a pair\n";
    EXPECT_EQ(invoke({"--config", (dir_ / "bad.cfg").string()}).code, 2);
}

TEST_F(CliTest, IdenticalConfigsGiveIdenticalFiles) {
    const std::vector<std::vector<std::string>> runs = {
        {"simulate", "--state", "0.1,0.2,0.3,0.4", "--samples", "300000", "--seed", "5", "--format", "json"},
        {"robustness", "--state", "0.34,0.33,0.33", "--samples", "100000", "--seed", "5", "--epsilons", "1,0.5"},
        {"dirac-limit", "--state", "0.34,0.33,0.33", "--points", "0.1,0.45,0.45", "--epsilons", "0.05,0.01",
         "--samples", "50000", "--seed", "5", "--format", "json"},
    };
    int k = 0;
    for (const auto &base : runs) {
        std::vector<std::string> first = base, second = base;
        const auto p1 = (dir_ / ("a" + std::to_string(k))).string();
        const auto p2 = (dir_ / ("b" + std::to_string(k))).string();
        first.insert(first.end(), {"--out", p1, "--threads", "1"});
        second.insert(second.end(), {"--out", p2, "--threads", "4"});
        ASSERT_EQ(invoke(first).code, 0);
        ASSERT_EQ(invoke(second).code, 0);
        EXPECT_EQ(slurp(p1), slurp(p2)) << base[0];
        EXPECT_FALSE(slurp(p1).empty());
        ++k;
    }
}

}  // namespace
}  // namespace gtr::cli
