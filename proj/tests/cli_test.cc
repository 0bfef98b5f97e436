// Copyright 2026 The qgen Authors
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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.h"
#include "qgen/simulator.h"

namespace qgen {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "qgen");
    std::ostringstream out, err;
    const int code = cli::cli_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::path(::testing::TempDir()) /
               ("qgen_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    fs::path dir_;
};

TEST_F(CliTest, GenerateSimulateVerifyBernsteinVazirani) {
    const auto qasm = path("bv.qasm"), meta = path("bv.json"), hist = path("hist.json");
    CliRun r = run({"generate", "bv", "--problem-size", "8", "--secret", "10110011", "--seed", "7", "-o",
                 qasm, "--emit-metadata", meta});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());

    r = run({"simulate", qasm, "--shots", "1024"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json h = json::parse(r.out);
    EXPECT_EQ(h.at("counts"), json({{"10110011", 1024}}));
    EXPECT_EQ(h.at("shots"), 1024);
    std::ofstream(hist) << r.out;

    r = run({"verify", meta, hist});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).at("verdict"), "pass");
}

// [PAPER] constant DJ at n=45: width 46, depth 5.
TEST_F(CliTest, StatsOfDeutschJozsa) {
    const auto qasm = path("dj.qasm");
    ASSERT_EQ(run({"generate", "dj", "-n", "45", "-o", qasm}).code, 0);
    const CliRun r = run({"stats", qasm});
    ASSERT_EQ(r.code, 0) << r.err;
    const json s = json::parse(r.out);
    EXPECT_EQ(s.at("width"), 46);
    EXPECT_EQ(s.at("depth"), 5);
    EXPECT_EQ(s.at("cnot"), 0);
    EXPECT_EQ(s.at("measure"), 45);
}

TEST_F(CliTest, GenerateToStdout) {
    const CliRun r = run({"generate", "qkd", "-n", "3", "--interception", "false", "--seed", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("OPENQASM 2.0;", 0), 0u);
    EXPECT_NE(r.out.find("qreg q[3];"), std::string::npos);
    EXPECT_NE(r.out.find("creg c[3];"), std::string::npos);
}

TEST_F(CliTest, SetPassesJsonOptions) {
    const CliRun a = run({"generate", "vqe", "-n", "3", "--set", "entanglement=\"linear\"", "--set", "reps=2"});
    const CliRun b = run({"generate", "vqe", "-n", "3", "--entanglement", "linear", "--reps", "2"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, StatevectorOutput) {
    const auto qasm = path("ghz.qasm"), sv = path("ghz.qgsv");
    std::ofstream(qasm) << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n"
                           "h q[0];\ncx q[0],q[1];\nmeasure q -> c;\n";
    const CliRun r = run({"simulate", qasm, "--shots", "10", "--seed", "1", "--statevector", sv});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(sv, std::ios::binary);
    const StateVector state = read_statevector(in);
    EXPECT_NEAR(std::norm(state[0]), 0.5, 1e-12);
    EXPECT_NEAR(std::norm(state[3]), 0.5, 1e-12);
}

TEST_F(CliTest, PlotData) {
    const CliRun r = run({"plot-data", "superdense", "--min-size", "2", "--max-size", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "algorithm,size,width,depth,single_qubit,cnot,measure");
    for (const char *size : {"2", "4", "6"}) {
        std::getline(lines, line);
        EXPECT_EQ(line.rfind(std::string("superdense,") + size + "," + size + ",", 0), 0u) << line;
    }
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);  // header + sizes 2, 4, 6
    EXPECT_EQ(run({"plot-data", "bv", "--min-size", "5", "--max-size", "3"}).code, 2);
}

TEST_F(CliTest, DatasetWithSeedOverride) {
    const auto config = path("config.json");
    std::ofstream(config) << json({{"shots", 32}, {"algorithms", {{"dj", {{"max_size", 3}}}}}}).dump();
    ::setenv("QGEN_SEED", "99", 1);
    const CliRun r = run({"dataset", "--config", config, "-o", path("out")});
    ::unsetenv("QGEN_SEED");
    ASSERT_EQ(r.code, 0) << r.err;
    const json manifest = json::parse(std::ifstream(dir_ / "out" / "manifest.json"));
    EXPECT_EQ(manifest.at("master_seed"), 99);
    EXPECT_EQ(manifest.at("entries").size(), 2u);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"generate", "bv", "--problem-size", "1"}).code, 2);
    EXPECT_EQ(run({"generate", "bv", "--problem-size", "4", "--bogus"}).code, 2);
    EXPECT_EQ(run({"generate", "hhl", "-n", "4"}).code, 2);
    EXPECT_EQ(run({"generate", "bv"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"simulate", path("x.qasm"), "--shots", "0"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, RuntimeFailuresExitOne) {
    CliRun r = run({"simulate", path("missing.qasm")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("qgen: ", 0), 0u);

    const auto bad = path("bad.qasm");
    std::ofstream(bad) << "OPENQASM 2.0;\nqreg q[1];\nh q[4];\n";
    r = run({"stats", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("3:"), std::string::npos) << r.err;

    const auto wide = path("wide.qasm");
    std::string text = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[30];\ncreg c[30];\nh q[0];\n";
    for (int i = 0; i + 1 < 30; ++i) {
        text += "cx q[" + std::to_string(i) + "],q[" + std::to_string(i + 1) + "];\n";
    }
    text += "measure q -> c;\n";
    std::ofstream(wide) << text;
    EXPECT_EQ(run({"simulate", wide}).code, 1);
}

}  // namespace
}  // namespace qgen
