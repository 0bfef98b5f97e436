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

#include "qgen/bits.h"
#include "qgen/comm.h"
#include "qgen/error.h"
#include "qgen/postprocess.h"
#include "qgen/simulator.h"
#include "reference.h"

namespace qgen {
namespace {

using testing::exact_distribution;
using testing::prob;

TEST(CommTest, SuperdenseDecodesEveryMessage) {
    for (std::size_t n : {2u, 4u, 6u}) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const std::string msg = to_bitstring(m, n);
            const GenResult r = gen_superdense({n, msg, 0});
            EXPECT_NEAR(prob(exact_distribution(r.circuit), msg), 1.0, 1e-9) << msg;
        }
    }
}

TEST(CommTest, SuperdenseCensusIsLinear) {
    for (std::size_t n = 2; n <= 46; n += 2) {
        const GateCensus c = census(gen_superdense({n, std::string(n, '1'), 0}).circuit);
        EXPECT_EQ(c.cnot_gates, n);
        EXPECT_EQ(c.measure_gates, n);
        EXPECT_EQ(c.width, n);
    }
}

TEST(CommTest, SuperdenseRejectsOddWidth) {
    EXPECT_THROW(gen_superdense({3, std::nullopt, 0}), Error);
    EXPECT_THROW(gen_superdense({4, std::string("101"), 0}), Error);
}

TEST(CommTest, TeleportReadsZero) {
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const GenResult r = gen_teleport({k, std::nullopt, seed});
            EXPECT_EQ(r.circuit.num_qubits(), 3 * k);
            EXPECT_NEAR(prob(exact_distribution(r.circuit), std::string(k, '0')), 1.0, 1e-9);
        }
    }
}

TEST(CommTest, TeleportMovesTheState) {
    // Without the closing adjoint the destination qubit holds U3|0>.
    const std::array<double, 3> angles = {1.1, 0.4, -2.0};
    const GenResult r = gen_teleport({1, std::vector<std::array<double, 3>>{angles}, 0});
    Circuit trimmed(3);
    const auto &ins = r.circuit.instructions();
    std::size_t last_u3 = 0;
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (ins[i].tag == GateTag::U3) last_u3 = i;
    }
    for (std::size_t i = 0; i < last_u3; ++i) trimmed.push(ins[i]);
    const StateVector sv = run_statevector(trimmed);
    double p1 = 0;
    for (std::size_t i = 0; i < sv.size(); ++i) {
        if ((i >> 2) & 1) p1 += std::norm(sv[i]);
    }
    EXPECT_NEAR(p1, std::pow(std::sin(angles[0] / 2), 2), 1e-12);
}

TEST(CommTest, TeleportDepthIsConstant) {
    for (std::size_t k = 1; k <= 15; ++k) {
        EXPECT_EQ(census(gen_teleport({k, std::nullopt, 0}).circuit).depth, 11u);
    }
}

TEST(CommTest, QkdWithoutInterceptionAgrees) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const GenResult r = gen_qkd({8, false, seed});
        const auto sift = qkd_sift(r.metadata, sample_counts(r.circuit, 64, seed));
        EXPECT_EQ(sift.mismatches, 0u);
        if (!sift.positions.empty()) EXPECT_EQ(sift.verdict, QkdVerdict::clean);
    }
}

TEST(CommTest, QkdInterceptionRaisesMismatches) {
    std::uint64_t compared = 0, wrong = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const GenResult r = gen_qkd({8, true, seed});
        const auto sift = qkd_sift(r.metadata, sample_counts(r.circuit, 1, seed));
        compared += sift.compared_bits;
        wrong += sift.mismatches;
    }
    const double rate = static_cast<double>(wrong) / static_cast<double>(compared);
    EXPECT_GT(rate, 0.18);
    EXPECT_LT(rate, 0.32);
}

// [PAPER] key distribution: depth 5 or 6, no CX, 2n measures. Basis changes
// are merged, so small widths can come out shallower.
TEST(CommTest, QkdCensus) {
    for (std::size_t n = 2; n <= 46; ++n) {
        const GateCensus c = census(gen_qkd({n, true, n}).circuit);
        EXPECT_LE(c.depth, 6u);
        EXPECT_EQ(c.cnot_gates, 0u);
        EXPECT_EQ(c.measure_gates, 2 * n);
        if (n >= 20) {
            EXPECT_GE(c.depth, 5u);
            EXPECT_TRUE(c.has_mid_circuit_measure);
        }
    }
    const GateCensus plain = census(gen_qkd({45, false, 3}).circuit);
    EXPECT_EQ(plain.measure_gates, 45u);
    EXPECT_FALSE(plain.has_mid_circuit_measure);
}

TEST(CommTest, QkdSiftRejectsWrongWidth) {
    const GenResult r = gen_qkd({4, true, 1});
    Histogram h;
    h.shots = 1;
    h.counts = {{"0000", 1}};
    EXPECT_THROW(qkd_sift(r.metadata, h), Error);
}

}  // namespace
}  // namespace qgen
