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

#include <cmath>
#include <numbers>

#include "qgen/bits.h"
#include "qgen/error.h"
#include "qgen/variational.h"
#include "reference.h"

namespace qgen {
namespace {

using testing::exact_distribution;
using testing::reference_state;

void expect_matches_reference(const Circuit &c) {
    const auto dist = exact_distribution(c);
    const Eigen::VectorXcd ref = reference_state(without_measurements(c));
    for (Eigen::Index i = 0; i < ref.size(); ++i) {
        const std::string key = to_bitstring(static_cast<std::uint64_t>(i), c.num_qubits());
        EXPECT_NEAR(testing::prob(dist, key), std::norm(ref[i]), 1e-10) << key;
    }
}

TEST(VariationalTest, CyclicGraph) {
    EXPECT_EQ(cyclic_graph(2), (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(cyclic_graph(3), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}));
    EXPECT_EQ(cyclic_graph(46).size(), 46u);
}

// [PAPER] endpoints of the QAOA census.
TEST(VariationalTest, QaoaCensusEndpoints) {
    const GateCensus lo = census(gen_qaoa({.problem_size = 2}).circuit);
    EXPECT_EQ(lo.cnot_gates, 2u);
    EXPECT_EQ(lo.single_qubit_gates, 5u);
    const GateCensus hi = census(gen_qaoa({.problem_size = 46}).circuit);
    EXPECT_EQ(hi.cnot_gates, 92u);
    EXPECT_EQ(hi.single_qubit_gates, 138u);
    EXPECT_EQ(hi.measure_gates, 46u);
}

TEST(VariationalTest, QaoaZeroAnglesIsUniform) {
    QaoaParams p{.problem_size = 4, .gammas = std::vector<double>{0.0}, .betas = std::vector<double>{0.0}};
    const auto dist = exact_distribution(gen_qaoa(p).circuit);
    ASSERT_EQ(dist.size(), 16u);
    for (const auto &[k, v] : dist) EXPECT_NEAR(v, 1.0 / 16, 1e-6) << k;
}

// Single edge at p=1: the cut probability is (1 - sin(4 beta) sin(gamma)) / 2
// for RZZ(gamma) = exp(-i gamma ZZ / 2) and RX(2 beta).
TEST(VariationalTest, QaoaSingleEdgeClosedForm) {
    for (double gamma : {0.3, 1.1, 2.5}) {
        for (double beta : {0.2, 0.7}) {
            QaoaParams p{.problem_size = 2,
                         .gammas = std::vector<double>{gamma},
                         .betas = std::vector<double>{beta}};
            const auto dist = exact_distribution(gen_qaoa(p).circuit);
            const double cut = testing::prob(dist, "01") + testing::prob(dist, "10");
            EXPECT_NEAR(cut, 0.5 * (1 - std::sin(4 * beta) * std::sin(gamma)), 1e-10)
                << gamma << " " << beta;
        }
    }
}

TEST(VariationalTest, QaoaMatchesReference) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        expect_matches_reference(gen_qaoa({.problem_size = 5, .reps = 2, .seed = seed}).circuit);
    }
    QaoaParams custom{.problem_size = 4, .edges = std::vector<Edge>{{0, 2}, {1, 3}, {0, 3}}};
    expect_matches_reference(gen_qaoa(custom).circuit);
}

TEST(VariationalTest, QaoaValidation) {
    EXPECT_THROW(gen_qaoa({.problem_size = 3, .edges = std::vector<Edge>{{1, 1}}}), Error);
    EXPECT_THROW(gen_qaoa({.problem_size = 3, .edges = std::vector<Edge>{{0, 3}}}), Error);
    EXPECT_THROW(gen_qaoa({.problem_size = 3, .reps = 2, .gammas = std::vector<double>{0.1}}), Error);
}

// [PAPER] endpoints of the VQE census with RY/RZ and full entanglement.
TEST(VariationalTest, VqeCensusEndpoints) {
    const GateCensus lo = census(gen_vqe({.problem_size = 2}).circuit);
    EXPECT_EQ(lo.cnot_gates, 1u);
    EXPECT_EQ(lo.single_qubit_gates, 8u);
    const GateCensus hi = census(gen_vqe({.problem_size = 46}).circuit);
    EXPECT_EQ(hi.cnot_gates, 1035u);
    EXPECT_EQ(hi.single_qubit_gates, 184u);
}

TEST(VariationalTest, VqeEntanglementCounts) {
    const std::size_t n = 7;
    auto cx_for = [&](Entanglement e, std::size_t reps) {
        return census(gen_vqe({.problem_size = n, .entanglement = e, .reps = reps}).circuit).cnot_gates;
    };
    EXPECT_EQ(cx_for(Entanglement::full, 1), n * (n - 1) / 2);
    EXPECT_EQ(cx_for(Entanglement::linear, 1), n - 1);
    EXPECT_EQ(cx_for(Entanglement::circular, 1), n);
    EXPECT_EQ(cx_for(Entanglement::linear, 3), 3 * (n - 1));
    const VqeParams three{.problem_size = n,
                          .rotations = {GateTag::RX, GateTag::RY, GateTag::RZ},
                          .reps = 2};
    EXPECT_EQ(census(gen_vqe(three).circuit).single_qubit_gates, 3 * 3 * n);
}

TEST(VariationalTest, VqeZeroAnglesStayAtZero) {
    VqeParams p{.problem_size = 3,
                .rotations = {GateTag::RY},
                .entanglement = Entanglement::linear,
                .angles = std::vector<double>(6, 0.0)};
    EXPECT_NEAR(testing::prob(exact_distribution(gen_vqe(p).circuit), "000"), 1.0, 1e-12);
}

TEST(VariationalTest, VqeMatchesReference) {
    for (auto e : {Entanglement::full, Entanglement::linear, Entanglement::circular}) {
        expect_matches_reference(gen_vqe({.problem_size = 4, .entanglement = e, .reps = 2, .seed = 9}).circuit);
    }
}

TEST(VariationalTest, VqeValidation) {
    EXPECT_THROW(gen_vqe({.problem_size = 3, .rotations = {}}), Error);
    EXPECT_THROW(gen_vqe({.problem_size = 3, .rotations = {GateTag::H}}), Error);
    EXPECT_THROW(gen_vqe({.problem_size = 3, .angles = std::vector<double>(5, 0.0)}), Error);
}

// [PAPER] endpoints of the VQC census.
TEST(VariationalTest, VqcCensusEndpoints) {
    const GateCensus lo = census(gen_vqc({.problem_size = 2}).circuit);
    EXPECT_EQ(lo.cnot_gates, 3u);
    EXPECT_EQ(lo.single_qubit_gates, 9u);
    const GateCensus hi = census(gen_vqc({.problem_size = 46}).circuit);
    EXPECT_EQ(hi.cnot_gates, 2115u);
    EXPECT_EQ(hi.single_qubit_gates, 1219u);
}

TEST(VariationalTest, VqcMatchesReference) {
    expect_matches_reference(gen_vqc({.problem_size = 4, .seed = 2}).circuit);
    expect_matches_reference(gen_vqc({.problem_size = 3, .fm_reps = 2, .vf_reps = 3, .seed = 5}).circuit);
}

// With every feature at pi the pair phases vanish and the map is H then
// PHASE(2 pi) = identity, so zero RY angles leave a uniform distribution.
TEST(VariationalTest, VqcFeatureMapAtPi) {
    const std::size_t n = 3;
    VqcParams p{.problem_size = n,
                .features = std::vector<double>(n, std::numbers::pi),
                .angles = std::vector<double>(2 * n, 0.0)};
    Circuit c = gen_vqc(p).circuit;
    // Drop the CX chain's effect by checking only the marginal of qubit 0,
    // which the chain never targets.
    const auto dist = exact_distribution(c);
    double p0 = 0;
    for (const auto &[k, v] : dist) {
        if (k.back() == '1') p0 += v;
    }
    EXPECT_NEAR(p0, 0.5, 1e-12);
}

TEST(VariationalTest, VqcValidation) {
    EXPECT_THROW(gen_vqc({.problem_size = 3, .features = std::vector<double>{1.0}}), Error);
    EXPECT_THROW(gen_vqc({.problem_size = 3, .angles = std::vector<double>(4, 0.0)}), Error);
}

TEST(VariationalTest, EntanglementNames) {
    for (auto e : {Entanglement::full, Entanglement::linear, Entanglement::circular}) {
        EXPECT_EQ(parse_entanglement(to_string(e)), e);
    }
    EXPECT_THROW(parse_entanglement("star"), Error);
}

TEST(VariationalTest, SeedsDrawDifferentAngles) {
    const auto a = gen_vqe({.problem_size = 3, .seed = 1});
    const auto b = gen_vqe({.problem_size = 3, .seed = 2});
    EXPECT_FALSE(a.circuit.same_instructions(b.circuit));
    EXPECT_TRUE(a.circuit.same_instructions(gen_vqe({.problem_size = 3, .seed = 1}).circuit));
}

}  // namespace
}  // namespace qgen
