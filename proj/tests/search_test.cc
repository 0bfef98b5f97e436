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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qgen/bits.h"
#include "qgen/decompose.h"
#include "qgen/error.h"
#include "qgen/fourier.h"
#include "qgen/postprocess.h"
#include "qgen/search.h"
#include "qgen/simulator.h"
#include "reference.h"

namespace qgen {
namespace {

using testing::exact_distribution;
using testing::prob;

double marked_mass(const GenResult &r) {
    const auto dist = exact_distribution(r.circuit);
    double total = 0;
    for (const auto &m : r.metadata.hidden.at("marked")) total += prob(dist, m.get<std::string>());
    return total;
}

/// Textbook phase-estimation readout: an equal mixture of the eigenphases
/// +phi and -phi, each giving |sum_k e^{2 pi i k (phi - x / 2^t)}|^2 / 4^t.
double counting_reference(std::uint64_t x, std::size_t t, double phi) {
    const double T = std::ldexp(1.0, static_cast<int>(t));
    double p = 0;
    for (double s : {phi, -phi}) {
        std::complex<double> acc = 0;
        for (std::size_t k = 0; k < static_cast<std::size_t>(T); ++k) {
            acc += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) *
                                       (s - static_cast<double>(x) / T));
        }
        p += 0.5 * std::norm(acc) / (T * T);
    }
    return p;
}

TEST(SearchTest, OptimalIterations) {
    EXPECT_EQ(optimal_grover_iterations(4, 1), 1u);
    for (int n = 2; n <= 20; ++n) {
        EXPECT_EQ(optimal_grover_iterations(std::ldexp(1.0, n), std::ldexp(1.0, n - 2)), 1u) << n;
    }
    EXPECT_EQ(optimal_grover_iterations(8, 1), 2u);
    EXPECT_EQ(optimal_grover_iterations(16, 1), 3u);
    EXPECT_EQ(optimal_grover_iterations(1 << 20, 1), 804u);
    EXPECT_EQ(optimal_grover_iterations(8, 8), 1u);
    EXPECT_THROW(optimal_grover_iterations(8, 0), Error);
}

TEST(SearchTest, GroverQuarterMarkedIsExact) {
    for (std::size_t n = 2; n <= 6; ++n) {
        GroverParams p;
        p.problem_size = n;
        p.seed = n;
        const GenResult r = gen_grover(p);
        EXPECT_EQ(r.metadata.params.at("solutions"), std::uint64_t{1} << (n - 2));
        EXPECT_NEAR(marked_mass(r), 1.0, 1e-9) << n;
        EXPECT_EQ(r.metadata.params.at("iterations"), 1);
    }
}

TEST(SearchTest, GroverExplicitTargets) {
    GroverParams p;
    p.problem_size = 4;
    p.marked = std::vector<std::string>{"1011"};
    const GenResult r = gen_grover(p);
    // sin^2((2k+1) theta) with sin theta = 1/4 and k = 3.
    const double theta = std::asin(0.25);
    EXPECT_NEAR(marked_mass(r), std::pow(std::sin(7 * theta), 2), 1e-9);

    p.marked = std::vector<std::string>{"10"};
    EXPECT_THROW(gen_grover(p), Error);
    p.marked = std::vector<std::string>{"1011", "1011"};
    EXPECT_THROW(gen_grover(p), Error);
}

TEST(SearchTest, GroverIterationOverride) {
    GroverParams p;
    p.problem_size = 3;
    p.marked = std::vector<std::string>{"000"};
    p.iterations = 0;
    EXPECT_NEAR(marked_mass(gen_grover(p)), 1.0 / 8, 1e-12);
}

TEST(SearchTest, CountingMatchesPhaseEstimationReadout) {
    for (std::uint64_t M : {1u, 3u, 5u, 8u, 16u}) {
        CountingParams p;
        p.problem_size = 3;
        p.searching_qubits = 4;
        p.solutions = M;
        p.seed = M;
        const GenResult r = gen_quantum_counting(p);
        EXPECT_EQ(r.circuit.num_qubits(), 7u);
        EXPECT_EQ(census(r.circuit).measure_gates, 3u);
        const auto dist = exact_distribution(r.circuit);
        const double phi = std::asin(std::sqrt(static_cast<double>(M) / 16)) / std::numbers::pi;
        for (std::uint64_t x = 0; x < 8; ++x) {
            EXPECT_NEAR(prob(dist, to_bitstring(x, 3)), counting_reference(x, 3, phi), 1e-9)
                << "M=" << M << " x=" << x;
        }
    }
}

// Textbook construction: one MCPHASE(pi) per marked state.
Circuit counting_by_states(std::size_t t, std::size_t n, const std::vector<std::uint64_t> &marked) {
    Circuit c(t + n, t);
    std::vector<Qubit> counting, search;
    for (std::size_t i = 0; i < t; ++i) counting.push_back(static_cast<Qubit>(i));
    for (std::size_t i = 0; i < n; ++i) search.push_back(static_cast<Qubit>(t + i));
    for (auto q : counting) c.push(gates::h(q));
    for (auto q : search) c.push(gates::h(q));
    for (std::size_t k = 0; k < t; ++k) {
        std::vector<Qubit> ctrl{counting[k]};
        ctrl.insert(ctrl.end(), search.begin(), search.end() - 1);
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << k); ++r) {
            for (auto m : marked) {
                for (std::size_t i = 0; i < n; ++i) {
                    if (!((m >> i) & 1)) c.push(gates::x(search[i]));
                }
                c.push(gates::mcphase(std::numbers::pi, ctrl, search.back()));
                for (std::size_t i = 0; i < n; ++i) {
                    if (!((m >> i) & 1)) c.push(gates::x(search[i]));
                }
            }
            for (auto q : search) c.push(gates::h(q));
            for (auto q : search) c.push(gates::x(q));
            c.push(gates::mcphase(std::numbers::pi, ctrl, search.back()));
            for (auto q : search) c.push(gates::x(q));
            for (auto q : search) c.push(gates::h(q));
            c.push(gates::z(counting[k]));
        }
    }
    append_qft(c, counting, true);
    return c;
}

TEST(SearchTest, CountingOracleMatchesPerStateConstruction) {
    bool saw_network = false;
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::uint64_t M : {std::uint64_t{1}, std::uint64_t{3}, std::uint64_t{1} << (n - 1),
                                (std::uint64_t{1} << n) - 1}) {
            CountingParams p;
            p.problem_size = 3;
            p.searching_qubits = n;
            p.solutions = M;
            p.seed = 40 + n + M;
            const GenResult r = gen_quantum_counting(p);
            std::vector<std::uint64_t> marked;
            for (const auto &s : r.metadata.hidden.at("marked")) marked.push_back(from_bitstring(s.get<std::string>()));
            const Circuit ref = counting_by_states(3, n, marked);
            const double f = fidelity(run_statevector(without_measurements(r.circuit)), run_statevector(ref));
            EXPECT_NEAR(f, 1.0, 1e-9) << "n=" << n << " M=" << M;
            saw_network |= census(r.circuit).cnot_gates < basis_cost(ref).cnot;
        }
    }
    EXPECT_TRUE(saw_network);
}

TEST(SearchTest, CountingDefaultsToEqualRegisters) {
    CountingParams p;
    p.problem_size = 2;
    const GenResult r = gen_quantum_counting(p);
    EXPECT_EQ(r.circuit.num_qubits(), 4u);
    const auto M = r.metadata.hidden.at("solutions").get<std::uint64_t>();
    EXPECT_GE(M, 1u);
    EXPECT_LE(M, 4u);
}

TEST(SearchTest, WalkSmallestInstance) {
    WalkParams p;
    p.problem_size = 2;
    p.seed = 4;
    const GenResult r = gen_quantum_walk(p);
    EXPECT_EQ(r.circuit.num_qubits(), 11u);
    EXPECT_EQ(census(r.circuit).measure_gates, 4u);
    EXPECT_EQ(walk_optimal_iterations(2, 1), 3u);
    EXPECT_GE(marked_mass(r), 0.5);
}

TEST(SearchTest, WalkRejectsOversizedCoin) {
    WalkParams p;
    p.problem_size = 5;
    EXPECT_THROW(gen_quantum_walk(p), Error);
}

TEST(SearchTest, WalkStepBudget) {
    WalkParams p;
    p.problem_size = 4;
    try {
        gen_quantum_walk(p);
        FAIL() << "expected resource_limit";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
    }
    p.theta_qubits = 2;
    p.iterations = 1;
    EXPECT_EQ(gen_quantum_walk(p).circuit.num_qubits(), 2u + 16 + 4 + 1);
}

}  // namespace
}  // namespace qgen
