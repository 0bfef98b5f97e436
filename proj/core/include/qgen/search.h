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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgen/algorithm.h"

namespace qgen {

// Marked states are bitstrings in histogram order (last character = lowest
// qubit of the register).

/// Nearest-integer optimum of the iteration count for M marked items out of
/// N: round(pi / (4 theta) - 1/2) with sin(theta) = sqrt(M / N), at least 1.
std::size_t optimal_grover_iterations(double N, double M);

struct GroverParams {
    std::size_t problem_size = 2;
    /// Explicit marked set; otherwise `solutions` states are drawn.
    std::optional<std::vector<std::string>> marked;
    /// Defaults to 2^(n-2), at least 1.
    std::optional<std::uint64_t> solutions;
    /// nullopt selects optimal_grover_iterations.
    std::optional<std::size_t> iterations;
    std::uint64_t seed = 0;
};

struct CountingParams {
    std::size_t problem_size = 2;  // counting qubits t
    /// Defaults to t.
    std::optional<std::size_t> searching_qubits;
    std::optional<std::vector<std::string>> marked;
    /// nullopt draws M uniformly from [1, 2^n].
    std::optional<std::uint64_t> solutions;
    std::uint64_t seed = 0;
};

struct WalkParams {
    std::size_t problem_size = 2;  // coin width p
    /// Defaults to 2^p.
    std::optional<std::size_t> theta_qubits;
    std::optional<std::vector<std::string>> marked;
    /// Defaults to 2^(p-2), at least 1.
    std::optional<std::uint64_t> solutions;
    /// nullopt selects the tuned optimum (see walk_optimal_iterations).
    std::optional<std::size_t> iterations;
    std::uint64_t seed = 0;
};

/// Width n, n measures. Oracle: X-wrapped MCPHASE(pi) per marked state.
GenResult gen_grover(const GroverParams &params);

/// Counting qubits 0..t-1 (measured), searching qubits t..t+n-1.
GenResult gen_quantum_counting(const CountingParams &params);

/// Iteration count used when WalkParams::iterations is unset.
std::size_t walk_optimal_iterations(std::size_t coin_width, std::uint64_t solutions);

/// Coined walk search on the hypercube of dimension d = 2^p.
/// Layout: theta 0..t-1, node t..t+d-1 (measured), coin next p qubits,
/// then one ancilla. The coin value selects which node qubit to flip.
/// Throws resource_limit past 2^20 controlled walk steps, which rules out
/// the default p = 4 (65535 steps per estimation pass).
GenResult gen_quantum_walk(const WalkParams &params);

}  // namespace qgen
