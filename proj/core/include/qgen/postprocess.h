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
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/algorithm.h"
#include "qgen/simulator.h"

namespace qgen {

/// Rows of a linear system over GF(2), each a bitstring of `width` bits.
struct Gf2System {
    std::size_t width = 0;
    std::vector<std::string> rows;
};

enum class SimonStatus { found, insufficient, one_to_one };

struct SimonSolution {
    SimonStatus status = SimonStatus::insufficient;
    std::string secret;  // set when status == found
    std::size_t rank = 0;
};

/// Nullspace of the sample rows. A rank of n-1 yields the unique nonzero s;
/// rank n means only s = 0 fits.
SimonSolution simon_solve(const Gf2System &samples);

enum class FactorStatus { classical_shortcut, lucky_gcd, success, retry_needed };

std::string_view to_string(FactorStatus status);

struct FactorResult {
    std::uint64_t N = 0;
    std::uint64_t a = 0;
    std::optional<std::uint64_t> measured;
    std::optional<std::uint64_t> period;
    std::vector<std::uint64_t> factors;  // ascending
    FactorStatus status = FactorStatus::retry_needed;
};

/// Classical screening ahead of Shor: even, prime, perfect-power or
/// non-coprime inputs are settled without a circuit. Returns nullopt when a
/// quantum period search is needed. N < 3 or a outside (1, N) throws
/// invalid_argument.
std::optional<FactorResult> shor_screen(std::uint64_t N,
                                        std::optional<std::uint64_t> a = std::nullopt);

/// Period recovery from a counting-register reading x over t bits.
FactorResult shor_postprocess(std::uint64_t x, std::size_t t, std::uint64_t N, std::uint64_t a);

/// M estimate 2^n sin^2(pi x / 2^t).
double counting_estimate(std::uint64_t x, std::size_t t, std::size_t n);

enum class QkdVerdict { clean, detected, inconclusive };

std::string_view to_string(QkdVerdict verdict);

struct QkdSift {
    std::vector<std::size_t> positions;  // qubits where sender and receiver bases agree
    std::string key;                     // sender bits at those positions, first position last
    std::uint64_t compared_bits = 0;     // positions x shots
    std::uint64_t mismatches = 0;
    double mismatch_rate = 0.0;
    QkdVerdict verdict = QkdVerdict::inconclusive;
};

/// Compares the receiver's bits against the sender's at sifted positions,
/// over every shot in `histogram`.
QkdSift qkd_sift(const AlgoMetadata &metadata, const Histogram &histogram);

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict verdict);

/// Pass thresholds. The score is the histogram mass on correct outcomes.
struct VerifyPolicy {
    double deterministic = 0.99;
    double grover = 0.9;
    double walk = 0.5;
    /// QPE with an inexact phase: mass on readings within 1.5 grid steps
    /// of the true phase.
    double qpe_window = 0.8;
    /// Shor: mass on readings that factor N in one pass.
    double shor = 0.1;
};

struct Verification {
    Algorithm algorithm = Algorithm::dj;
    Verdict verdict = Verdict::inconclusive;
    double score = 0.0;
    nlohmann::json details = nlohmann::json::object();
};

Verification verify(const AlgoMetadata &metadata, const Histogram &histogram,
                    const VerifyPolicy &policy = {});
/// As above; for the variational family, whose output has no single right
/// answer, the score is the Bhattacharyya coefficient against the exact
/// distribution (width <= 16) and the verdict stays inconclusive.
Verification verify(const GenResult &result, const Histogram &histogram,
                    const VerifyPolicy &policy = {});

void to_json(nlohmann::json &j, const Verification &v);

}  // namespace qgen
