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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qgen/circuit.h"

namespace qgen {

enum class Algorithm {
    dj,
    bv,
    simon,
    qft,
    qpe,
    shor,
    grover,
    counting,
    walk,
    qkd,
    superdense,
    teleport,
    qaoa,
    vqe,
    vqc,
};

inline constexpr std::array<Algorithm, 15> kAllAlgorithms = {
    Algorithm::dj,       Algorithm::bv,         Algorithm::simon,    Algorithm::qft,
    Algorithm::qpe,      Algorithm::shor,       Algorithm::grover,   Algorithm::counting,
    Algorithm::walk,     Algorithm::qkd,        Algorithm::superdense, Algorithm::teleport,
    Algorithm::qaoa,     Algorithm::vqe,        Algorithm::vqc,
};

/// Short id used on the command line and in manifests ("dj", "grover", ...).
std::string_view algorithm_id(Algorithm algo);

/// One of "query", "fourier", "search", "communication", "variational".
std::string_view category_of(Algorithm algo);

/// Accepts the short id or a long name such as "deutsch-jozsa".
Algorithm parse_algorithm(std::string_view name);

/// Everything needed to check a circuit's output without re-running the
/// generator. `params` echoes the resolved inputs; `hidden` holds the
/// secrets (oracle strings, marked states, bases, angles).
struct AlgoMetadata {
    Algorithm algorithm = Algorithm::dj;
    std::size_t problem_size = 0;
    std::uint64_t seed = 0;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json hidden = nlohmann::json::object();
};

void to_json(nlohmann::json &j, const AlgoMetadata &m);
void from_json(const nlohmann::json &j, AlgoMetadata &m);

struct GenResult {
    Circuit circuit;
    AlgoMetadata metadata;
};

/// Uniform entry point used by the CLI and the dataset builder. `options`
/// holds algorithm-specific knobs by name (see each generator header); a
/// missing key takes the generator default. For Shor the problem size is N,
/// and a screening failure is reported as invalid_argument.
GenResult generate(Algorithm algo, std::size_t problem_size, std::uint64_t seed,
                   const nlohmann::json &options = nlohmann::json::object());

}  // namespace qgen
