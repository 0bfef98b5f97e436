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

#include "qgen/algorithm.h"

namespace qgen {

// Oracle strings use histogram order: the last character belongs to qubit 0.

enum class DjOracle { constant, balanced };

struct DjParams {
    std::size_t problem_size = 2;
    DjOracle oracle = DjOracle::constant;
    /// f for the constant oracle; nullopt draws it from the seed.
    std::optional<int> constant_value = 1;
    /// Input-wrapping pattern b for the balanced oracle; nullopt draws it.
    std::optional<std::string> pattern;
    std::uint64_t seed = 0;
};

struct BvParams {
    std::size_t problem_size = 2;
    std::optional<std::string> secret;
    std::uint64_t seed = 0;
};

struct SimonParams {
    std::size_t problem_size = 2;
    /// An explicit all-zero secret is allowed (one-to-one f); random draws
    /// never produce it.
    std::optional<std::string> secret;
    std::uint64_t seed = 0;
};

/// Inputs are qubits 0..n-1, the output qubit is n. Measures inputs only.
GenResult gen_deutsch_jozsa(const DjParams &params);

/// Inputs 0..n-1, phase-kickback qubit n. The outcome is the secret.
GenResult gen_bernstein_vazirani(const BvParams &params);

/// First register 0..n-1 (measured), second register n..2n-1.
GenResult gen_simon(const SimonParams &params);

}  // namespace qgen
