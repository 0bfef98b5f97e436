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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgen/algorithm.h"

namespace qgen {

struct QkdParams {
    std::size_t problem_size = 2;
    bool interception = true;
    std::uint64_t seed = 0;
};

struct SuperdenseParams {
    std::size_t problem_size = 2;  // even
    /// Histogram-order bitstring of length n; nullopt draws it.
    std::optional<std::string> message;
    std::uint64_t seed = 0;
};

struct TeleportParams {
    std::size_t problem_size = 1;  // number of sets k
    /// Per-set U3 angles (theta, phi, lambda); nullopt draws them from [0, 2 pi).
    std::optional<std::vector<std::array<double, 3>>> states;
    std::uint64_t seed = 0;
};

/// One qubit per key bit. With interception, clbit i holds the attacker's
/// reading of qubit i and clbit n+i the receiver's; without it the receiver
/// uses clbits 0..n-1. Basis changes on either side of a measurement are
/// merged, so each qubit carries at most X, H, MEASURE, H, MEASURE.
GenResult gen_qkd(const QkdParams &params);

/// Bell pairs (2i, 2i+1); qubit 2i is the sender's. Clbit 2i+1 of the
/// message selects X and clbit 2i selects Z on the sender qubit.
GenResult gen_superdense(const SuperdenseParams &params);

/// Set s uses qubits 3s, 3s+1, 3s+2 and clbit s. Corrections are coherent
/// (deferred measurement) and the adjoint preparation runs on the
/// destination, so every set reads 0.
GenResult gen_teleport(const TeleportParams &params);

}  // namespace qgen
